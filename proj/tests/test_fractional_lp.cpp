#include <random>

#include <gtest/gtest.h>

#include "fchrom/exact_simplex.hpp"
#include "fchrom/fractional_lp.hpp"
#include "oracles.hpp"

using namespace fchrom;

TEST(ExactSimplex, SmallPackingProblem) {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6: optimum at (8/5, 6/5).
  ExactSimplex lp({{Rational(1), Rational(2)}, {Rational(3), Rational(1)}}, {Rational(4), Rational(6)},
                  {Rational(1), Rational(1)});
  const auto r = lp.solve();
  EXPECT_EQ(r.objective, Rational(14, 5));
  EXPECT_EQ(r.primal, (std::vector<Rational>{Rational(8, 5), Rational(6, 5)}));
  // Duals certify the objective: 4 u1 + 6 u2.
  EXPECT_EQ(4 * r.dual[0] + 6 * r.dual[1], r.objective);
}

TEST(WeightFunction, OrderingAndValidation) {
  const WeightFunction w({Rational(1), Rational(3), Rational(1), Rational(2)});
  EXPECT_EQ(w.ordering(), (std::vector<Vertex>{1, 3, 0, 2}));
  EXPECT_EQ(w.total(), Rational(7));
  EXPECT_EQ(w.weight_of(VertexSet{0, 3}), Rational(3));
  EXPECT_THROW(WeightFunction({Rational(-1, 2)}), InvalidArgument);
}

TEST(ChiF, CompleteGraphs) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const Graph g = complete_graph(n);
    const auto cert = solve_chi_f(g);
    EXPECT_EQ(cert.value, Rational(Integer(n)));
    EXPECT_TRUE(verify_certificate(g, cert));
  }
}

TEST(ChiF, OddCycles) {
  for (std::size_t k = 1; k <= 6; ++k) {
    const Graph g = cycle_graph(2 * k + 1);
    const auto cert = solve_chi_f(g);
    EXPECT_EQ(cert.value, 2 + Rational(1, static_cast<long>(k)));
    EXPECT_TRUE(verify_certificate(g, cert));
  }
  EXPECT_EQ(solve_chi_f(cycle_graph(8)).value, Rational(2));
}

TEST(ChiF, FiveCycleCertificate) {
  const auto cert = solve_chi_f(cycle_graph(5));
  EXPECT_EQ(cert.value, Rational(5, 2));
  const auto support = cert.primal_support();
  EXPECT_EQ(support.size(), 5u);
  for (const auto& e : support) EXPECT_EQ(e.y, Rational(1, 2));
  for (const auto& w : cert.dual.weights()) EXPECT_EQ(w, Rational(1, 2));
}

TEST(ChiF, NamedGraphs) {
  EXPECT_EQ(solve_chi_f(kneser_graph(5, 2)).value, Rational(5, 2));
  EXPECT_EQ(solve_chi_f(kneser_graph(6, 2)).value, Rational(3));
  // Mycielskian step: chi_f(M(G)) = chi_f(G) + 1/chi_f(G).
  EXPECT_EQ(solve_chi_f(mycielskian(cycle_graph(5))).value, Rational(29, 10));
  EXPECT_EQ(solve_chi_f(edgeless_graph(4)).value, Rational(1));
  EXPECT_THROW(solve_chi_f(edgeless_graph(0)), InvalidArgument);
}

TEST(ChiF, VertexTransitiveGraphsMatchNOverAlpha) {
  for (const Graph& g : {kneser_graph(5, 2), kneser_graph(6, 2), cycle_graph(9), cycle_graph(11), complete_graph(6)}) {
    const Rational expected(Integer(g.vertex_count()), Integer(oracle::alpha(g)));
    EXPECT_EQ(solve_chi_f(g).value, expected);
  }
}

TEST(ChiF, SandwichAndSubgraphMonotonicity) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Graph g = random_graph(n, static_cast<double>(rng() % 100) / 100.0, rng);
    const auto cert = solve_chi_f(g);
    EXPECT_TRUE(verify_certificate(g, cert));
    EXPECT_GE(cert.value, Rational(Integer(n), Integer(oracle::alpha(g))));
    EXPECT_LE(cert.value, Rational(Integer(greedy_chromatic_bound(g))));
    if (g.edge_count() > 0) {
      auto edges = g.edges();
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(rng() % edges.size()));
      EXPECT_LE(solve_chi_f(Graph(n, edges)).value, cert.value);
    }
  }
}

TEST(CertificateCheck, RejectsTamperedCertificates) {
  const Graph c5 = cycle_graph(5);
  const auto good = solve_chi_f(c5);
  ASSERT_TRUE(check_certificate(c5, good).ok());

  auto wrong_value = good;
  wrong_value.value += Rational(1, 100);
  EXPECT_FALSE(check_certificate(c5, wrong_value).objectives_match);

  auto bad_dual = good;
  std::vector<Rational> w = good.dual.weights();
  w[0] += Rational(1, 2);
  bad_dual.dual = WeightFunction(w);
  const auto dual_check = check_certificate(c5, bad_dual);
  EXPECT_FALSE(dual_check.dual_feasible);
  EXPECT_FALSE(dual_check.failure.empty());

  auto not_independent = good;
  not_independent.primal[0].set = VertexSet{0, 1};
  EXPECT_FALSE(check_certificate(c5, not_independent).primal_feasible);

  auto uncovered = good;
  for (auto& e : uncovered.primal)
    if (e.set.contains(0)) e.y = 0;
  EXPECT_FALSE(check_certificate(c5, uncovered).primal_feasible);
}
