#include <random>

#include <gtest/gtest.h>

#include "fchrom/order.hpp"
#include "oracles.hpp"

using namespace fchrom;

namespace {

// Definition straight from prefixes: x sparse iff |Y_k ∩ X| < k/s for every k.
bool sparse_by_prefix_counts(const std::vector<Vertex>& ranked_y, const VertexSet& x, const Rational& s) {
  std::size_t count = 0;
  for (std::size_t k = 1; k <= ranked_y.size(); ++k) {
    if (x.contains(ranked_y[k - 1])) ++count;
    if (Rational(Integer(count)) >= Rational(Integer(k)) / s) return false;
  }
  return true;
}

const std::vector<Rational> kScales{Rational(1), Rational(3, 2), Rational(2), Rational(5, 2), Rational(3)};

}  // namespace

TEST(OrderedGround, RanksFollowWeights) {
  const OrderedGround ground(WeightFunction({Rational(1), Rational(5), Rational(5), Rational(2)}));
  EXPECT_EQ(ground.ordering(), (std::vector<Vertex>{1, 2, 3, 0}));
  EXPECT_EQ(ground.rank(1), 1u);
  EXPECT_EQ(ground.rank(0), 4u);
  EXPECT_EQ(ground.ranked(VertexSet{0, 2}), (std::vector<Vertex>{2, 0}));
  EXPECT_THROW(ground.ranked(VertexSet{9}), InvalidArgument);
}

TEST(Prefix, FloorOfLength) {
  const auto ground = OrderedGround::identity(6);
  const VertexSet y{1, 3, 4, 5};
  EXPECT_EQ(prefix(ground, y, Rational(5, 2)), (VertexSet{1, 3}));
  EXPECT_EQ(prefix(ground, y, Rational(1, 2)), VertexSet{});
  EXPECT_EQ(prefix(ground, y, Rational(10)), y);
}

TEST(Principal, Examples) {
  const auto ground = OrderedGround::identity(6);
  EXPECT_TRUE(is_principal(ground, VertexSet{0}, Rational(1)));
  EXPECT_FALSE(is_principal(ground, VertexSet{1}, Rational(1)));
  EXPECT_TRUE(is_principal(ground, VertexSet{1}, Rational(2)));
  EXPECT_TRUE(is_principal(ground, VertexSet{0, 3}, Rational(2)));
  EXPECT_FALSE(is_principal(ground, VertexSet{0, 4}, Rational(2)));
  EXPECT_THROW(is_principal(ground, VertexSet{}, Rational(1)), InvalidArgument);
  EXPECT_THROW(is_principal(ground, VertexSet{0}, Rational(1, 2)), InvalidArgument);
  EXPECT_THROW(is_principal(ground, VertexSet{0, 2}, VertexSet{0, 1}, Rational(1)), InvalidArgument);
}

TEST(Sparse, SingletonRule) {
  // {v} is s-sparse in Y iff v's position in Y exceeds s.
  const auto ground = OrderedGround::identity(8);
  const VertexSet y = ground.all();
  for (const auto& s : kScales)
    for (Vertex v = 0; v < 8; ++v)
      EXPECT_EQ(is_sparse(ground, VertexSet{v}, y, s).sparse, Rational(Integer(v + 1)) > s)
          << "v=" << v << " s=" << to_string(s);
}

TEST(Sparse, WitnessReportsFirstFailingPrefix) {
  const auto ground = OrderedGround::identity(6);
  const auto report = is_sparse(ground, VertexSet{2, 3}, Rational(2));
  EXPECT_FALSE(report.sparse);
  EXPECT_EQ(report.witness_k, 4u);
  EXPECT_EQ(report.count, 2u);
  EXPECT_TRUE(is_sparse(ground, VertexSet{}, Rational(3)).sparse);
}

TEST(Sparse, CharacterizationMatchesDefinitionExhaustively) {
  for (std::size_t m : {6u, 8u, 10u}) {
    const auto ground = OrderedGround::identity(m);
    const VertexSet y = ground.all();
    const auto ranked = ground.ranked(y);
    for (const auto& s : kScales)
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        const VertexSet x = VertexSet::from_mask(mask);
        const bool fast = is_sparse(ground, x, y, s).sparse;
        ASSERT_EQ(fast, is_sparse_bruteforce(ground, x, y, s)) << "m=" << m << " mask=" << mask;
        ASSERT_EQ(fast, sparse_by_prefix_counts(ranked, x, s));
      }
  }
}

TEST(Sparse, DownwardClosedAndCardinalityBound) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 4 + rng() % 12;
    const OrderedGround ground(oracle::random_weights(n, rng));
    const VertexSet y = VertexSet::from_mask(rng() & ((std::uint64_t{1} << n) - 1));
    const VertexSet x = VertexSet::from_mask(y.mask() & rng());
    const Rational s = kScales[rng() % kScales.size()];
    if (!is_sparse(ground, x, y, s).sparse) continue;
    EXPECT_LT(Rational(Integer(x.size())) * s, Rational(Integer(y.size())) + (y.empty() ? 1 : 0));
    const VertexSet sub = VertexSet::from_mask(x.mask() & rng());
    EXPECT_TRUE(is_sparse(ground, sub, y, s).sparse);
  }
}

TEST(SparseWeightBound, HoldsOnRandomInstances) {
  std::mt19937_64 rng(4242);
  std::size_t checked = 0;
  while (checked < 10000) {
    const std::size_t n = 1 + rng() % 12;
    const WeightFunction w = oracle::random_weights(n, rng);
    const OrderedGround ground(w);
    const VertexSet y = VertexSet::from_mask(rng() & ((std::uint64_t{1} << n) - 1));
    const VertexSet x = VertexSet::from_mask(y.mask() & rng() & rng());
    const Rational s = kScales[rng() % kScales.size()];
    if (!is_sparse(ground, x, y, s).sparse) {
      EXPECT_THROW(sparse_weight_bound_check(ground, w, x, y, s), ContractViolation);
      continue;
    }
    const auto check = sparse_weight_bound_check(ground, w, x, y, s);
    ASSERT_TRUE(check.holds) << to_string(check.lhs) << " > " << to_string(check.rhs);
    ++checked;
  }
}

TEST(DensePrincipal, MatchesScan) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 9;
    const Graph g = random_graph(n, 0.6, rng);
    const OrderedGround ground(oracle::random_weights(n, rng));
    const Rational s = kScales[rng() % kScales.size()];
    const Rational threshold(static_cast<long>(rng() % 5), 2);
    EXPECT_EQ(dense_principal_subsets(g, ground, ground.all(), s, threshold),
              oracle::dense_principal_by_scan(g, ground, s, threshold));
  }
  EXPECT_THROW(dense_principal_subsets(edgeless_graph(21), OrderedGround::identity(21), VertexSet::range(21),
                                       Rational(1), Rational(1)),
               ResourceLimit);
}
