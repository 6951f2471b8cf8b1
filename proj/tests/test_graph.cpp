#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "fchrom/graph.hpp"
#include "oracles.hpp"

using namespace fchrom;

namespace {

void expect_well_formed(const Graph& g) {
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    degree_sum += g.degree(v);
    for (Vertex u : g.neighbors(v)) {
      EXPECT_NE(u, v);
      EXPECT_TRUE(g.adjacent(u, v)) << "asymmetric adjacency " << u << "-" << v;
    }
  }
  EXPECT_EQ(degree_sum, 2 * g.edge_count());
}

}  // namespace

TEST(Generators, CompleteGraph) {
  EXPECT_EQ(complete_graph(1).edge_count(), 0u);
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(k4.vertex_count(), 4u);
  EXPECT_EQ(k4.edge_count(), 6u);
  const Graph k5 = complete_graph(5);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(k5.degree(v), 4u);
  EXPECT_THROW(complete_graph(0), InvalidArgument);
  for (std::size_t n = 1; n <= 9; ++n) {
    expect_well_formed(complete_graph(n));
    EXPECT_EQ(complete_graph(n).edge_count(), n * (n - 1) / 2);
  }
}

TEST(Generators, CycleGraph) {
  EXPECT_EQ(cycle_graph(3), complete_graph(3));
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(c5.edge_count(), 5u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2u);
  // C_6 splits into the even and odd classes, both independent.
  const Graph c6 = cycle_graph(6);
  for (const auto& [u, v] : c6.edges()) EXPECT_NE(u % 2, v % 2);
  EXPECT_THROW(cycle_graph(2), InvalidArgument);
  for (std::size_t n = 3; n <= 12; ++n) expect_well_formed(cycle_graph(n));
}

TEST(Generators, KneserGraph) {
  const Graph petersen = kneser_graph(5, 2);
  EXPECT_EQ(petersen.vertex_count(), 10u);
  EXPECT_EQ(petersen.edge_count(), 15u);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(petersen.degree(v), 3u);
  EXPECT_EQ(petersen.labels().front(), "{1,2}");
  EXPECT_EQ(petersen.labels().back(), "{4,5}");
  EXPECT_EQ(oracle::triangle_count(petersen), 0u);

  const Graph matching = kneser_graph(4, 2);
  EXPECT_EQ(matching.vertex_count(), 6u);
  EXPECT_EQ(matching.edge_count(), 3u);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(matching.degree(v), 1u);

  const Graph single = kneser_graph(2, 1);
  EXPECT_EQ(single.vertex_count(), 2u);
  EXPECT_EQ(single.edge_count(), 1u);

  EXPECT_THROW(kneser_graph(3, 2), InvalidArgument);
  EXPECT_THROW(kneser_graph(4, 0), InvalidArgument);
  EXPECT_THROW(kneser_graph(40, 10), ResourceLimit);
}

TEST(Generators, Mycielskian) {
  const Graph c5_like = mycielskian(complete_graph(2));
  EXPECT_EQ(c5_like.vertex_count(), 5u);
  EXPECT_EQ(c5_like.edge_count(), 5u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(c5_like.degree(v), 2u);

  // Standard construction on K_1: shadow joined to the apex, original isolated.
  const Graph from_k1 = mycielskian(edgeless_graph(1));
  EXPECT_EQ(from_k1.vertex_count(), 3u);
  EXPECT_EQ(from_k1.edge_count(), 1u);
  EXPECT_EQ(from_k1.degree(0), 0u);

  const Graph grotzsch = mycielskian(cycle_graph(5));
  EXPECT_EQ(grotzsch.vertex_count(), 11u);
  EXPECT_EQ(grotzsch.edge_count(), 20u);
  EXPECT_EQ(oracle::triangle_count(grotzsch), 0u);
  expect_well_formed(grotzsch);
}

TEST(Graph, RejectsMalformedEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidArgument);
  EXPECT_THROW(Graph(20, {}, 10), ResourceLimit);
}

TEST(Graph, VertexSetRejectsDuplicates) {
  EXPECT_THROW(VertexSet({1, 2, 1}), InvalidArgument);
  EXPECT_EQ(VertexSet({3, 1, 2}).items(), (std::vector<Vertex>{1, 2, 3}));
}

TEST(Structure, InducedSubgraph) {
  const Graph c5 = cycle_graph(5);
  const auto whole = induced_subgraph(c5, VertexSet::range(5));
  EXPECT_EQ(whole.graph, c5);

  const auto none = induced_subgraph(c5, VertexSet{});
  EXPECT_EQ(none.graph.vertex_count(), 0u);

  const auto path = induced_subgraph(c5, VertexSet{0, 1, 2});
  EXPECT_EQ(path.graph.edge_count(), 2u);
  EXPECT_EQ(path.to_host, (std::vector<Vertex>{0, 1, 2}));

  EXPECT_THROW(induced_subgraph(c5, VertexSet{0, 7}), InvalidArgument);
}

TEST(Structure, EdgeCountWithinAndAverageDegree) {
  const Graph k4 = complete_graph(4);
  EXPECT_EQ(edge_count_within(k4, VertexSet{0, 1, 2}), 3u);
  EXPECT_EQ(edge_count_within(k4, VertexSet{2}), 0u);
  EXPECT_EQ(edge_count_within(k4, VertexSet{}), 0u);
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(edge_count_within(c5, VertexSet{0, 1, 2}), 2u);

  EXPECT_EQ(average_degree(k4, VertexSet::range(4)), Rational(3));
  EXPECT_EQ(average_degree(c5, VertexSet{0, 1, 2}), Rational(4, 3));
  EXPECT_EQ(average_degree(c5, VertexSet{0, 2}), Rational(0));
  EXPECT_THROW(average_degree(c5, VertexSet{}), InvalidArgument);
}

TEST(Structure, AverageDegreeIdentityOnRandomSubsets) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(12, 0.4, rng);
    const std::uint64_t mask = rng() & 0xFFF;
    if (mask == 0) continue;
    const VertexSet a = VertexSet::from_mask(mask);
    EXPECT_EQ(average_degree(g, a) * static_cast<long>(a.size()),
              Rational(Integer(2 * edge_count_within(g, a))));
    EXPECT_EQ(edge_count_within(g, a), edge_count_within(g, mask));
  }
}

TEST(Structure, DegeneracyOrdering) {
  EXPECT_EQ(degeneracy_ordering(path_graph(6)).degeneracy, 1u);
  EXPECT_EQ(degeneracy_ordering(cycle_graph(7)).degeneracy, 2u);
  EXPECT_EQ(degeneracy_ordering(complete_graph(6)).degeneracy, 5u);
  // Ties go to the smallest index.
  EXPECT_EQ(degeneracy_ordering(cycle_graph(5)).removal_order.front(), 0u);
  EXPECT_EQ(degeneracy_ordering(edgeless_graph(4)).removal_order, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(Structure, GreedyColoringInReverseDegeneracyOrderIsProper) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 50;
    const Graph g = random_graph(n, 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0, rng);
    const auto degen = degeneracy_ordering(g);
    auto order = degen.removal_order;
    std::reverse(order.begin(), order.end());
    const auto colors = greedy_coloring(g, order);
    for (const auto& [u, v] : g.edges()) EXPECT_NE(colors[u], colors[v]);
    EXPECT_LE(*std::max_element(colors.begin(), colors.end()) + 1, degen.degeneracy + 1);
    EXPECT_LE(greedy_chromatic_bound(g), degen.degeneracy + 1);
  }
}

TEST(Dimacs, WritesSortedOneBasedEdges) {
  EXPECT_EQ(to_dimacs(complete_graph(3)), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
}

TEST(Dimacs, RoundTripIsBitExact) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(1 + rng() % 20, 0.3, rng);
    const std::string text = to_dimacs(g);
    EXPECT_EQ(to_dimacs(from_dimacs(text)), text);
    EXPECT_EQ(from_dimacs(text), g);
  }
}

TEST(Dimacs, ReaderAcceptsCommentsAndUnsortedEdges) {
  const Graph g = from_dimacs("c a comment\np edge 4 2\n\ne 4 1\nc mid\ne 3 2\n");
  EXPECT_EQ(to_dimacs(g), "p edge 4 2\ne 1 4\ne 2 3\n");
}

TEST(Dimacs, ReaderRejectsMalformedInput) {
  EXPECT_THROW(from_dimacs("e 1 2\n"), InvalidArgument);
  EXPECT_THROW(from_dimacs("p edge 3 1\ne 1 4\n"), InvalidArgument);
  EXPECT_THROW(from_dimacs("p edge 3 2\ne 1 2\n"), InvalidArgument);
  EXPECT_THROW(from_dimacs("p edge 3 1\ne 2 2\n"), InvalidArgument);
  EXPECT_THROW(from_dimacs("p edge 3 1\nx 1 2\n"), InvalidArgument);
  EXPECT_THROW(from_dimacs(""), InvalidArgument);
}
