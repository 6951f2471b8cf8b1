#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fchrom/rational.hpp"

namespace fchrom {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kDefaultMaxVertices = 10'000;

// Sorted, duplicate-free list of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> items) : VertexSet(std::vector<Vertex>(items)) {}
  explicit VertexSet(std::vector<Vertex> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    if (std::adjacent_find(items_.begin(), items_.end()) != items_.end())
      throw InvalidArgument("vertex set contains a duplicate index");
  }

  static VertexSet range(std::size_t n) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    return VertexSet(std::move(all));
  }

  static VertexSet from_mask(std::uint64_t mask) {
    std::vector<Vertex> items;
    for (Vertex v = 0; mask != 0; ++v, mask >>= 1)
      if (mask & 1u) items.push_back(v);
    VertexSet out;
    out.items_ = std::move(items);
    return out;
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(Vertex v) const { return std::binary_search(items_.begin(), items_.end(), v); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  Vertex operator[](std::size_t i) const { return items_[i]; }
  const std::vector<Vertex>& items() const { return items_; }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
  }

  // Requires every index < 64.
  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (Vertex v : items_) {
      if (v >= 64) throw ResourceLimit("vertex set does not fit a 64-bit mask");
      m |= std::uint64_t{1} << v;
    }
    return m;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.items_ <=> b.items_; }

 private:
  std::vector<Vertex> items_;
};

// Undirected simple graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, std::vector<Edge> edges, std::size_t max_vertices = kDefaultMaxVertices)
      : n_(n), adjacency_(n) {
    if (n > max_vertices)
      throw ResourceLimit("graph has " + std::to_string(n) + " vertices; cap is " + std::to_string(max_vertices));
    for (auto& [u, v] : edges) {
      if (u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
      if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw InvalidArgument("duplicate edge");
    edges_ = std::move(edges);
    for (const auto& [u, v] : edges_) {
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    if (n_ <= 64) {
      masks_.assign(n_, 0);
      for (const auto& [u, v] : edges_) {
        masks_[u] |= std::uint64_t{1} << v;
        masks_[v] |= std::uint64_t{1} << u;
      }
    }
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  // Sorted, each edge as (u, v) with u < v.
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const {
    const auto& nbrs = adjacency_.at(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  bool fits_mask() const { return n_ <= 64; }
  // Neighborhood bitmask; only for graphs with at most 64 vertices.
  std::uint64_t neighbor_mask(Vertex v) const {
    if (!fits_mask()) throw ResourceLimit("graph too large for bitmask adjacency");
    return masks_[v];
  }

  // Optional per-vertex names (Kneser graphs record their k-subsets here).
  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const {
    if (labels.size() != n_) throw InvalidArgument("label count does not match vertex count");
    Graph copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
  }

  void check(const VertexSet& a) const {
    if (!a.empty() && a.items().back() >= n_)
      throw InvalidArgument("vertex index " + std::to_string(a.items().back()) + " out of range");
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Generators

inline Graph edgeless_graph(std::size_t n) { return Graph(n, {}); }

inline Graph complete_graph(std::size_t n, std::size_t max_vertices = kDefaultMaxVertices) {
  if (n == 0) throw InvalidArgument("complete graph needs n >= 1");
  if (n > max_vertices) throw ResourceLimit("complete graph exceeds vertex cap");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges), max_vertices);
}

inline Graph cycle_graph(std::size_t n, std::size_t max_vertices = kDefaultMaxVertices) {
  if (n < 3) throw InvalidArgument("cycle graph needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph(n, std::move(edges), max_vertices);
}

inline Graph path_graph(std::size_t n) {
  if (n == 0) throw InvalidArgument("path graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, std::move(edges));
}

// Vertices are the k-subsets of {1..n} in lexicographic order; edges join
// disjoint subsets. Labels hold the subsets, e.g. "{1,2}".
inline Graph kneser_graph(std::size_t n, std::size_t k, std::size_t max_vertices = kDefaultMaxVertices) {
  if (k < 1 || n < 2 * k) throw InvalidArgument("kneser graph needs n >= 2k >= 2");
  // C(n, k) with an early cap check.
  std::size_t count = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    count = count * (n - k + i) / i;
    if (count > max_vertices) throw ResourceLimit("kneser graph exceeds vertex cap");
  }
  std::vector<std::vector<unsigned>> subsets;
  std::vector<unsigned> current(k);
  std::iota(current.begin(), current.end(), 1u);
  while (true) {
    subsets.push_back(current);
    // Advance to the lexicographic successor.
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + i) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  std::vector<Edge> edges;
  for (Vertex a = 0; a < subsets.size(); ++a)
    for (Vertex b = a + 1; b < subsets.size(); ++b) {
      std::vector<unsigned> common;
      std::set_intersection(subsets[a].begin(), subsets[a].end(), subsets[b].begin(), subsets[b].end(),
                            std::back_inserter(common));
      if (common.empty()) edges.emplace_back(a, b);
    }
  std::vector<std::string> labels;
  for (const auto& s : subsets) {
    std::string label = "{";
    for (std::size_t i = 0; i < s.size(); ++i) label += (i ? "," : "") + std::to_string(s[i]);
    labels.push_back(label + "}");
  }
  return Graph(subsets.size(), std::move(edges), max_vertices).with_labels(std::move(labels));
}

// Mycielski construction: vertex i keeps its index, its shadow is n+i, the
// apex is 2n. Shadow n+i is joined to N(i); the apex to every shadow.
inline Graph mycielskian(const Graph& g, std::size_t max_vertices = kDefaultMaxVertices) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges = g.edges();
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(u, n + v);
    edges.emplace_back(v, n + u);
  }
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(n + i, 2 * n);
  return Graph(2 * std::size_t{n} + 1, std::move(edges), max_vertices);
}

// G(n, p) with a caller-provided engine; used for randomized test instances.
template <class Engine>
Graph random_graph(std::size_t n, double edge_probability, Engine& engine) {
  std::bernoulli_distribution keep(edge_probability);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (keep(engine)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Structural queries

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;  // new index -> index in the host graph
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& a) {
  g.check(a);
  std::vector<Vertex> local(g.vertex_count(), Vertex(-1));
  for (std::size_t i = 0; i < a.size(); ++i) local[a[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (local[u] != Vertex(-1) && local[v] != Vertex(-1)) edges.emplace_back(local[u], local[v]);
  return {Graph(a.size(), std::move(edges), std::max(a.size(), kDefaultMaxVertices)), a.items()};
}

// e(A): number of edges with both endpoints in a.
inline std::size_t edge_count_within(const Graph& g, const VertexSet& a) {
  g.check(a);
  std::size_t count = 0;
  for (Vertex v : a)
    for (Vertex u : g.neighbors(v))
      if (u < v && a.contains(u)) ++count;
  return count;
}

inline std::size_t edge_count_within(const Graph& g, std::uint64_t mask) {
  std::size_t twice = 0;
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
    twice += static_cast<std::size_t>(std::popcount(g.neighbor_mask(static_cast<Vertex>(std::countr_zero(rest))) & mask));
  return twice / 2;
}

// 2 e(A) / |A| as an exact rational.
inline Rational average_degree(const Graph& g, const VertexSet& a) {
  if (a.empty()) throw InvalidArgument("average degree of an empty set");
  return Rational(Integer(2 * edge_count_within(g, a)), Integer(a.size()));
}

struct DegeneracyOrdering {
  std::vector<Vertex> removal_order;  // vertices in the order they were removed
  std::size_t degeneracy = 0;
};

// Repeatedly removes a minimum-degree vertex (ties: smallest index).
inline DegeneracyOrdering degeneracy_ordering(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> degree(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.emplace(degree[v], v);
  }
  std::vector<bool> removed(n, false);
  DegeneracyOrdering out;
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    out.removal_order.push_back(v);
    out.degeneracy = std::max(out.degeneracy, d);
    for (Vertex u : g.neighbors(v)) {
      if (removed[u]) continue;
      queue.erase({degree[u], u});
      queue.emplace(--degree[u], u);
    }
  }
  return out;
}

// Greedy coloring in the given vertex order: each vertex takes the smallest
// color unused by its already-colored neighbors.
inline std::vector<std::size_t> greedy_coloring(const Graph& g, const std::vector<Vertex>& order) {
  constexpr auto kUncolored = static_cast<std::size_t>(-1);
  std::vector<std::size_t> color(g.vertex_count(), kUncolored);
  std::vector<bool> taken;
  for (Vertex v : order) {
    taken.assign(g.degree(v) + 1, false);
    for (Vertex u : g.neighbors(v))
      if (color[u] != kUncolored && color[u] < taken.size()) taken[color[u]] = true;
    color[v] = static_cast<std::size_t>(std::find(taken.begin(), taken.end(), false) - taken.begin());
  }
  return color;
}

// Upper bound on the chromatic number: greedy along reverse degeneracy order.
inline std::size_t greedy_chromatic_bound(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  auto order = degeneracy_ordering(g).removal_order;
  std::reverse(order.begin(), order.end());
  const auto colors = greedy_coloring(g, order);
  return *std::max_element(colors.begin(), colors.end()) + 1;
}

// ---------------------------------------------------------------------------
// DIMACS edge format: "p edge <n> <m>" then "e <u> <v>" lines, 1-based.

inline void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

inline std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  write_dimacs(out, g);
  return out.str();
}

inline Graph read_dimacs(std::istream& in, std::size_t max_vertices = kDefaultMaxVertices) {
  std::string line;
  bool have_header = false;
  std::size_t n = 0, m = 0, line_no = 0;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& why) {
    throw InvalidArgument("DIMACS line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string format;
      if (have_header) fail("second problem line");
      if (!(fields >> format >> n >> m) || (format != "edge" && format != "col")) fail("malformed problem line");
      if (n > max_vertices) throw ResourceLimit("DIMACS graph exceeds vertex cap");
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail("edge before problem line");
      long long u = 0, v = 0;
      if (!(fields >> u >> v)) fail("malformed edge line");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
        fail("vertex index out of range");
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      fail("unknown line type '" + tag + "'");
    }
  }
  if (!have_header) throw InvalidArgument("DIMACS input has no problem line");
  if (edges.size() != m)
    throw InvalidArgument("DIMACS header declares " + std::to_string(m) + " edges, found " +
                          std::to_string(edges.size()));
  return Graph(n, std::move(edges), max_vertices);
}

inline Graph from_dimacs(const std::string& text, std::size_t max_vertices = kDefaultMaxVertices) {
  std::istringstream in(text);
  return read_dimacs(in, max_vertices);
}

}  // namespace fchrom
