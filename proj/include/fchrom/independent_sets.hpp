#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "fchrom/graph.hpp"

namespace fchrom {

struct EnumerationLimits {
  std::size_t max_vertices = 40;     // maximal-set enumeration
  std::size_t max_sets = 100'000;    // abort once this many sets are produced
};

inline constexpr std::size_t kAllIndependentSetsMaxVertices = 20;

enum class FamilyKind { maximal, all };

struct IndependentSetFamily {
  FamilyKind kind = FamilyKind::maximal;
  std::vector<VertexSet> sets;  // lexicographic by sorted vertex indices
};

inline bool is_independent(const Graph& g, const VertexSet& a) {
  g.check(a);
  for (Vertex v : a)
    for (Vertex u : g.neighbors(v))
      if (u > v && a.contains(u)) return false;
  return true;
}

inline bool is_independent_mask(const Graph& g, std::uint64_t mask) {
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
    if (g.neighbor_mask(static_cast<Vertex>(std::countr_zero(rest))) & mask) return false;
  return true;
}

namespace detail {

// Bron-Kerbosch with pivoting on the complement graph, expressed through the
// closed neighborhoods of g: a vertex v is a complement-neighbor of u iff v is
// outside N_g[u].
class MaximalIndependentEnumerator {
 public:
  MaximalIndependentEnumerator(const Graph& g, std::size_t max_sets) : max_sets_(max_sets) {
    closed_.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) closed_[v] = g.neighbor_mask(v) | (std::uint64_t{1} << v);
  }

  std::vector<std::uint64_t> run() {
    const std::uint64_t all = closed_.empty() ? 0 : (~std::uint64_t{0} >> (64 - closed_.size()));
    expand(0, all, 0);
    return std::move(found_);
  }

 private:
  void expand(std::uint64_t chosen, std::uint64_t candidates, std::uint64_t excluded) {
    if (candidates == 0) {
      if (excluded == 0) {
        if (found_.size() >= max_sets_)
          throw ResourceLimit("more than " + std::to_string(max_sets_) + " maximal independent sets");
        found_.push_back(chosen);
      }
      return;
    }
    // Pivot maximizes the number of candidates compatible with it, so the
    // fewest branches remain.
    std::uint64_t pivot_closed = 0;
    int best = -1;
    for (std::uint64_t rest = candidates | excluded; rest != 0; rest &= rest - 1) {
      const auto u = static_cast<Vertex>(std::countr_zero(rest));
      const int score = std::popcount(candidates & ~closed_[u]);
      if (score > best) {
        best = score;
        pivot_closed = closed_[u];
      }
    }
    for (std::uint64_t branch = candidates & pivot_closed; branch != 0; branch &= branch - 1) {
      const auto v = static_cast<Vertex>(std::countr_zero(branch));
      const std::uint64_t bit = std::uint64_t{1} << v;
      expand(chosen | bit, candidates & ~closed_[v], excluded & ~closed_[v]);
      candidates &= ~bit;
      excluded |= bit;
    }
  }

  std::vector<std::uint64_t> closed_;
  std::vector<std::uint64_t> found_;
  std::size_t max_sets_;
};

inline std::vector<VertexSet> masks_to_sorted_sets(const std::vector<std::uint64_t>& masks) {
  std::vector<VertexSet> sets;
  sets.reserve(masks.size());
  for (auto m : masks) sets.push_back(VertexSet::from_mask(m));
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace detail

// Exactly the inclusion-maximal independent sets of g.
inline IndependentSetFamily maximal_independent_sets(const Graph& g, const EnumerationLimits& limits = {}) {
  const std::size_t cap = std::min<std::size_t>(limits.max_vertices, 64);
  if (g.vertex_count() > cap)
    throw ResourceLimit("maximal independent set enumeration is capped at " + std::to_string(cap) + " vertices");
  IndependentSetFamily family{FamilyKind::maximal, {}};
  if (g.vertex_count() == 0) {
    family.sets.emplace_back();
    return family;
  }
  auto masks = detail::MaximalIndependentEnumerator(g, limits.max_sets).run();
  family.sets = detail::masks_to_sorted_sets(masks);
  return family;
}

// Every independent subset, including the empty set.
inline IndependentSetFamily all_independent_sets(const Graph& g) {
  if (g.vertex_count() > kAllIndependentSetsMaxVertices)
    throw ResourceLimit("all-independent-set enumeration is capped at " +
                        std::to_string(kAllIndependentSetsMaxVertices) + " vertices");
  std::vector<std::uint64_t> masks{0};
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const std::uint64_t nbrs = g.neighbor_mask(v), bit = std::uint64_t{1} << v;
    const std::size_t existing = masks.size();
    for (std::size_t i = 0; i < existing; ++i)
      if ((masks[i] & nbrs) == 0) masks.push_back(masks[i] | bit);
  }
  return {FamilyKind::all, detail::masks_to_sorted_sets(masks)};
}

// alpha(G).
inline std::size_t independence_number(const Graph& g, const EnumerationLimits& limits = {}) {
  std::size_t best = 0;
  for (const auto& s : maximal_independent_sets(g, limits).sets) best = std::max(best, s.size());
  return best;
}

}  // namespace fchrom
