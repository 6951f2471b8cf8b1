#pragma once

// Prefix sets and the s-principal / s-sparse predicates over a fixed vertex
// ordering.
//
// Every set Y is ranked by the ground ordering; Y_k is its first k elements
// and Y_s means Y_floor(s). A nonempty X ⊆ Y is s-principal in Y when
// X ⊆ Y_{s|X|}; X is s-sparse in Y when it has no s-principal subset, which
// is equivalent to |Y_k ∩ X| < k/s for k = 1..|Y|.

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "fchrom/fractional_lp.hpp"
#include "fchrom/graph.hpp"
#include "fchrom/rational.hpp"

namespace fchrom {

class OrderedGround {
 public:
  explicit OrderedGround(const WeightFunction& w) : ordering_(w.ordering()), rank_(ordering_.size()) {
    for (std::size_t i = 0; i < ordering_.size(); ++i) rank_[ordering_[i]] = i + 1;
  }

  // Vertices 0..n-1 in index order, i.e. the ordering of uniform weights.
  static OrderedGround identity(std::size_t n) { return OrderedGround(WeightFunction::uniform(n)); }

  std::size_t size() const { return ordering_.size(); }
  const std::vector<Vertex>& ordering() const { return ordering_; }
  // 1-based position of v.
  std::size_t rank(Vertex v) const { return rank_.at(v); }
  VertexSet all() const { return VertexSet::range(ordering_.size()); }

  // Elements of y listed in ground order.
  std::vector<Vertex> ranked(const VertexSet& y) const {
    check(y);
    std::vector<Vertex> out(y.begin(), y.end());
    std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return rank_[a] < rank_[b]; });
    return out;
  }

  void check(const VertexSet& a) const {
    if (!a.empty() && a.items().back() >= ordering_.size())
      throw InvalidArgument("vertex index out of range for the ordering");
  }

 private:
  std::vector<Vertex> ordering_;
  std::vector<std::size_t> rank_;
};

namespace detail {
inline void require_scale(const Rational& s) {
  if (s < 1) throw InvalidArgument("scale s must be at least 1, got " + to_string(s));
}
inline void require_subset(const VertexSet& x, const VertexSet& y) {
  if (!x.is_subset_of(y)) throw InvalidArgument("x must be a subset of y");
}
}  // namespace detail

// First floor(length) elements of y; empty when length < 1.
inline VertexSet prefix(const OrderedGround& ground, const VertexSet& y, const Rational& length) {
  const auto ranked = ground.ranked(y);
  if (length < 1) return {};
  const Integer k = floor_of(length);
  const std::size_t take = k >= ranked.size() ? ranked.size() : static_cast<std::size_t>(k);
  return VertexSet(std::vector<Vertex>(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(take)));
}

inline bool is_principal(const OrderedGround& ground, const VertexSet& x, const VertexSet& y, const Rational& s) {
  detail::require_scale(s);
  if (x.empty()) throw InvalidArgument("principal sets are nonempty by definition");
  detail::require_subset(x, y);
  const VertexSet head = prefix(ground, y, s * static_cast<long>(x.size()));
  return x.is_subset_of(head);
}

inline bool is_principal(const OrderedGround& ground, const VertexSet& x, const Rational& s) {
  return is_principal(ground, x, ground.all(), s);
}

struct SparseReport {
  bool sparse = true;
  // First k with |Y_k ∩ X| >= k/s; absent when sparse.
  std::optional<std::size_t> witness_k;
  std::size_t count = 0;  // |Y_k ∩ X| at the witness
};

// Prefix-count characterization, exact rational comparisons.
inline SparseReport is_sparse(const OrderedGround& ground, const VertexSet& x, const VertexSet& y,
                              const Rational& s) {
  detail::require_scale(s);
  detail::require_subset(x, y);
  SparseReport report;
  std::size_t count = 0, k = 0;
  for (Vertex v : ground.ranked(y)) {
    ++k;
    if (x.contains(v)) ++count;
    if (Rational(Integer(count)) * s >= Rational(Integer(k))) {
      report.sparse = false;
      report.witness_k = k;
      report.count = count;
      return report;
    }
  }
  return report;
}

inline SparseReport is_sparse(const OrderedGround& ground, const VertexSet& x, const Rational& s) {
  return is_sparse(ground, x, ground.all(), s);
}

inline constexpr std::size_t kBruteForceSparseMax = 20;

// Definition check: no nonempty subset of x is s-principal in y.
inline bool is_sparse_bruteforce(const OrderedGround& ground, const VertexSet& x, const VertexSet& y,
                                 const Rational& s) {
  detail::require_scale(s);
  detail::require_subset(x, y);
  if (x.size() > kBruteForceSparseMax)
    throw ResourceLimit("brute-force sparseness is capped at " + std::to_string(kBruteForceSparseMax) + " elements");
  const auto ranked = ground.ranked(y);
  // position of each x element inside y, 1-based
  std::vector<std::size_t> position;
  for (std::size_t i = 0; i < ranked.size(); ++i)
    if (x.contains(ranked[i])) position.push_back(i + 1);
  const std::size_t m = position.size();
  // limit[r] = floor(s * r): size of Y_{s r}
  std::vector<Integer> limit(m + 1);
  for (std::size_t r = 1; r <= m; ++r) limit[r] = floor_of(s * static_cast<long>(r));

  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << m); ++subset) {
    const auto r = static_cast<std::size_t>(std::popcount(subset));
    bool principal = true;
    for (std::size_t i = 0; i < m && principal; ++i)
      if ((subset >> i) & 1u) principal = position[i] <= limit[r];
    if (principal) return false;
  }
  return true;
}

struct WeightBoundCheck {
  bool holds = false;
  Rational lhs;  // w(x)
  Rational rhs;  // w(y) / s
};

// w(x) <= w(y)/s for an s-sparse x. Throws ContractViolation when x is not sparse.
inline WeightBoundCheck sparse_weight_bound_check(const OrderedGround& ground, const WeightFunction& w,
                                                  const VertexSet& x, const VertexSet& y, const Rational& s) {
  const SparseReport report = is_sparse(ground, x, y, s);
  if (!report.sparse)
    throw ContractViolation("x is not " + to_string(s) + "-sparse in y (prefix " +
                            std::to_string(*report.witness_k) + " holds " + std::to_string(report.count) + ")");
  WeightBoundCheck out;
  out.lhs = w.weight_of(x);
  out.rhs = w.weight_of(y) / s;
  out.holds = out.lhs <= out.rhs;
  return out;
}

// ---------------------------------------------------------------------------
// Dense principal sets: subsets of `within` that are s-principal in V and
// whose average degree in g is at least `threshold`.

inline constexpr std::size_t kPrincipalEnumerationMax = 20;

namespace detail {

template <class Visit>
void for_each_dense_principal(const Graph& g, const OrderedGround& ground, const VertexSet& within,
                              const Rational& s, const Rational& threshold, Visit&& visit) {
  require_scale(s);
  g.check(within);
  if (within.size() > kPrincipalEnumerationMax)
    throw ResourceLimit("principal-set enumeration is capped at " + std::to_string(kPrincipalEnumerationMax) +
                        " candidate vertices");
  const std::vector<Vertex> members = ground.ranked(within);
  const std::size_t m = members.size();
  std::vector<std::uint64_t> local_nbrs(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && g.adjacent(members[i], members[j])) local_nbrs[i] |= std::uint64_t{1} << j;
  std::vector<Integer> limit(m + 1);
  for (std::size_t r = 1; r <= m; ++r) limit[r] = floor_of(s * static_cast<long>(r));

  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << m); ++subset) {
    const auto r = static_cast<std::size_t>(std::popcount(subset));
    // members are in ground order, so the highest bit carries the largest rank
    const auto last = static_cast<std::size_t>(63 - std::countl_zero(subset));
    if (Integer(ground.rank(members[last])) > limit[r]) continue;
    std::size_t twice_edges = 0;
    for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1)
      twice_edges += static_cast<std::size_t>(std::popcount(local_nbrs[std::countr_zero(rest)] & subset));
    if (Rational(Integer(twice_edges), Integer(r)) < threshold) continue;
    std::vector<Vertex> items;
    for (std::uint64_t rest = subset; rest != 0; rest &= rest - 1) items.push_back(members[std::countr_zero(rest)]);
    if (!visit(VertexSet(std::move(items)))) return;
  }
}

}  // namespace detail

inline std::vector<VertexSet> dense_principal_subsets(const Graph& g, const OrderedGround& ground,
                                                      const VertexSet& within, const Rational& s,
                                                      const Rational& threshold) {
  std::vector<VertexSet> out;
  detail::for_each_dense_principal(g, ground, within, s, threshold, [&](VertexSet set) {
    out.push_back(std::move(set));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::optional<VertexSet> find_dense_principal_subset(const Graph& g, const OrderedGround& ground,
                                                            const VertexSet& within, const Rational& s,
                                                            const Rational& threshold) {
  std::optional<VertexSet> found;
  detail::for_each_dense_principal(g, ground, within, s, threshold, [&](VertexSet set) {
    found = std::move(set);
    return false;
  });
  return found;
}

}  // namespace fchrom
