#pragma once

// Constructive side of the random-subgraph bound.
//
// For A ⊆ V and a threshold x > 0, the backward degree d>(v) of v ∈ A counts
// neighbors of v inside A that precede it in the weight ordering. Splitting A
// into L = {d> >= x} and S = A \ L, the heavy part L is covered by
//   L1 = {v_{i_j} ∈ L : |V_{i_j} ∩ A| > 2j}          (2-sparse in A)
//   L2 = {v_{i_j} ∈ L : i_j > s |V_{i_j} ∩ A|}        (s-sparse in V)
// whenever A has no s-principal subset of average degree >= x, and S is
// greedily colorable with floor(x) + 1 classes along the ordering. The
// heaviest class is an independent set of weight at least
// (w(A)/2 - w(V)/s) / floor(x + 1).

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fchrom/fractional_lp.hpp"
#include "fchrom/graph.hpp"
#include "fchrom/independent_sets.hpp"
#include "fchrom/interval.hpp"
#include "fchrom/order.hpp"

namespace fchrom {

// ---------------------------------------------------------------------------
// Closed-form bounds

// Edge-retention probability p, exponent c and the derived p^c. With the
// corollary setting c = log_{1/p}(e t), p^c = 1/(e t) exactly.
struct TheoremParams {
  Rational p;
  Interval c;
  Interval p_pow_c;
  bool corollary = false;
};

inline void require_probability(const Rational& p) {
  if (p <= 0 || p >= 1) throw InvalidArgument("p must lie strictly between 0 and 1, got " + to_string(p));
}

inline TheoremParams theorem_params(const Rational& p, const Rational& c) {
  require_probability(p);
  if (c <= 0) throw InvalidArgument("c must be positive, got " + to_string(c));
  return {p, Interval(c), fchrom::pow(p, c), false};
}

inline TheoremParams corollary_params(const Rational& p, const Rational& t) {
  require_probability(p);
  if (t <= 0) throw InvalidArgument("t must be positive");
  const Interval c = log_base_of_e_times(t, 1 / p);
  const Interval p_pow_c = (Rational(1) / (euler_e() * t)).rounded_outward();
  return {p, c, p_pow_c, true};
}

// 2 log_{1/p}(e s) + 2c: the average-degree threshold for s-principal sets.
inline Interval principal_degree_threshold(const Rational& s, const TheoremParams& params) {
  return (Rational(2) * log_base_of_e_times(s, 1 / params.p) + Rational(2) * params.c).rounded_outward();
}

// Union-bound cap p^c / (1 - p^c) on the bad-event probability; increasing in p^c.
inline Interval bad_event_cap(const TheoremParams& params) {
  const Interval& q = params.p_pow_c;
  if (q.hi() >= 1) throw InvalidArgument("p^c must be below 1");
  return Interval(q.lo() / (1 - q.lo()), q.hi() / (1 - q.hi()));
}

// (1 - 2p^c) / (1 - p^c) = 1 - p^c/(1 - p^c); decreasing in p^c.
inline Interval success_probability_bound(const TheoremParams& params) {
  const Interval cap = bad_event_cap(params);
  return Interval(1 - cap.hi(), 1 - cap.lo());
}

struct BoundReport {
  Rational t;
  TheoremParams params;
  Interval x;                      // 2 log_{1/p}(e t) + 2c
  Interval threshold;              // t / (4 log_{1/p}(e t) + 4 + 4c)
  Interval probability_bound;      // (1 - 2p^c) / (1 - p^c)
  Interval corollary_threshold;    // t / (8 log_{1/p}(e t) + 4)
  Rational corollary_probability;  // 1 - 1/(2t)
  bool applicable = true;          // t >= 2
  bool vacuous = false;            // probability bound <= 0
};

inline BoundReport theorem_bounds(const Rational& t, const TheoremParams& params) {
  if (t <= 0) throw InvalidArgument("t must be positive");
  BoundReport report;
  report.t = t;
  report.params = params;
  report.applicable = t >= 2;
  const Interval log_et = log_base_of_e_times(t, 1 / params.p);
  report.x = principal_degree_threshold(t, params);
  report.threshold = (t / (Rational(4) * log_et + Rational(4) + Rational(4) * params.c)).rounded_outward();
  report.probability_bound = success_probability_bound(params);
  report.corollary_threshold = (t / (Rational(8) * log_et + Rational(4))).rounded_outward();
  report.corollary_probability = 1 - 1 / (2 * t);
  report.vacuous = report.probability_bound.hi() <= 0;
  return report;
}

inline BoundReport theorem_bounds(const Rational& t, const Rational& p, const Rational& c) {
  return theorem_bounds(t, theorem_params(p, c));
}

// ---------------------------------------------------------------------------
// Backward degrees and the L / L1 / L2 / S split

inline std::map<Vertex, std::size_t> backward_degrees(const Graph& g, const OrderedGround& ground,
                                                      const VertexSet& a) {
  g.check(a);
  std::map<Vertex, std::size_t> out;
  for (Vertex v : a) {
    std::size_t count = 0;
    for (Vertex u : g.neighbors(v))
      if (a.contains(u) && ground.rank(u) < ground.rank(v)) ++count;
    out[v] = count;
  }
  return out;
}

struct Decomposition {
  VertexSet a;
  Rational x;
  Rational s;
  VertexSet heavy;        // L
  VertexSet heavy_dense;  // L1
  VertexSet heavy_late;   // L2
  VertexSet light;        // S
  std::map<Vertex, std::size_t> backward_degrees;
  // A vertex of L in neither L1 nor L2 exhibits V_{i_j} ∩ A as an s-principal
  // subset of A with average degree >= x; the first such set is kept here.
  std::optional<VertexSet> violating_principal_set;
};

inline Decomposition decompose(const Graph& g, const OrderedGround& ground, const VertexSet& a, const Rational& x,
                               const Rational& s) {
  if (x <= 0) throw InvalidArgument("degree threshold x must be positive");
  if (s < 1) throw InvalidArgument("scale s must be at least 1");
  Decomposition d;
  d.a = a;
  d.x = x;
  d.s = s;
  d.backward_degrees = backward_degrees(g, ground, a);

  const std::vector<Vertex> ranked_a = ground.ranked(a);
  std::vector<Vertex> heavy, dense, late, light;
  std::size_t j = 0;
  for (std::size_t pos = 0; pos < ranked_a.size(); ++pos) {
    const Vertex v = ranked_a[pos];
    if (Rational(Integer(d.backward_degrees[v])) < x) {
      light.push_back(v);
      continue;
    }
    ++j;
    heavy.push_back(v);
    const std::size_t rank = ground.rank(v);  // i_j
    const std::size_t in_a = pos + 1;         // |V_{i_j} ∩ A|
    const bool is_dense = in_a > 2 * j;
    const bool is_late = Rational(Integer(rank)) > s * static_cast<long>(in_a);
    if (is_dense) dense.push_back(v);
    if (is_late) late.push_back(v);
    if (!is_dense && !is_late && !d.violating_principal_set)
      d.violating_principal_set =
          VertexSet(std::vector<Vertex>(ranked_a.begin(), ranked_a.begin() + static_cast<std::ptrdiff_t>(in_a)));
  }
  d.heavy = VertexSet(std::move(heavy));
  d.heavy_dense = VertexSet(std::move(dense));
  d.heavy_late = VertexSet(std::move(late));
  d.light = VertexSet(std::move(light));
  return d;
}

// ---------------------------------------------------------------------------
// Heavy independent set extraction

struct HeavyIndependentSet {
  VertexSet set;
  Rational weight;
  Rational lower_bound;  // (w(A)/2 - w(V)/s) / floor(x + 1)
  std::size_t classes = 0;
  Decomposition decomposition;

  bool meets_bound() const { return weight >= lower_bound; }
};

inline std::string describe(const VertexSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + std::to_string(set[i]);
  return out + "}";
}

inline HeavyIndependentSet extract_heavy_independent(const Graph& g, const OrderedGround& ground,
                                                     const WeightFunction& w, const VertexSet& a, const Rational& x,
                                                     const Rational& s) {
  Decomposition d = decompose(g, ground, a, x, s);
  std::optional<VertexSet> violation = d.violating_principal_set;
  if (!violation && a.size() <= kPrincipalEnumerationMax)
    violation = find_dense_principal_subset(g, ground, a, s, x);
  if (violation)
    throw ContractViolation("hypothesis fails: " + describe(*violation) + " is " + to_string(s) +
                            "-principal with average degree " + to_string(average_degree(g, *violation)) +
                            " >= " + to_string(x));

  // Greedy classes along the ordering; a vertex of S has fewer than x earlier
  // S-neighbors, so at most floor(x) + 1 classes appear.
  std::map<Vertex, std::size_t> class_of;
  std::vector<std::vector<Vertex>> classes;
  for (Vertex v : ground.ranked(d.light)) {
    std::vector<bool> used(classes.size() + 1, false);
    for (Vertex u : g.neighbors(v)) {
      auto it = class_of.find(u);
      if (it != class_of.end()) used[it->second] = true;
    }
    const auto c = static_cast<std::size_t>(std::find(used.begin(), used.end(), false) - used.begin());
    if (c == classes.size()) classes.emplace_back();
    classes[c].push_back(v);
    class_of[v] = c;
  }

  const Integer floor_x_plus_1 = floor_of(x + 1);
  if (Integer(classes.size()) > floor_x_plus_1)
    throw InternalError("greedy coloring of S used " + std::to_string(classes.size()) + " classes");

  HeavyIndependentSet out;
  out.classes = classes.size();
  out.weight = 0;
  for (const auto& cls : classes) {
    VertexSet candidate{std::vector<Vertex>(cls)};
    const Rational weight = w.weight_of(candidate);
    if (out.set.empty() || weight > out.weight) {
      out.set = std::move(candidate);
      out.weight = weight;
    }
  }
  out.lower_bound = (w.weight_of(a) / 2 - w.total() / s) / Rational(floor_x_plus_1);
  out.decomposition = std::move(d);
  return out;
}

struct WeightBoundReport {
  bool holds = false;
  Rational lhs;  // w(A)
  Rational rhs;  // 2 floor(x + 1) + 2 w(V) / s
};

// Checks w(A) <= 2 floor(x+1) + 2 w(V)/s. Preconditions verified here when the
// instance is small enough to enumerate: every independent subset of A has
// weight <= 1, and A has no s-principal subset of average degree >= x.
inline WeightBoundReport lemma6_weight_check(const Graph& g, const OrderedGround& ground, const WeightFunction& w,
                                       const VertexSet& a, const Rational& x, const Rational& s) {
  if (x <= 0) throw InvalidArgument("degree threshold x must be positive");
  if (a.size() <= EnumerationLimits{}.max_vertices) {
    const auto sub = induced_subgraph(g, a);
    for (const auto& local : maximal_independent_sets(sub.graph).sets) {
      std::vector<Vertex> host;
      for (Vertex v : local) host.push_back(sub.to_host[v]);
      const VertexSet set(std::move(host));
      if (w.weight_of(set) > 1)
        throw ContractViolation("independent subset " + describe(set) + " of A has weight " +
                                to_string(w.weight_of(set)) + " > 1");
    }
  }
  // Throws on a hypothesis violation.
  extract_heavy_independent(g, ground, w, a, x, s);
  WeightBoundReport out;
  out.lhs = w.weight_of(a);
  out.rhs = 2 * Rational(floor_of(x + 1)) + 2 * w.total() / s;
  out.holds = out.lhs <= out.rhs;
  return out;
}

// w / (2x + 4), dividing by the upper end of 2x + 4 so w' never overstates.
inline WeightFunction scaled_weight_function(const WeightFunction& w, const Interval& x) {
  if (x.lo() <= 0) throw InvalidArgument("x must be positive");
  const Rational divisor = 2 * x.hi() + 4;
  return w.scaled(1 / divisor);
}

}  // namespace fchrom
