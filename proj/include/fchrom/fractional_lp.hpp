#pragma once

// Fractional chromatic number with an exact primal/dual certificate.
//
// Primal (covering):  min sum_I y_I   s.t.  sum_{I ∋ v} y_I >= 1,  y >= 0
// Dual (packing):     max sum_v w_v   s.t.  w(I) <= 1 for every I,  w >= 0
//
// Rows and columns are restricted to the maximal independent sets; every
// other independence constraint is dominated by one of them.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "fchrom/exact_simplex.hpp"
#include "fchrom/graph.hpp"
#include "fchrom/independent_sets.hpp"
#include "fchrom/rational.hpp"

namespace fchrom {

// Non-negative vertex weights plus the induced ordering: non-increasing
// weight, ties broken by ascending vertex index.
class WeightFunction {
 public:
  WeightFunction() = default;
  explicit WeightFunction(std::vector<Rational> weights) : weights_(std::move(weights)) {
    for (const auto& w : weights_)
      if (w < 0) throw InvalidArgument("weights must be non-negative");
    ordering_.resize(weights_.size());
    std::iota(ordering_.begin(), ordering_.end(), Vertex{0});
    std::stable_sort(ordering_.begin(), ordering_.end(),
                     [&](Vertex a, Vertex b) { return weights_[a] > weights_[b]; });
  }

  static WeightFunction uniform(std::size_t n, const Rational& value = 1) {
    return WeightFunction(std::vector<Rational>(n, value));
  }

  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](Vertex v) const { return weights_.at(v); }
  const std::vector<Rational>& weights() const { return weights_; }
  const std::vector<Vertex>& ordering() const { return ordering_; }

  Rational total() const {
    Rational sum = 0;
    for (const auto& w : weights_) sum += w;
    return sum;
  }
  Rational weight_of(const VertexSet& a) const {
    Rational sum = 0;
    for (Vertex v : a) sum += weights_.at(v);
    return sum;
  }

  WeightFunction scaled(const Rational& factor) const {
    std::vector<Rational> out = weights_;
    for (auto& w : out) w *= factor;
    return WeightFunction(std::move(out));
  }

 private:
  std::vector<Rational> weights_;
  std::vector<Vertex> ordering_;
};

struct PrimalEntry {
  VertexSet set;
  Rational y;
};

struct ChiFCertificate {
  Rational value;
  std::vector<PrimalEntry> primal;  // one entry per LP column (maximal independent set)
  WeightFunction dual;

  std::vector<PrimalEntry> primal_support() const {
    std::vector<PrimalEntry> support;
    for (const auto& e : primal)
      if (e.y > 0) support.push_back(e);
    return support;
  }
};

struct CertificateCheck {
  bool primal_feasible = false;
  bool dual_feasible = false;
  bool objectives_match = false;
  std::string failure;  // first failing condition, empty when ok()

  bool ok() const { return primal_feasible && dual_feasible && objectives_match; }
};

inline ChiFCertificate solve_chi_f(const Graph& g, const EnumerationLimits& limits = {}) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InvalidArgument("fractional chromatic number needs at least one vertex");
  const auto family = maximal_independent_sets(g, limits);
  const std::size_t m = family.sets.size();

  // Packing LP in tableau form: one row per maximal set, one column per vertex.
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (Vertex v : family.sets[i]) a[i][v] = 1;
  ExactSimplex lp(std::move(a), std::vector<Rational>(m, Rational(1)), std::vector<Rational>(n, Rational(1)));
  const SimplexResult solved = lp.solve();

  ChiFCertificate cert;
  cert.value = solved.objective;
  cert.dual = WeightFunction(solved.primal);
  cert.primal.reserve(m);
  for (std::size_t i = 0; i < m; ++i) cert.primal.push_back({family.sets[i], solved.dual[i]});
  return cert;
}

// Re-derives every certificate condition from g alone, with exact arithmetic.
inline CertificateCheck check_certificate(const Graph& g, const ChiFCertificate& cert,
                                          const EnumerationLimits& limits = {}) {
  CertificateCheck check;
  const std::size_t n = g.vertex_count();

  // Primal: y >= 0 on independent sets, every vertex covered at least once.
  std::vector<Rational> cover(n, Rational(0));
  Rational primal_objective = 0;
  check.primal_feasible = true;
  for (const auto& [set, y] : cert.primal) {
    if (y < 0 || (!set.empty() && set.items().back() >= n) || !is_independent(g, set)) {
      check.primal_feasible = false;
      check.failure = "primal entry is negative or not an independent set";
      break;
    }
    primal_objective += y;
    for (Vertex v : set) cover[v] += y;
  }
  if (check.primal_feasible)
    for (Vertex v = 0; v < n; ++v)
      if (cover[v] < 1) {
        check.primal_feasible = false;
        check.failure = "vertex " + std::to_string(v) + " covered with total " + to_string(cover[v]) + " < 1";
        break;
      }

  // Dual: w >= 0 and w(I) <= 1 on every maximal independent set of g.
  check.dual_feasible = cert.dual.size() == n;
  if (!check.dual_feasible && check.failure.empty()) check.failure = "dual weight vector has the wrong length";
  if (check.dual_feasible) {
    for (const auto& w : cert.dual.weights())
      if (w < 0) check.dual_feasible = false;
    for (const auto& set : maximal_independent_sets(g, limits).sets) {
      if (!check.dual_feasible) break;
      const Rational load = cert.dual.weight_of(set);
      if (load > 1) {
        check.dual_feasible = false;
        if (check.failure.empty()) check.failure = "independent set has dual weight " + to_string(load) + " > 1";
      }
    }
    if (!check.dual_feasible && check.failure.empty()) check.failure = "negative dual weight";
  }

  check.objectives_match = primal_objective == cert.value && cert.dual.total() == cert.value;
  if (!check.objectives_match && check.failure.empty())
    check.failure = "objectives differ: primal " + to_string(primal_objective) + ", dual " +
                    to_string(cert.dual.total()) + ", claimed " + to_string(cert.value);
  return check;
}

inline bool verify_certificate(const Graph& g, const ChiFCertificate& cert, const EnumerationLimits& limits = {}) {
  return check_certificate(g, cert, limits).ok();
}

inline const WeightFunction& dual_weights(const ChiFCertificate& cert) { return cert.dual; }

}  // namespace fchrom
