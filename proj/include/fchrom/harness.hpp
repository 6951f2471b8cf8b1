#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "fchrom/bound_witness.hpp"
#include "fchrom/fractional_lp.hpp"
#include "fchrom/graph.hpp"
#include "fchrom/independent_sets.hpp"
#include "fchrom/interval.hpp"
#include "fchrom/order.hpp"

namespace fchrom {

struct SampleConfig {
  Rational p;
  std::uint64_t seed = 0;
  std::size_t trials = 1000;

  void validate() const {
    require_probability(p);
    if (trials == 0) throw InvalidArgument("trials must be positive");
    if (numerator_of(p) > std::numeric_limits<std::uint64_t>::max() ||
        denominator_of(p) > std::numeric_limits<std::uint64_t>::max())
      throw InvalidArgument("p must have 64-bit numerator and denominator for sampling");
  }
};

struct HarnessLimits {
  std::size_t max_principal_vertices = 16;
  std::size_t max_exact_edges = 20;
  // A trial whose fractional-chromatic solve runs longer than this stops the
  // run early; the report records the reduced trial count.
  std::chrono::milliseconds solve_budget{60'000};
  EnumerationLimits enumeration;
};

// ---------------------------------------------------------------------------
// Sampling

// Edge e of trial `trial` is kept iff draw(seed, trial, rank(e)) < p * 2^64.
// Draws come from a 64-bit Mersenne Twister seeded by (seed, trial); the k-th
// output is the draw for the edge of rank k in g's sorted edge list. Using the
// same draws for every p couples the samples monotonically in p.
inline std::vector<bool> sample_edge_mask(const Graph& g, const SampleConfig& cfg, std::uint64_t trial) {
  cfg.validate();
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 engine(seq);
  const auto num = static_cast<unsigned __int128>(numerator_of(cfg.p).convert_to<std::uint64_t>());
  const auto den = static_cast<unsigned __int128>(denominator_of(cfg.p).convert_to<std::uint64_t>());
  std::vector<bool> keep(g.edge_count());
  for (std::size_t e = 0; e < keep.size(); ++e) {
    const auto draw = static_cast<unsigned __int128>(engine());
    keep[e] = draw * den < (num << 64);
  }
  return keep;
}

inline Graph subgraph_from_mask(const Graph& g, const std::vector<bool>& keep) {
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < keep.size(); ++e)
    if (keep[e]) edges.push_back(g.edges()[e]);
  return Graph(g.vertex_count(), std::move(edges), std::max(g.vertex_count(), kDefaultMaxVertices));
}

inline Graph sample_subgraph(const Graph& g, const SampleConfig& cfg, std::uint64_t trial) {
  return subgraph_from_mask(g, sample_edge_mask(g, cfg, trial));
}

// ---------------------------------------------------------------------------
// Exact probabilities by enumerating all 2^|E| spanning subgraphs

using SubgraphEvent = std::function<bool(const Graph&)>;

inline Rational exact_event_probability(const Graph& g, const Rational& p, const SubgraphEvent& event,
                                        const HarnessLimits& limits = {}) {
  require_probability(p);
  const std::size_t m = g.edge_count();
  if (m > limits.max_exact_edges)
    throw ResourceLimit("exact enumeration is capped at " + std::to_string(limits.max_exact_edges) + " edges");
  std::vector<Rational> kept_pow(m + 1, Rational(1)), dropped_pow(m + 1, Rational(1));
  for (std::size_t i = 1; i <= m; ++i) {
    kept_pow[i] = kept_pow[i - 1] * p;
    dropped_pow[i] = dropped_pow[i - 1] * (1 - p);
  }
  // Accumulate per kept-edge count, then weight once.
  std::vector<std::uint64_t> hits(m + 1, 0);
  std::vector<bool> keep(m);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (std::size_t e = 0; e < m; ++e) keep[e] = (mask >> e) & 1u;
    if (event(subgraph_from_mask(g, keep))) ++hits[static_cast<std::size_t>(std::popcount(mask))];
  }
  Rational total = 0;
  for (std::size_t k = 0; k <= m; ++k)
    if (hits[k] != 0) total += Rational(Integer(hits[k])) * kept_pow[k] * dropped_pow[m - k];
  return total;
}

// s-principal sets of V whose average degree in g is at least `threshold`.
inline std::vector<VertexSet> enumerate_principal_candidates(const Graph& g, const OrderedGround& ground,
                                                             const Rational& s, const Rational& threshold,
                                                             const HarnessLimits& limits = {}) {
  if (g.vertex_count() > limits.max_principal_vertices)
    throw ResourceLimit("principal candidate enumeration is capped at " +
                        std::to_string(limits.max_principal_vertices) + " vertices");
  return dense_principal_subsets(g, ground, ground.all(), s, threshold);
}

// The bad event: some candidate (dense in g) is independent in the sample.
inline SubgraphEvent principal_set_survives_event(std::vector<VertexSet> candidates) {
  return [candidates = std::move(candidates)](const Graph& sample) {
    for (const auto& c : candidates)
      if (is_independent(sample, c)) return true;
    return false;
  };
}

// Degree threshold used for candidate membership: the lower end of the
// enclosure, so the enumerated family can only over-approximate the bad event.
inline Rational lemma5_candidate_threshold(const Rational& s, const TheoremParams& params) {
  return principal_degree_threshold(s, params).lo();
}

inline Rational exact_lemma5_probability(const Graph& g, const WeightFunction& w, const Rational& s,
                                         const TheoremParams& params, const HarnessLimits& limits = {}) {
  const OrderedGround ground(w);
  auto candidates = enumerate_principal_candidates(g, ground, s, lemma5_candidate_threshold(s, params), limits);
  return exact_event_probability(g, params.p, principal_set_survives_event(std::move(candidates)), limits);
}

// Probability that chi_f(G_p) >= threshold.hi, the conservative side.
inline Rational exact_theorem_probability(const Graph& g, const TheoremParams& params, const HarnessLimits& limits = {}) {
  const Rational t = solve_chi_f(g, limits.enumeration).value;
  const Rational threshold = theorem_bounds(t, params).threshold.hi();
  return exact_event_probability(
      g, params.p, [&](const Graph& h) { return solve_chi_f(h, limits.enumeration).value >= threshold; }, limits);
}

// ---------------------------------------------------------------------------
// Monte Carlo reports

enum class Verdict { consistent, inconsistent, vacuous };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::inconsistent: return "inconsistent";
    case Verdict::vacuous: return "vacuous";
  }
  return "unknown";
}

// Whether the bound caps the event probability from above or below.
enum class BoundSide { at_most, at_least };

struct WilsonInterval {
  double lo = 0;
  double hi = 1;
};

inline constexpr double kDefaultConfidence = 0.99;

inline WilsonInterval wilson_interval(std::size_t successes, std::size_t trials, double confidence = kDefaultConfidence) {
  if (trials == 0) throw InvalidArgument("Wilson interval needs at least one trial");
  const double z = boost::math::quantile(boost::math::normal(), 1 - (1 - confidence) / 2);
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double center = (phat + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z / (1 + z2 / n) * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

struct McReport {
  std::string event;
  std::string graph;
  std::size_t n = 0;
  std::size_t m = 0;
  Rational t;  // chi_f(g) for the threshold event, the scale s for the principal-set event
  TheoremParams params;
  Interval threshold;  // chi_f threshold, or the average-degree threshold x
  std::size_t trials_requested = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double freq = 0;
  WilsonInterval ci;
  Interval bound;
  BoundSide side = BoundSide::at_most;
  Verdict verdict = Verdict::consistent;
  bool applicable = true;
  std::string note;

  double half_width() const { return (ci.hi - ci.lo) / 2; }
};

namespace detail {

inline void finish_report(McReport& report) {
  report.freq = static_cast<double>(report.successes) / static_cast<double>(report.trials);
  report.ci = wilson_interval(report.successes, report.trials);
  if (report.side == BoundSide::at_most) {
    if (report.bound.lo() >= 1) report.verdict = Verdict::vacuous;
    else report.verdict = Rational(report.ci.lo) > report.bound.hi() ? Verdict::inconsistent : Verdict::consistent;
  } else {
    if (report.bound.hi() <= 0) report.verdict = Verdict::vacuous;
    else report.verdict = Rational(report.ci.hi) < report.bound.lo() ? Verdict::inconsistent : Verdict::consistent;
  }
}

}  // namespace detail

// Frequency of the bad event: some s-principal set with G-average-degree
// >= 2 log_{1/p}(e s) + 2c is independent in G_p. Degrees are measured in g,
// independence in the sample.
inline McReport mc_lemma5(const Graph& g, const WeightFunction& w, const Rational& s, const TheoremParams& params,
                          const SampleConfig& cfg, const HarnessLimits& limits = {}, std::string graph_name = "") {
  cfg.validate();
  if (params.p != cfg.p) throw InvalidArgument("sampling p differs from the bound's p");
  const OrderedGround ground(w);
  const auto candidates =
      enumerate_principal_candidates(g, ground, s, lemma5_candidate_threshold(s, params), limits);
  const auto survives = principal_set_survives_event(candidates);

  McReport report;
  report.event = "lemma5: some dense s-principal set is independent in G_p";
  report.graph = std::move(graph_name);
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.t = s;
  report.params = params;
  report.threshold = principal_degree_threshold(s, params);
  report.trials_requested = cfg.trials;
  report.bound = bad_event_cap(params);
  report.side = BoundSide::at_most;
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    if (!candidates.empty() && survives(sample_subgraph(g, cfg, trial))) ++report.successes;
    ++report.trials;
  }
  detail::finish_report(report);
  return report;
}

// Frequency of chi_f(G_p) >= t / (4 log_{1/p}(e t) + 4 + 4c), judged against
// the upper end of the threshold enclosure.
inline McReport mc_theorem(const Graph& g, const TheoremParams& params, const SampleConfig& cfg,
                           const HarnessLimits& limits = {}, std::string graph_name = "") {
  cfg.validate();
  if (params.p != cfg.p) throw InvalidArgument("sampling p differs from the bound's p");
  const Rational t = solve_chi_f(g, limits.enumeration).value;
  const BoundReport bounds = theorem_bounds(t, params);

  McReport report;
  report.event = params.corollary ? "corollary: chi_f(G_p) >= t/(8 log_{1/p}(e t) + 4)"
                                  : "theorem: chi_f(G_p) >= t/(4 log_{1/p}(e t) + 4 + 4c)";
  report.graph = std::move(graph_name);
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.t = t;
  report.params = params;
  report.threshold = bounds.threshold;
  report.trials_requested = cfg.trials;
  report.bound = bounds.probability_bound;
  report.side = BoundSide::at_least;
  report.applicable = bounds.applicable;
  if (!bounds.applicable) report.note = "theorem inapplicable: t < 2";

  const Rational& cutoff = bounds.threshold.hi();
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    const Graph sample = sample_subgraph(g, cfg, trial);
    const auto start = std::chrono::steady_clock::now();
    const Rational value = solve_chi_f(sample, limits.enumeration).value;
    const auto elapsed = std::chrono::steady_clock::now() - start;
    if (value >= cutoff) ++report.successes;
    ++report.trials;
    if (elapsed > limits.solve_budget && report.trials < cfg.trials) {
      if (!report.note.empty()) report.note += "; ";
      report.note += "trials reduced from " + std::to_string(cfg.trials) + " to " + std::to_string(report.trials) +
                     ": a solve exceeded the " + std::to_string(limits.solve_budget.count()) + " ms budget";
      break;
    }
  }
  detail::finish_report(report);
  return report;
}

}  // namespace fchrom
