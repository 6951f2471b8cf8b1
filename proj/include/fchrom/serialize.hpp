#pragma once

// JSON and CSV encodings. Rationals are {"num": "<int>", "den": "<int>"},
// intervals {"lo": <rational>, "hi": <rational>}, vertex sets arrays of
// 0-based indices. Key order is fixed, so equal values serialize to equal bytes.

#include <cstdio>
#include <string>

#include <json.hpp>

#include "fchrom/bound_witness.hpp"
#include "fchrom/fractional_lp.hpp"
#include "fchrom/harness.hpp"
#include "fchrom/independent_sets.hpp"
#include "fchrom/order.hpp"

namespace fchrom {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) {
  return Json{{"num", numerator_of(q).str()}, {"den", denominator_of(q).str()}};
}

inline Rational rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw InvalidArgument("rational must be an object with num and den");
  return parse_rational(j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>());
}

inline Json to_json(const Interval& iv) { return Json{{"lo", to_json(iv.lo())}, {"hi", to_json(iv.hi())}}; }

inline Json to_json(const VertexSet& set) {
  Json arr = Json::array();
  for (Vertex v : set) arr.push_back(v);
  return arr;
}

inline VertexSet vertex_set_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("vertex set must be an array");
  return VertexSet(j.get<std::vector<Vertex>>());
}

inline Json to_json(const IndependentSetFamily& family) {
  Json sets = Json::array();
  for (const auto& s : family.sets) sets.push_back(to_json(s));
  return Json{{"kind", family.kind == FamilyKind::maximal ? "maximal" : "all"}, {"sets", sets}};
}

inline Json to_json(const WeightFunction& w) {
  Json weights = Json::array();
  for (const auto& x : w.weights()) weights.push_back(to_json(x));
  return Json{{"weights", weights}, {"ordering", w.ordering()}, {"total", to_json(w.total())}};
}

inline Json to_json(const ChiFCertificate& cert) {
  Json primal = Json::array();
  for (const auto& [set, y] : cert.primal) primal.push_back(Json{{"set", to_json(set)}, {"y", to_json(y)}});
  Json support = Json::array();
  for (std::size_t i = 0; i < cert.primal.size(); ++i)
    if (cert.primal[i].y > 0) support.push_back(i);
  return Json{{"value", to_json(cert.value)},
              {"value_text", to_string(cert.value)},
              {"primal", primal},
              {"primal_support", support},
              {"dual", to_json(cert.dual)}};
}

inline ChiFCertificate certificate_from_json(const Json& j) {
  ChiFCertificate cert;
  cert.value = rational_from_json(j.at("value"));
  for (const auto& entry : j.at("primal"))
    cert.primal.push_back({vertex_set_from_json(entry.at("set")), rational_from_json(entry.at("y"))});
  std::vector<Rational> weights;
  for (const auto& w : j.at("dual").at("weights")) weights.push_back(rational_from_json(w));
  cert.dual = WeightFunction(std::move(weights));
  return cert;
}

inline Json to_json(const SparseReport& report) {
  Json out{{"sparse", report.sparse}};
  if (report.witness_k) {
    out["witness_k"] = *report.witness_k;
    out["count"] = report.count;
  } else {
    out["witness_k"] = nullptr;
  }
  return out;
}

inline Json to_json(const Decomposition& d) {
  Json degrees = Json::object();
  for (const auto& [v, deg] : d.backward_degrees) degrees[std::to_string(v)] = deg;
  Json out{{"A", to_json(d.a)},         {"x", to_json(d.x)},           {"s", to_json(d.s)},
           {"L", to_json(d.heavy)},     {"L1", to_json(d.heavy_dense)}, {"L2", to_json(d.heavy_late)},
           {"S", to_json(d.light)},     {"backward_degrees", degrees}};
  out["violating_principal_set"] = d.violating_principal_set ? to_json(*d.violating_principal_set) : Json(nullptr);
  return out;
}

inline Json to_json(const TheoremParams& params) {
  return Json{{"p", to_json(params.p)},
              {"c", to_json(params.c)},
              {"p_pow_c", to_json(params.p_pow_c)},
              {"corollary", params.corollary}};
}

inline Json to_json(const BoundReport& r) {
  return Json{{"t", to_json(r.t)},
              {"params", to_json(r.params)},
              {"x", to_json(r.x)},
              {"threshold", to_json(r.threshold)},
              {"probability_bound", to_json(r.probability_bound)},
              {"corollary_threshold", to_json(r.corollary_threshold)},
              {"corollary_probability", to_json(r.corollary_probability)},
              {"applicable", r.applicable},
              {"vacuous", r.vacuous}};
}

// Fixed-format decimal; identical inputs give identical text.
inline std::string decimal(double value, int digits = 9) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

inline std::string decimal(const Rational& q, int digits = 9) { return decimal(to_double(q), digits); }

inline Json to_json(const McReport& r) {
  return Json{{"event", r.event},
              {"graph", r.graph},
              {"n", r.n},
              {"m", r.m},
              {"t", to_json(r.t)},
              {"params", to_json(r.params)},
              {"threshold", to_json(r.threshold)},
              {"trials_requested", r.trials_requested},
              {"trials", r.trials},
              {"successes", r.successes},
              {"freq", decimal(r.freq)},
              {"ci_level", decimal(kDefaultConfidence, 2)},
              {"ci_lo", decimal(r.ci.lo)},
              {"ci_hi", decimal(r.ci.hi)},
              {"bound", to_json(r.bound)},
              {"bound_side", r.side == BoundSide::at_most ? "at_most" : "at_least"},
              {"verdict", to_string(r.verdict)},
              {"vacuous_bound", r.verdict == Verdict::vacuous},
              {"applicable", r.applicable},
              {"note", r.note}};
}

inline const char* kMcCsvHeader = "graph,n,m,t,p,c,threshold_lo,threshold_hi,trials,successes,freq,ci_lo,ci_hi,bound,verdict";

namespace detail {
inline std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}
inline std::string interval_cell(const Interval& iv) {
  return iv.is_point() ? to_string(iv.lo()) : decimal(iv.lo()) + ".." + decimal(iv.hi());
}
}  // namespace detail

// One CSV row; the bound column is the side of the enclosure the verdict uses.
inline std::string to_csv_row(const McReport& r) {
  const Rational& bound = r.side == BoundSide::at_most ? r.bound.hi() : r.bound.lo();
  std::string row;
  row += detail::csv_field(r.graph) + ',';
  row += std::to_string(r.n) + ',' + std::to_string(r.m) + ',';
  row += to_string(r.t) + ',' + to_string(r.params.p) + ',';
  row += detail::csv_field(detail::interval_cell(r.params.c)) + ',';
  row += decimal(r.threshold.lo()) + ',' + decimal(r.threshold.hi()) + ',';
  row += std::to_string(r.trials) + ',' + std::to_string(r.successes) + ',';
  row += decimal(r.freq) + ',' + decimal(r.ci.lo) + ',' + decimal(r.ci.hi) + ',';
  row += decimal(bound) + ',' + to_string(r.verdict);
  return row;
}

}  // namespace fchrom
