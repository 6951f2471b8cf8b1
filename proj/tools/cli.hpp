#pragma once

// fchrom command-line front end. Machine output goes to `out`, diagnostics to
// `err`. Exit codes: 0 success / consistent, 1 verification failure,
// 2 usage error, 3 resource cap exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fchrom/fchrom.hpp"

namespace fchrom::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kResource = 3 };

struct GraphSource {
  std::string input;
  std::string gen;
};

struct Caps {
  std::size_t max_n = 40;
  std::size_t max_mis = 100'000;
  long long time_budget_ms = 60'000;

  void validate() const {
    if (max_n == 0 || max_mis == 0 || time_budget_ms <= 0) throw InvalidArgument("caps must be positive");
  }
  EnumerationLimits enumeration() const { return {max_n, max_mis}; }
  HarnessLimits harness() const {
    HarnessLimits limits;
    limits.solve_budget = std::chrono::milliseconds(time_budget_ms);
    limits.enumeration = enumeration();
    return limits;
  }
};

inline std::size_t parse_count(const std::string& text) {
  const Rational q = parse_rational(text);
  if (denominator_of(q) != 1 || q < 0) throw InvalidArgument("expected a non-negative integer, got '" + text + "'");
  return numerator_of(q).convert_to<std::size_t>();
}

inline Graph load_dimacs_file(const std::string& path, std::size_t max_vertices) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return read_dimacs(in, max_vertices);
}

// complete:n | cycle:n | path:n | edgeless:n | kneser:n:k | mycielski:<spec-or-file>
inline Graph generate(const std::string& spec, std::size_t max_vertices = kDefaultMaxVertices) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InvalidArgument("malformed generator spec '" + spec + "'");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "mycielski") {
    const bool is_spec = rest.find(':') != std::string::npos;
    return mycielskian(is_spec ? generate(rest, max_vertices) : load_dimacs_file(rest, max_vertices), max_vertices);
  }
  if (kind == "kneser") {
    const auto second = rest.find(':');
    if (second == std::string::npos) throw InvalidArgument("kneser spec needs n:k");
    return kneser_graph(parse_count(rest.substr(0, second)), parse_count(rest.substr(second + 1)), max_vertices);
  }
  const std::size_t n = parse_count(rest);
  if (kind == "complete") return complete_graph(n, max_vertices);
  if (kind == "cycle") return cycle_graph(n, max_vertices);
  if (kind == "path") return path_graph(n);
  if (kind == "edgeless") return edgeless_graph(n);
  throw InvalidArgument("unknown generator '" + kind + "'");
}

inline Graph load_graph(const GraphSource& src, std::size_t max_vertices) {
  if (src.input.empty() == src.gen.empty()) throw InvalidArgument("give exactly one of --input or --gen");
  Graph g = src.input.empty() ? generate(src.gen, max_vertices) : load_dimacs_file(src.input, max_vertices);
  if (g.vertex_count() > max_vertices)
    throw ResourceLimit("graph has " + std::to_string(g.vertex_count()) + " vertices; --max-n is " +
                        std::to_string(max_vertices));
  return g;
}

inline std::string graph_name(const GraphSource& src) { return src.gen.empty() ? src.input : src.gen; }

// ---------------------------------------------------------------------------
// verify-lemmas

struct LemmaCheckTally {
  explicit LemmaCheckTally(std::string check_name) : name(std::move(check_name)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t violations = 0;
  std::string first_violation;

  void fail(const std::string& what) {
    if (violations++ == 0) first_violation = what;
  }
  Json to_json() const {
    return Json{{"check", name},
                {"checked", checked},
                {"skipped", skipped},
                {"violations", violations},
                {"first_violation", first_violation}};
  }
};

inline std::vector<Rational> scale_grid(const Rational& s) {
  std::vector<Rational> grid{1, Rational(3, 2), 2, Rational(5, 2), 3};
  if (std::find(grid.begin(), grid.end(), s) == grid.end()) grid.push_back(s);
  return grid;
}

inline VertexSet random_subset(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> items;
  for (Vertex v = 0; v < n; ++v)
    if (rng() & 1u) items.push_back(v);
  return VertexSet(std::move(items));
}

// Greedy maximal independent set of h along a random vertex order.
inline VertexSet random_independent_set(const Graph& h, std::mt19937_64& rng) {
  std::vector<Vertex> order(h.vertex_count());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Vertex> chosen;
  for (Vertex v : order) {
    bool free = true;
    for (Vertex u : chosen) free = free && !h.adjacent(u, v);
    if (free) chosen.push_back(v);
  }
  return VertexSet(std::move(chosen));
}

struct VerifyOptions {
  std::optional<Rational> s;
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  bool corrupt_certificate = false;
};

inline Json verify_lemmas(const Graph& g, const VerifyOptions& opt, const EnumerationLimits& limits, bool& all_ok) {
  ChiFCertificate cert = solve_chi_f(g, limits);
  const Rational s = opt.s.value_or(std::max(cert.value, Rational(1)));
  if (opt.corrupt_certificate) cert.value += Rational(1, 100);
  const CertificateCheck cert_check = check_certificate(g, cert, limits);
  const WeightFunction& w = cert.dual;
  const OrderedGround ground(w);
  if (s < 1) throw InvalidArgument("--s must be at least 1");
  const std::size_t n = g.vertex_count();
  std::mt19937_64 rng(opt.seed);

  LemmaCheckTally certificate("certificate");
  certificate.checked = 1;
  if (!cert_check.ok()) certificate.fail(cert_check.failure);

  // Prefix-count characterization against the definition.
  LemmaCheckTally equivalence("sparse_characterization");
  const VertexSet all = ground.all();
  auto compare = [&](const VertexSet& x, const Rational& scale) {
    ++equivalence.checked;
    if (is_sparse(ground, x, all, scale).sparse != is_sparse_bruteforce(ground, x, all, scale))
      equivalence.fail("X=" + describe(x) + " s=" + to_string(scale));
  };
  if (n <= 8) {
    for (const auto& scale : scale_grid(s))
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) compare(VertexSet::from_mask(mask), scale);
  } else {
    for (std::size_t i = 0; i < opt.trials; ++i) {
      VertexSet x = random_subset(n, rng);
      if (x.size() > kBruteForceSparseMax) {
        ++equivalence.skipped;
        continue;
      }
      compare(x, s);
    }
  }

  // Sparse sets are light: w(X) <= w(V)/s.
  LemmaCheckTally light("sparse_weight_bound");
  for (std::size_t i = 0; i < opt.trials; ++i) {
    const VertexSet x = random_subset(n, rng);
    // Thin x greedily, in ground order, to an s-sparse subset.
    std::vector<Vertex> kept;
    std::size_t k = 0;
    for (Vertex v : ground.ranked(all)) {
      ++k;
      if (x.contains(v) && Rational(Integer(kept.size() + 1)) * s < Rational(Integer(k))) kept.push_back(v);
    }
    const VertexSet sparse(std::move(kept));
    const auto check = sparse_weight_bound_check(ground, w, sparse, all, s);
    ++light.checked;
    if (!check.holds) light.fail("X=" + describe(sparse) + " w(X)=" + to_string(check.lhs));
  }

  // Weight of sets free of dense principal subsets.
  LemmaCheckTally lemma6("lemma6");
  const std::vector<Rational> x_grid{1, Rational(3, 2), 2, 3};
  const SampleConfig half{Rational(1, 2), opt.seed, 1};
  for (std::size_t i = 0; i < opt.trials; ++i) {
    const Graph sample = sample_subgraph(g, half, i);
    const VertexSet a = random_independent_set(sample, rng);
    const Rational& x = x_grid[i % x_grid.size()];
    if (a.size() > kPrincipalEnumerationMax || find_dense_principal_subset(g, ground, a, s, x)) {
      ++lemma6.skipped;
      continue;
    }
    ++lemma6.checked;
    const auto heavy = extract_heavy_independent(g, ground, w, a, x, s);
    const auto bound = lemma6_weight_check(g, ground, w, a, x, s);
    if (!is_independent(g, heavy.set) || !heavy.meets_bound() || !bound.holds)
      lemma6.fail("A=" + describe(a) + " x=" + to_string(x));
  }

  Json checks = Json::array();
  all_ok = true;
  for (const auto* tally : {&certificate, &equivalence, &light, &lemma6}) {
    checks.push_back(tally->to_json());
    all_ok = all_ok && tally->violations == 0;
  }
  return Json{{"n", n},
              {"m", g.edge_count()},
              {"t", to_json(cert.value)},
              {"s", to_json(s)},
              {"seed", opt.seed},
              {"trials", opt.trials},
              {"checks", checks},
              {"passed", all_ok}};
}

// ---------------------------------------------------------------------------

inline TheoremParams params_from_flags(const Rational& p, const std::string& c_text, bool corollary, const Rational& t) {
  if (corollary) {
    if (!c_text.empty()) throw InvalidArgument("--c and --corollary are mutually exclusive");
    return corollary_params(p, t);
  }
  if (c_text.empty()) throw InvalidArgument("give --c or --corollary");
  return theorem_params(p, parse_rational(c_text));
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional chromatic numbers with exact certificates, and random-subgraph bound checks"};
  app.require_subcommand(1);

  GraphSource src;
  Caps caps;
  std::string format = "json";
  std::string p_text, c_text, s_text, t_text, trials_text, seed_text = "0";
  bool corollary = false;
  std::string output_path;
  std::string gen_positional;
  std::string mode = "theorem";
  bool corrupt = false;

  auto add_source = [&](CLI::App* cmd) {
    auto* in = cmd->add_option("--input", src.input, "DIMACS graph file");
    auto* gen = cmd->add_option("--gen", src.gen, "generator spec, e.g. cycle:5 or kneser:5:2");
    in->excludes(gen);
  };
  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--max-n", caps.max_n, "vertex cap for enumeration-based commands");
    cmd->add_option("--max-mis", caps.max_mis, "cap on the number of maximal independent sets");
    cmd->add_option("--time-budget-ms", caps.time_budget_ms, "per-solve time budget for Monte Carlo trials");
  };

  auto* gen_cmd = app.add_subcommand("gen", "write a generated graph in DIMACS format");
  gen_cmd->add_option("spec", gen_positional, "complete:n | cycle:n | path:n | edgeless:n | kneser:n:k | mycielski:<spec|file>")
      ->required();
  gen_cmd->add_option("-o,--output", output_path, "output file (default: stdout)");

  auto* chif_cmd = app.add_subcommand("chif", "compute the fractional chromatic number with a certificate");
  add_source(chif_cmd);
  add_caps(chif_cmd);

  auto* verify_cmd = app.add_subcommand("verify-lemmas", "run sparse-set and weight-bound checks on a graph");
  add_source(verify_cmd);
  add_caps(verify_cmd);
  verify_cmd->add_option("--s", s_text, "scale s (default: chi_f of the graph)");
  verify_cmd->add_option("--trials", trials_text, "randomized instances per check (default 200)");
  verify_cmd->add_option("--seed", seed_text, "seed");
  verify_cmd->add_flag("--corrupt-certificate", corrupt)->group("");  // test hook

  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate for the chi_f threshold event or the principal-set event");
  add_source(mc_cmd);
  add_caps(mc_cmd);
  mc_cmd->add_option("--mode", mode, "theorem | lemma5")->check(CLI::IsMember({"theorem", "lemma5"}));
  mc_cmd->add_option("--p", p_text, "edge probability as num/den")->required();
  mc_cmd->add_option("--c", c_text, "exponent c as num/den");
  mc_cmd->add_flag("--corollary", corollary, "use c = log_{1/p}(e t)");
  mc_cmd->add_option("--s", s_text, "scale s for lemma5 (default: chi_f)");
  mc_cmd->add_option("--trials", trials_text, "number of trials (default 1000)");
  mc_cmd->add_option("--seed", seed_text, "seed");
  mc_cmd->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the closed-form thresholds and probabilities");
  bounds_cmd->add_option("--t", t_text, "fractional chromatic number t as num/den")->required();
  bounds_cmd->add_option("--p", p_text, "edge probability as num/den")->required();
  bounds_cmd->add_option("--c", c_text, "exponent c as num/den");
  bounds_cmd->add_flag("--corollary", corollary, "use c = log_{1/p}(e t)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    caps.validate();
    if (gen_cmd->parsed()) {
      const Graph g = generate(gen_positional);
      if (output_path.empty()) {
        write_dimacs(out, g);
      } else {
        std::ofstream file(output_path);
        if (!file) throw InvalidArgument("cannot write '" + output_path + "'");
        write_dimacs(file, g);
      }
      return kOk;
    }

    if (chif_cmd->parsed()) {
      const Graph g = load_graph(src, caps.max_n);
      const ChiFCertificate cert = solve_chi_f(g, caps.enumeration());
      const CertificateCheck check = check_certificate(g, cert, caps.enumeration());
      Json doc = to_json(cert);
      doc["verified"] = check.ok();
      out << doc.dump(2) << '\n';
      if (!check.ok()) {
        err << "certificate verification failed: " << check.failure << '\n';
        return kVerificationFailed;
      }
      return kOk;
    }

    if (verify_cmd->parsed()) {
      const Graph g = load_graph(src, caps.max_n);
      VerifyOptions opt;
      if (!s_text.empty()) opt.s = parse_rational(s_text);
      if (!trials_text.empty()) opt.trials = parse_count(trials_text);
      opt.seed = parse_count(seed_text);
      opt.corrupt_certificate = corrupt;
      bool ok = false;
      const Json report = verify_lemmas(g, opt, caps.enumeration(), ok);
      out << report.dump(2) << '\n';
      if (!ok) err << "lemma verification reported violations\n";
      return ok ? kOk : kVerificationFailed;
    }

    if (mc_cmd->parsed()) {
      const Graph g = load_graph(src, caps.max_n);
      SampleConfig cfg;
      cfg.p = parse_rational(p_text);
      cfg.trials = trials_text.empty() ? 1000 : parse_count(trials_text);
      cfg.seed = parse_count(seed_text);
      cfg.validate();
      const HarnessLimits limits = caps.harness();
      const ChiFCertificate cert = solve_chi_f(g, limits.enumeration);
      const TheoremParams params = params_from_flags(cfg.p, c_text, corollary, cert.value);
      McReport report;
      if (mode == "lemma5") {
        const Rational s = s_text.empty() ? std::max(cert.value, Rational(1)) : parse_rational(s_text);
        report = mc_lemma5(g, cert.dual, s, params, cfg, limits, graph_name(src));
      } else {
        report = mc_theorem(g, params, cfg, limits, graph_name(src));
      }
      if (format == "csv") out << kMcCsvHeader << '\n' << to_csv_row(report) << '\n';
      else out << to_json(report).dump(2) << '\n';
      if (report.verdict == Verdict::vacuous) err << "vacuous bound: nothing is verified at these parameters\n";
      if (!report.applicable) err << "theorem inapplicable: t < 2\n";
      return report.verdict == Verdict::inconsistent ? kVerificationFailed : kOk;
    }

    if (bounds_cmd->parsed()) {
      const Rational t = parse_rational(t_text);
      const Rational p = parse_rational(p_text);
      require_probability(p);
      const BoundReport report = theorem_bounds(t, params_from_flags(p, c_text, corollary, t));
      Json doc = to_json(report);
      Json flags = Json::array();
      if (!report.applicable) flags.push_back("theorem inapplicable");
      if (report.vacuous) flags.push_back("vacuous bound");
      doc["flags"] = flags;
      doc["display"] = Json{{"threshold", to_display(report.threshold)},
                            {"probability_bound", to_display(report.probability_bound)},
                            {"corollary_threshold", to_display(report.corollary_threshold)},
                            {"corollary_probability", to_string(report.corollary_probability)}};
      out << doc.dump(2) << '\n';
      if (!report.applicable) err << "theorem inapplicable: t < 2\n";
      return kOk;
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const Error& e) {
    err << "failure: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace fchrom::cli
