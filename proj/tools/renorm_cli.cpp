// renorm: command-line front end for the renorming experiments.
//
// Exit status: 0 when every assertion holds, 1 when one fails (the invariant
// is named on stderr), 2 for malformed arguments or configuration.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "renorm/renorm.hpp"

namespace {

using namespace renorm;

constexpr int kOk = 0;
constexpr int kAssertion = 1;
constexpr int kMalformed = 2;

// Flags shared by every subcommand. Values from --config load first; flags
// given explicitly override them.
struct CommonFlags {
  std::string config_path;
  std::optional<double> rho;
  std::optional<int> levels;
  std::optional<std::size_t> dim;
  std::optional<std::uint64_t> seed;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
    app->add_option("--rho", rho, "rho in (0, 1/4)");
    app->add_option("--levels", levels, "number of ladder levels N");
    app->add_option("--dim", dim, "ambient dimension d");
    app->add_option("--seed", seed, "64-bit RNG seed");
  }

  RunConfig load() const {
    RunConfig c = config_path.empty() ? RunConfig{} : parse_run_config(read_file(config_path));
    if (rho) c.rho = *rho;
    if (levels) c.levels = *levels;
    if (dim) c.dim = *dim;
    if (seed) c.seed = *seed;
    c.validate();
    return c;
  }
};

struct AssertionFailure {
  std::string invariant;
  std::string detail;
};

std::vector<Point> read_points(const std::vector<std::string>& inline_points,
                               const std::string& file) {
  std::vector<Point> out;
  for (const auto& p : inline_points) out.push_back(parse_point(p));
  if (!file.empty()) {
    std::istringstream in(read_file(file));
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line.front() == '#') continue;
      out.push_back(parse_point(line));
    }
  }
  if (out.empty()) throw InputError("no points given (use --point or --points)");
  return out;
}

std::unique_ptr<GaugeOracle> make_norm(const std::string& name, const RunConfig& cfg, int term,
                                       std::size_t point_dim) {
  if (name == "euclid") return std::make_unique<EuclideanGauge>(point_dim, cfg.tolerance);
  if (name == "alpha") {
    return std::make_unique<BlueprintGauge>(fixture_alpha_from_config(cfg), cfg.tolerance);
  }
  const SchemeConfig s = scheme_from_config(cfg);
  if (name == "lur") {
    if (term < 1 || term > s.levels) throw InputError("--term must lie in [1, levels]");
    return std::make_unique<LurNorm>(make_lur_norm(s, term, cfg.tolerance));
  }
  if (name == "composite") return std::make_unique<CompositeNorm>(s, cfg.tolerance);
  throw InputError("unknown norm '" + name + "'");
}

CompactConvexSet target_from_flags(const RunConfig& cfg, const std::vector<std::string>& verts) {
  if (verts.empty()) return target_from_config(cfg);
  std::vector<Point> ps;
  for (const auto& v : verts) ps.push_back(parse_point(v));
  if (ps.size() == 2) return CompactConvexSet::segment(ps[0], ps[1]);
  return CompactConvexSet::polytope(std::move(ps));
}

std::optional<AssertionFailure> cmd_gauge(const RunConfig& cfg, const std::string& norm, int term,
                                          const std::vector<Point>& points) {
  const auto g = make_norm(norm, cfg, term, points.front().dim());
  for (const Point& x : points) {
    require_same_dim(x.dim(), g->dim(), "gauge point");
    std::cout << format_double(g->value(x)) << '\n';
  }
  return std::nullopt;
}

std::optional<AssertionFailure> cmd_verify_lemma(const RunConfig& cfg, long samples) {
  if (samples < 1) throw InputError("--samples must be >= 1");
  const AlphaTuple a = fixture_alpha_from_config(cfg);
  Sampler rng(cfg.seed);
  LemmaResiduals worst;
  worst.values.fill(std::numeric_limits<double>::infinity());
  for (long i = 0; i < samples; ++i) {
    const Point k = rng.unit_ball(a.dim());
    Point z = rng.unit_ball(a.dim());
    while (dual_eval(a.e_star, z) > 1.0 - a.rho) z = rng.unit_ball(a.dim());
    const LemmaResiduals r = lemma_residuals(a, k, z);
    for (std::size_t j = 0; j < r.values.size(); ++j) {
      worst.values[j] = std::min(worst.values[j], r.values[j]);
    }
  }
  constexpr double kSlack = 1e-12;
  std::optional<AssertionFailure> fail;
  for (std::size_t j = 0; j < worst.values.size(); ++j) {
    std::cout << LemmaResiduals::kNames[j] << " min_residual=" << format_double(worst.values[j])
              << '\n';
    if (!fail && worst.values[j] < -kSlack) {
      fail = AssertionFailure{std::string("lemma_residual.") + LemmaResiduals::kNames[j],
                              "residual " + format_double(worst.values[j]) + " < -1e-12"};
    }
  }
  std::cout << "min_residual=" << format_double(worst.min()) << " samples=" << samples << '\n';
  return fail;
}

std::optional<AssertionFailure> cmd_hyperplanes(const RunConfig& cfg) {
  const AlphaTuple a = fixture_alpha_from_config(cfg);
  const BlueprintGauge g(a, cfg.tolerance);
  const HyperplanePair hp = hyperplanes(a);
  const double bound = 1.0 + a.t / 25.0;
  const double np = euclid_norm(hp.phi_plus), nm = euclid_norm(hp.phi_minus);
  std::cout << "lambda=" << format_double(hp.lambda) << '\n'
            << "phi_plus=" << format_point(as_point(hp.phi_plus)) << '\n'
            << "phi_minus=" << format_point(as_point(hp.phi_minus)) << '\n'
            << "dual_norm_plus=" << format_double(np) << '\n'
            << "dual_norm_minus=" << format_double(nm) << '\n'
            << "bound=" << format_double(bound) << " (1 + t/25)\n"
            << "alpha_support_plus=" << format_double(g.support(hp.phi_plus)) << '\n'
            << "alpha_support_minus=" << format_double(g.support(hp.phi_minus)) << '\n';
  if (np > bound || nm > bound) {
    return AssertionFailure{"phi_norm", "dual norm exceeds 1 + t/25"};
  }
  return std::nullopt;
}

std::optional<AssertionFailure> cmd_project(const RunConfig& cfg, const std::string& norm, int term,
                                            const Point& x, const std::vector<std::string>& verts) {
  const auto g = make_norm(norm, cfg, term, x.dim());
  const CompactConvexSet K = target_from_flags(cfg, verts);
  const ProjectionResult r = nearest_point(*g, K, x, cfg.tolerance);
  std::cout << "point=" << format_point(r.point) << '\n'
            << "distance=" << format_double(r.distance) << '\n'
            << "gap=" << format_double(r.gap) << '\n'
            << "evals=" << r.evals << '\n';
  if (r.gap > cfg.tolerance.cert_gap_tol) {
    return AssertionFailure{"projection_gap", "gap " + format_double(r.gap) + " > cert_gap_tol"};
  }
  return std::nullopt;
}

void print_ladder_rows(const ModulusReport& rep) {
  std::cout << "n,delta,in_sep,out_sep,bound,pass\n";
  for (const auto& r : rep.rows) {
    std::cout << r.n << ',' << format_double(r.delta) << ',' << format_double(r.in_sep) << ','
              << format_double(r.out_sep) << ',' << format_double(r.bound) << ','
              << (r.pass ? "true" : "false") << '\n';
  }
}

std::optional<AssertionFailure> cmd_modulus(const RunConfig& cfg) {
  const SchemeConfig s = scheme_from_config(cfg);
  const CompositeNorm cn(s, cfg.tolerance);
  const CompactConvexSet K = target_from_config(cfg);
  std::vector<WitnessPair> pairs;
  for (int n = 1; n <= s.levels; ++n) {
    const DerivedPoints P = derive_points(s.alpha(n));
    const double t = s.t[static_cast<std::size_t>(n - 1)];
    pairs.push_back({P.x_plus, P.x_minus, separation_delta(s.rho, t), n});
  }
  const ModulusReport rep = modulus_scan(cn, K, pairs, s.rho / 16.0, cfg.tolerance);
  print_ladder_rows(rep);
  for (const auto& r : rep.rows) {
    if (!r.pass) return AssertionFailure{"modulus_row." + std::to_string(r.n), "separation pattern fails"};
  }
  return std::nullopt;
}

std::optional<AssertionFailure> first_failure(const ExperimentReport& r) {
  for (std::size_t i = 0; i < r.result.levels.size(); ++i) {
    const auto& lvl = r.result.levels[i];
    const std::string prefix = "level." + std::to_string(i + 1) + ".";
    for (const auto& name : lvl.failed()) return AssertionFailure{prefix + name, "hypothesis fails"};
    if (lvl.conclusion && !lvl.conclusion->pass) {
      return AssertionFailure{prefix + "separation", "conclusion fails"};
    }
  }
  for (const auto& row : r.result.ladder.rows) {
    if (!row.pass) return AssertionFailure{"ladder_row." + std::to_string(row.n), "row fails"};
  }
  if (!r.result.ratios_double) return AssertionFailure{"ratios_double", "bound/delta does not double"};
  if (!r.result.witnesses_bounded) {
    return AssertionFailure{"witnesses_bounded", "witness norm " + format_double(r.result.max_witness_norm)};
  }
  return std::nullopt;
}

std::optional<AssertionFailure> cmd_experiment(RunConfig cfg, const std::string& out,
                                               const std::string& csv, bool timings) {
  if (!out.empty()) cfg.json_out = out;
  if (!csv.empty()) cfg.csv_out = csv;
  const ExperimentReport r = run_experiment(cfg);
  if (!cfg.json_out.empty()) write_file(cfg.json_out, report_to_json(r, timings));
  if (!cfg.csv_out.empty()) write_file(cfg.csv_out, ladder_to_csv(r));
  std::cout << ladder_to_csv(r);
  std::cout << "pass=" << (r.pass ? "true" : "false") << '\n';
  if (r.pass) return std::nullopt;
  auto f = first_failure(r);
  return f ? f : AssertionFailure{"experiment", "summary fails"};
}

std::optional<AssertionFailure> cmd_selftest(std::uint64_t seed, double scale) {
  std::optional<AssertionFailure> fail;
  for (const SuiteResult& suite : run_selftest({seed, scale})) {
    for (const SelfCheck& c : suite.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << suite.suite << '.' << c.name << ": " << c.detail
                << '\n';
      if (!c.pass && !fail) fail = AssertionFailure{suite.suite + '.' + c.name, c.detail};
    }
  }
  return fail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Renorming experiments: gauges, projections and modulus ladders"};
  app.require_subcommand(1);

  CommonFlags common;
  std::string norm = "alpha";
  int term = 1;
  std::vector<std::string> inline_points;
  std::string points_file;
  long samples = 100000;
  std::string point_text;
  std::vector<std::string> vertices;
  std::string out, csv;
  bool timings = false;
  double scale = 1.0;

  auto* gauge = app.add_subcommand("gauge", "Evaluate a norm at points");
  common.attach(gauge);
  gauge->add_option("--norm", norm, "euclid | alpha | lur | composite")
      ->check(CLI::IsMember({"euclid", "alpha", "lur", "composite"}));
  gauge->add_option("--term", term, "ladder term for --norm lur (1-based)");
  gauge->add_option("--point", inline_points, "comma-separated coordinates (repeatable)");
  gauge->add_option("--points", points_file, "file with one point per line")->check(CLI::ExistingFile);

  auto* lemma = app.add_subcommand("verify-lemma", "Residual sweep of the six separation estimates");
  common.attach(lemma);
  lemma->add_option("--samples", samples, "number of random (k, z) pairs");

  auto* hyper = app.add_subcommand("hyperplanes", "Emit the separating functionals and their norms");
  common.attach(hyper);

  auto* project = app.add_subcommand("project", "Single nearest-point query");
  common.attach(project);
  project->add_option("--norm", norm, "euclid | alpha | lur | composite")
      ->check(CLI::IsMember({"euclid", "alpha", "lur", "composite"}));
  project->add_option("--term", term, "ladder term for --norm lur (1-based)");
  project->add_option("--point", point_text, "query point")->required();
  project->add_option("--vertex", vertices,
                      "target vertex (repeatable; two give a segment); default: configured target");

  auto* modulus = app.add_subcommand("modulus", "Scan the witness pairs of every ladder level");
  common.attach(modulus);

  auto* experiment = app.add_subcommand("experiment", "Full modulus ladder experiment");
  common.attach(experiment);
  experiment->add_option("--out", out, "JSON report path");
  experiment->add_option("--csv", csv, "CSV ladder path");
  experiment->add_flag("--timings", timings, "include wall-clock timings in the JSON report");

  auto* selftest = app.add_subcommand("selftest", "Run every module's invariant suite");
  common.attach(selftest);
  selftest->add_option("--scale", scale, "sample-count multiplier")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kMalformed;
  }

  try {
    const RunConfig cfg = common.load();
    std::optional<AssertionFailure> fail;
    if (*gauge) {
      fail = cmd_gauge(cfg, norm, term, read_points(inline_points, points_file));
    } else if (*lemma) {
      fail = cmd_verify_lemma(cfg, samples);
    } else if (*hyper) {
      fail = cmd_hyperplanes(cfg);
    } else if (*project) {
      fail = cmd_project(cfg, norm, term, parse_point(point_text), vertices);
    } else if (*modulus) {
      fail = cmd_modulus(cfg);
    } else if (*experiment) {
      fail = cmd_experiment(cfg, out, csv, timings);
    } else if (*selftest) {
      fail = cmd_selftest(cfg.seed, scale);
    }
    if (fail) {
      std::cerr << "assertion failed: " << fail->invariant << ": " << fail->detail << '\n';
      return kAssertion;
    }
    return kOk;
  } catch (const NumericalError& e) {
    std::cerr << "assertion failed: solver_convergence: " << e.what() << '\n';
    return kAssertion;
  } catch (const ConstraintError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kMalformed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kMalformed;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMalformed;
  }
}
