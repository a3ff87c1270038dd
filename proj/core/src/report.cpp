#include "renorm/report.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "renorm/errors.hpp"

namespace renorm {

using nlohmann::json;

namespace {

json hypothesis_to_json(const HypothesisCheck& h) {
  return {{"name", h.name},
          {"formula", h.formula},
          {"measured", h.measured},
          {"bound", h.bound},
          {"pass", h.pass}};
}

HypothesisCheck hypothesis_from_json(const json& j) {
  HypothesisCheck h;
  h.name = j.at("name").get<std::string>();
  h.formula = j.at("formula").get<std::string>();
  h.measured = j.at("measured").get<double>();
  h.bound = j.at("bound").get<double>();
  h.pass = j.at("pass").get<bool>();
  return h;
}

json conclusion_to_json(const SeparationConclusion& c) {
  return {{"v_star_r_plus", c.v_star_r_plus},
          {"v_star_r_minus", c.v_star_r_minus},
          {"swing_bound", c.swing_bound},
          {"in_sep", c.in_sep},
          {"delta", c.delta},
          {"out_sep", c.out_sep},
          {"bound", c.bound},
          {"gap_plus", c.gap_plus},
          {"gap_minus", c.gap_minus},
          {"in_sep_cert_gap", c.in_sep_cert_gap},
          {"out_sep_cert_gap", c.out_sep_cert_gap},
          {"r_plus", c.r_plus.values()},
          {"r_minus", c.r_minus.values()},
          {"pass", c.pass}};
}

SeparationConclusion conclusion_from_json(const json& j) {
  SeparationConclusion c;
  c.v_star_r_plus = j.at("v_star_r_plus").get<double>();
  c.v_star_r_minus = j.at("v_star_r_minus").get<double>();
  c.swing_bound = j.at("swing_bound").get<double>();
  c.in_sep = j.at("in_sep").get<double>();
  c.delta = j.at("delta").get<double>();
  c.out_sep = j.at("out_sep").get<double>();
  c.bound = j.at("bound").get<double>();
  c.gap_plus = j.at("gap_plus").get<double>();
  c.gap_minus = j.at("gap_minus").get<double>();
  c.in_sep_cert_gap = j.at("in_sep_cert_gap").get<double>();
  c.out_sep_cert_gap = j.at("out_sep_cert_gap").get<double>();
  c.r_plus = Point(j.at("r_plus").get<std::vector<double>>());
  c.r_minus = Point(j.at("r_minus").get<std::vector<double>>());
  c.pass = j.at("pass").get<bool>();
  return c;
}

json row_to_json(const ModulusRow& r) {
  return {{"n", r.n},         {"delta", r.delta}, {"in_sep", r.in_sep},
          {"out_sep", r.out_sep}, {"bound", r.bound}, {"pass", r.pass}};
}

ModulusRow row_from_json(const json& j) {
  ModulusRow r;
  r.n = j.at("n").get<int>();
  r.delta = j.at("delta").get<double>();
  r.in_sep = j.at("in_sep").get<double>();
  r.out_sep = j.at("out_sep").get<double>();
  r.bound = j.at("bound").get<double>();
  r.pass = j.at("pass").get<bool>();
  return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

ExperimentReport run_experiment(const RunConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentReport r;
  r.config = cfg;
  const SchemeConfig scheme = scheme_from_config(cfg);
  const CompactConvexSet K = target_from_config(cfg);
  r.timings["setup"] = seconds_since(t0);

  LadderOptions opts;
  opts.level.sandwich_samples = cfg.hypothesis_samples;
  opts.level.seed = cfg.seed;
  opts.level.tol = cfg.tolerance;
  const auto t1 = std::chrono::steady_clock::now();
  r.result = theorem31_run(scheme, K, opts);
  r.timings["ladder"] = seconds_since(t1);
  r.timings["total"] = seconds_since(t0);
  r.pass = r.result.pass();
  return r;
}

std::string report_to_json(const ExperimentReport& r, bool include_timings) {
  json levels = json::array();
  for (std::size_t i = 0; i < r.result.levels.size(); ++i) {
    const Theorem22Report& lvl = r.result.levels[i];
    json hyp = json::array();
    for (const auto& h : lvl.hypotheses) hyp.push_back(hypothesis_to_json(h));
    levels.push_back({{"n", i + 1},
                      {"hypotheses", hyp},
                      {"conclusion", lvl.conclusion ? conclusion_to_json(*lvl.conclusion) : json()},
                      {"pass", lvl.pass()}});
  }
  json rows = json::array();
  for (const auto& row : r.result.ladder.rows) rows.push_back(row_to_json(row));
  json moduli = json::array();
  for (const auto& m : r.result.local_moduli) {
    moduli.push_back({{"radius", m.radius}, {"max_out_sep", m.max_out_sep}});
  }
  json j = {{"config", json::parse(run_config_to_json(r.config))},
            {"levels", levels},
            {"ladder", rows},
            {"ratios", r.result.ratios},
            {"ratios_double", r.result.ratios_double},
            {"witnesses_bounded", r.result.witnesses_bounded},
            {"max_witness_norm", r.result.max_witness_norm},
            {"local_moduli", moduli},
            {"pass", r.pass}};
  if (include_timings) j["timings"] = r.timings;
  return j.dump(2) + "\n";
}

ExperimentReport report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    ExperimentReport r;
    r.config = parse_run_config(j.at("config").dump());
    for (const auto& lj : j.at("levels")) {
      Theorem22Report lvl;
      for (const auto& h : lj.at("hypotheses")) lvl.hypotheses.push_back(hypothesis_from_json(h));
      if (!lj.at("conclusion").is_null()) lvl.conclusion = conclusion_from_json(lj.at("conclusion"));
      r.result.levels.push_back(std::move(lvl));
    }
    for (const auto& row : j.at("ladder")) r.result.ladder.rows.push_back(row_from_json(row));
    r.result.ratios = j.at("ratios").get<std::vector<double>>();
    r.result.ratios_double = j.at("ratios_double").get<bool>();
    r.result.witnesses_bounded = j.at("witnesses_bounded").get<bool>();
    r.result.max_witness_norm = j.at("max_witness_norm").get<double>();
    for (const auto& m : j.at("local_moduli")) {
      r.result.local_moduli.push_back(
          {m.at("radius").get<double>(), m.at("max_out_sep").get<double>()});
    }
    if (j.contains("timings")) r.timings = j.at("timings").get<std::map<std::string, double>>();
    r.pass = j.at("pass").get<bool>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report: ") + e.what());
  }
}

std::string ladder_to_csv(const ExperimentReport& r) {
  std::ostringstream out;
  out << "n,t_n,delta,in_sep,out_sep,bound,ratio,pass\n";
  const auto& rows = r.result.ladder.rows;
  const SchemeConfig scheme = scheme_from_config(r.config);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ModulusRow& row = rows[i];
    const double t = scheme.t.at(static_cast<std::size_t>(row.n - 1));
    const double ratio = i < r.result.ratios.size() ? r.result.ratios[i] : row.bound / row.delta;
    out << row.n << ',' << format_double(t) << ',' << format_double(row.delta) << ','
        << format_double(row.in_sep) << ',' << format_double(row.out_sep) << ','
        << format_double(row.bound) << ',' << format_double(ratio) << ','
        << (row.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  f << content;
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace renorm
