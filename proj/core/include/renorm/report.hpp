#pragma once

#include <map>
#include <string>
#include <vector>

#include "renorm/config.hpp"
#include "renorm/theorem.hpp"

namespace renorm {

struct ExperimentReport {
  RunConfig config;
  LadderResult result;
  /// Wall-clock seconds per phase. Emitted only when requested, so that
  /// reports stay byte-identical across runs by default.
  std::map<std::string, double> timings;
  bool pass = false;

  friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

ExperimentReport run_experiment(const RunConfig& cfg);

/// Full report as JSON (two-space indent, trailing newline).
std::string report_to_json(const ExperimentReport& r, bool include_timings = false);
/// Inverse of report_to_json. Throws InputError on malformed input.
ExperimentReport report_from_json(const std::string& text);

/// Ladder table: header `n,t_n,delta,in_sep,out_sep,bound,ratio,pass`, one row
/// per level, LF line endings, shortest round-trip decimals.
std::string ladder_to_csv(const ExperimentReport& r);

/// Writes `content` to `path`; throws std::runtime_error on I/O failure.
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace renorm
