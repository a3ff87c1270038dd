#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "renorm/blueprint.hpp"
#include "renorm/convex_set.hpp"
#include "renorm/renorming.hpp"
#include "renorm/tolerance.hpp"

namespace renorm {

/// Shape of the target compact convex set.
struct TargetSpec {
  enum class Kind { kSegment, kPolytope };
  Kind kind = Kind::kSegment;
  /// Segment [-scale v, scale v]; defaults to rho/4 when absent.
  std::optional<double> scale;
  std::vector<std::vector<double>> vertices;

  friend bool operator==(const TargetSpec&, const TargetSpec&) = default;
};

/// Everything an experiment depends on. Serialized as JSON (see docs/config.md).
struct RunConfig {
  double rho = 0.2;
  int levels = 4;
  std::size_t dim = 8;
  std::uint64_t seed = 7;
  ToleranceConfig tolerance{};
  /// 1-based basis index of the compact-set direction; 0 selects dim - 1.
  std::size_t v_index = 0;
  TargetSpec target{};
  int hypothesis_samples = 64;
  std::string json_out;
  std::string csv_out;

  /// Throws ConstraintError naming the violated field.
  void validate() const;
  std::size_t resolved_v_index() const { return v_index == 0 ? dim - 1 : v_index; }
  Point v_direction() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Parses a JSON config document. Unknown keys are rejected.
/// Throws InputError on malformed JSON or wrongly typed fields.
RunConfig parse_run_config(const std::string& json_text);
std::string run_config_to_json(const RunConfig& cfg);

SchemeConfig scheme_from_config(const RunConfig& cfg);
CompactConvexSet target_from_config(const RunConfig& cfg);
/// Fixture-A style tuple for the configured rho and dimension:
/// e = u1, h = u2, v = u3, t = rho/32.
AlphaTuple fixture_alpha_from_config(const RunConfig& cfg);

std::string scheme_to_json(const SchemeConfig& s);

}  // namespace renorm
