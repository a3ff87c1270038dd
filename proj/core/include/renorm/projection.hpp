#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "renorm/convex_set.hpp"
#include "renorm/gauge.hpp"
#include "renorm/tolerance.hpp"
#include "renorm/vector.hpp"

namespace renorm {

struct ProjectionResult {
  Point point;
  double distance = 0.0;
  /// {s} for a segment, barycentric weights for a polytope.
  std::vector<double> parameter;
  /// Certified bound on distance - min_K g(x - k).
  double gap = 0.0;
  int evals = 0;
};

struct PolytopeSolverOptions {
  int restarts = 8;
  int iterations_per_restart = 400;
  int polish_rounds = 12;
  std::uint64_t seed = 0x5eed;
};

/// Nearest point of K to x in the norm g: minimizes k -> g(x - k) over K.
///
/// Segments: certified golden-section search on s in [0, 1].
/// Polytopes: projected subgradient on barycentric weights with restarts and
/// a decaying Polyak step, followed by pairwise golden-section exchanges
/// between vertices. The gap is the best Frank-Wolfe bound seen.
/// Throws NumericalError (carrying the best weights) if the polish phase is
/// still improving when its budget runs out.
ProjectionResult nearest_point(const GaugeOracle& g, const CompactConvexSet& K, const Point& x,
                               const ToleranceConfig& tol, const PolytopeSolverOptions& opts = {});

struct WitnessPair {
  Point first, second;
  /// Asserted upper bound on g(first - second).
  double delta = 0.0;
  int n = 0;
};

struct ModulusRow {
  int n = 0;
  double delta = 0.0;
  double in_sep = 0.0;
  double out_sep = 0.0;
  double bound = 0.0;
  bool pass = false;

  friend bool operator==(const ModulusRow&, const ModulusRow&) = default;
};

/// Lower-bound witnesses for the modulus of continuity of the nearest point map.
struct ModulusReport {
  std::vector<ModulusRow> rows;

  bool all_pass() const;
  friend bool operator==(const ModulusReport&, const ModulusReport&) = default;
};

/// Projects both points of every pair and records the separations.
/// A row passes iff out_sep >= bound - cert_gap_tol and in_sep <= delta + cert_gap_tol.
ModulusReport modulus_scan(const GaugeOracle& g, const CompactConvexSet& K,
                           std::span<const WitnessPair> pairs, double bound,
                           const ToleranceConfig& tol);

}  // namespace renorm
