#pragma once

namespace renorm {

/// Numerical budget shared by every gauge evaluation and solver.
/// Invariant: 0 < line_search_tol <= gauge_rel_tol <= cert_gap_tol < 1e-2.
struct ToleranceConfig {
  double gauge_rel_tol = 1e-10;
  double line_search_tol = 1e-12;
  double cert_gap_tol = 1e-6;

  /// Throws ConstraintError naming the first violated inequality.
  void validate() const;

  friend bool operator==(const ToleranceConfig&, const ToleranceConfig&) = default;
};

}  // namespace renorm
