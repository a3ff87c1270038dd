#pragma once

#include <optional>
#include <string>
#include <vector>

#include "renorm/blueprint.hpp"
#include "renorm/convex_set.hpp"
#include "renorm/projection.hpp"
#include "renorm/renorming.hpp"

namespace renorm {

/// Input separation (1 - rho)^{-2} 2t of the witness pair x+-.
inline double separation_delta(double rho, double t) {
  const double inv = 1.0 / (1.0 - rho);
  return 2.0 * t * inv * inv;
}

/// One numerically checked hypothesis: `measured` compared against `bound`
/// through the relation spelled out in `formula`.
struct HypothesisCheck {
  std::string name;
  std::string formula;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;

  friend bool operator==(const HypothesisCheck&, const HypothesisCheck&) = default;
};

/// Outcome of the projection experiment for a single tuple.
struct SeparationConclusion {
  double v_star_r_plus = 0.0;    ///< v*(R(x+)), expected <= -rho/32
  double v_star_r_minus = 0.0;   ///< v*(R(x-)), expected >= rho/32
  double in_sep = 0.0;           ///< g(x+ - x-)
  double out_sep = 0.0;          ///< g(R(x+) - R(x-))
  double delta = 0.0;            ///< (1 - rho)^{-2} 2t
  double bound = 0.0;            ///< rho/16
  double swing_bound = 0.0;      ///< rho/32
  double gap_plus = 0.0;         ///< projection certificates
  double gap_minus = 0.0;
  double in_sep_cert_gap = 0.0;  ///< primal-dual gap of the in_sep evaluation (composite only)
  double out_sep_cert_gap = 0.0;
  Point r_plus, r_minus;
  bool pass = false;

  friend bool operator==(const SeparationConclusion&, const SeparationConclusion&) = default;
};

struct Theorem22Report {
  std::vector<HypothesisCheck> hypotheses;
  std::optional<SeparationConclusion> conclusion;

  bool hypotheses_pass() const;
  bool pass() const { return hypotheses_pass() && conclusion && conclusion->pass; }
  /// Names of failed hypotheses, in check order.
  std::vector<std::string> failed() const;

  friend bool operator==(const Theorem22Report&, const Theorem22Report&) = default;
};

struct Theorem22Options {
  int sandwich_samples = 64;
  std::uint64_t seed = 7;
  ToleranceConfig tol{};
};

/// Checks the separation theorem for one tuple against a strictly convex norm g:
/// every hypothesis is measured (sandwich |.|_alpha <= g <= (1 - rho)^{-2}|.| on
/// samples, g(y+-) <= 1 + eta, eta < t rho / 12800, [-(rho/4)v_K, (rho/4)v_K]
/// in K, (rho/4) g(v - v_K) < eta, K in the unit ball of g, and
/// sup_K |e*|, sup_K |h*| < t rho / 12800). If all hold, both projections run
/// and the conclusions v*(R(x+)) <= -rho/32, v*(R(x-)) >= rho/32 and
/// g(R(x+) - R(x-)) >= rho/16 are checked with slack cert_gap_tol.
/// Hypothesis failures are reported, never thrown.
Theorem22Report theorem22_check(const AlphaTuple& a, const GaugeOracle& g,
                                const CompactConvexSet& K, double eta,
                                const Theorem22Options& opts = {});

/// Sampled local modulus at a fixed point (continuity evidence only).
struct LocalModulus {
  double radius = 0.0;
  double max_out_sep = 0.0;

  friend bool operator==(const LocalModulus&, const LocalModulus&) = default;
};

struct LadderResult {
  ModulusReport ladder;
  std::vector<Theorem22Report> levels;  ///< levels[n-1]
  std::vector<double> ratios;           ///< bound / delta_n
  bool ratios_double = false;
  std::vector<LocalModulus> local_moduli;
  bool witnesses_bounded = false;       ///< every witness point has composite norm <= 1.2
  double max_witness_norm = 0.0;

  bool pass() const;
  friend bool operator==(const LadderResult&, const LadderResult&) = default;
};

struct LadderOptions {
  Theorem22Options level{};
  bool parallel = true;
  int local_modulus_dirs = 4;
};

/// Runs the separation check for every term of the composite norm against K
/// and assembles the modulus ladder. Levels may run in parallel; results are
/// ordered by level.
LadderResult theorem31_run(const SchemeConfig& scheme, const CompactConvexSet& K,
                           const LadderOptions& opts = {});

}  // namespace renorm
