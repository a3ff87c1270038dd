#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "renorm/gauge.hpp"
#include "renorm/sampling.hpp"
#include "renorm/tolerance.hpp"
#include "renorm/vector.hpp"

namespace renorm {

/// The parameter tuple (v, v*, e, e*, h, h*, t) together with the slice depth rho.
///
/// Invariants (checked by make_alpha): v, e, h and the three functionals have
/// Euclidean norm 1; v*(v) = e*(e) = h*(h) = 1; |e*(h)| < rho/800;
/// 0 < t < rho/16; 0 < rho < 1/4.
struct AlphaTuple {
  Point v, e, h;
  Functional v_star, e_star, h_star;
  double t = 0.0;
  double rho = 0.0;

  std::size_t dim() const noexcept { return e.dim(); }
};

/// Validates and assembles a tuple. Each violated invariant raises a
/// ConstraintError whose constraint() is one of: "dimension", "rho_range",
/// "t_range", "unit_v", "unit_e", "unit_h", "unit_v_star", "unit_e_star",
/// "unit_h_star", "pairing_v", "pairing_e", "pairing_h", "e_star_h".
AlphaTuple make_alpha(Point v, Functional v_star, Point e, Functional e_star, Point h,
                      Functional h_star, double t, double rho);

/// Canonical fixture: d = 8, rho = 0.2, e = e* = u1, h = h* = u2,
/// v = v* = u3 (1-based basis labels), t = rho/32.
AlphaTuple fixture_a();

struct DerivedPoints {
  Point x_plus, x_minus;
  Point y_plus, y_minus;
};

/// x+- = (1 - rho/2) e +- t h, y+ = x+ + (rho/4) v, y- = x- - (rho/4) v.
/// Throws ConstraintError if |y+-| >= 1 - rho/8 or y+, y- are dependent.
DerivedPoints derive_points(const AlphaTuple& a);

/// Gauge of C = B cap {|e*| <= 1 - rho}: max(|x|, |e*(x)| / (1 - rho)).
double gauge_C(const AlphaTuple& a, const Point& x);

/// Support function of C: min over s of |u - s e*| + (1 - rho)|s|, solved by
/// golden-section search over |s| <= |u| / (1 - rho).
double support_C(const AlphaTuple& a, const Functional& u, double tol = 1e-12);

/// Support function of the one-sided cap B cap {e* <= 1 - rho}:
/// min over s >= 0 of |u - s e*| + (1 - rho) s.
double support_half_cap(const AlphaTuple& a, const Functional& u, double tol = 1e-12);

/// Minkowski gauge of B_alpha = co(C u {+-y+, +-y-}).
///
/// Evaluated as the infimal convolution of gauge_C with the cross-polytope
/// gauge of span{y+, y-}:
///
///   |x|_alpha = min over (s1, s2) of gauge_C(x - s1 y+ - s2 y-) + |s1| + |s2|,
///
/// by nested golden-section search (outer over s1, inner over s2) on the box
/// |s1| + |s2| <= gauge_C(x). The residual is expressed in an orthonormal basis
/// of span{y+, y-, x}, so each inner evaluation costs O(1) and does not suffer
/// from cancellation when the residual is small.
///
/// Points with |e*(x)| <= (1 - rho)|x| are answered exactly by |x|, since
/// there |x| <= |x|_alpha <= gauge_C(x) = |x|. Pass `unmodified_shortcut =
/// false` to force the nested search everywhere.
class BlueprintGauge final : public GaugeOracle {
 public:
  explicit BlueprintGauge(AlphaTuple alpha, ToleranceConfig tol = {},
                          bool unmodified_shortcut = true);

  struct Evaluation {
    double value = 0.0;
    double s_plus = 0.0;   ///< weight on y+
    double s_minus = 0.0;  ///< weight on y-
    int evals = 0;
  };

  Evaluation evaluate(const Point& x) const;
  double value(const Point& x) const override { return evaluate(x).value; }
  Functional subgradient(const Point& x) const override;
  std::string name() const override { return "alpha"; }
  std::size_t dim() const override { return alpha_.dim(); }

  /// h_{B_alpha}(u) = max(support_C(u), |u(y+)|, |u(y-)|).
  double support(const Functional& u) const;

  const AlphaTuple& alpha() const noexcept { return alpha_; }
  const DerivedPoints& points() const noexcept { return points_; }

 private:
  AlphaTuple alpha_;
  DerivedPoints points_;
  bool shortcut_;
  // Orthonormal q1, q2 spanning {y+, y-} and the coordinates of y+- in that basis.
  Point q1_, q2_;
  double yp1_ = 0.0, ym1_ = 0.0, ym2_ = 0.0;
  double e_yp_ = 0.0, e_ym_ = 0.0;
};

/// Free-function form of BlueprintGauge::value.
double gauge_alpha(const AlphaTuple& a, const Point& x, const ToleranceConfig& tol = {});

/// Dual certificate: max over u in net of u(x) / h_{B_alpha}(u). Never exceeds
/// |x|_alpha. Throws InputError for an empty net or a functional with zero support.
double gauge_alpha_lower(const BlueprintGauge& g, const Point& x, std::span<const Functional> net);
double gauge_alpha_lower(const AlphaTuple& a, const Point& x, std::span<const Functional> net);

struct GaugeCertificate {
  double primal = 0.0;  ///< upper bound (solver value)
  double dual = 0.0;    ///< lower bound (best net functional)
  double gap = 0.0;     ///< primal - dual, >= 0 up to rounding
  Functional witness;   ///< functional attaining `dual`
};

/// Certifies a gauge value on an adaptive net: the seed directions +-e*, v*,
/// h*, phi+-, x itself and the solver's subgradient, `random_dirs` random
/// directions, then a shrinking random local refinement around the best one.
GaugeCertificate certify_gauge_alpha(const BlueprintGauge& g, const Point& x, Sampler& sampler,
                                     int random_dirs = 32, int refine_steps = 64);

/// The separating functionals phi+- and the tilt weight lambda = 1 - rho/100.
struct HyperplanePair {
  Functional phi_plus, phi_minus;
  double lambda = 0.0;
};

/// phi+ = lambda e* + (1 - lambda)(h* - (4t/rho) v*),
/// phi- = lambda e* + (1 - lambda)(-h* + (4t/rho) v*).
/// Throws ConstraintError("phi_norm") if either dual norm exceeds 1 + t/25.
HyperplanePair hyperplanes(const AlphaTuple& a);

/// Slack (lhs - rhs) of the six separation estimates, evaluated at (k, z).
struct LemmaResiduals {
  static constexpr std::array<const char*, 6> kNames = {
      "plus_vs_y_plus", "plus_vs_y_minus", "plus_vs_cap",
      "minus_vs_y_minus", "minus_vs_y_plus", "minus_vs_cap"};

  std::array<double, 6> values{};

  double min() const;
};

/// Evaluates the six estimates for k in the Euclidean unit ball and z in
/// B cap {e* <= 1 - rho}. Without z, the cap items use the worst admissible z
/// (the one-sided cap support of phi+-), which implies the estimate for every z.
/// Throws InputError if |k| > 1, |z| > 1 or e*(z) > 1 - rho.
LemmaResiduals lemma_residuals(const AlphaTuple& a, const Point& k,
                               const std::optional<Point>& z = std::nullopt);

}  // namespace renorm
