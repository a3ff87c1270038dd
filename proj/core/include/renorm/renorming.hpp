#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "renorm/blueprint.hpp"
#include "renorm/gauge.hpp"
#include "renorm/tolerance.hpp"
#include "renorm/vector.hpp"

namespace renorm {

/// Parameter ladder for a finite truncation of the renorming.
///
/// Terms are numbered n = 1..levels. Term n uses e_n = e*_n = u_n,
/// h_n = e_{n+1}, v_n = v*_n = v_direction, t_n = 2^{-level(n)} rho / 16 and
/// eta_n = eps_{level(n)} with eps_i = 2^{-i} rho^2 / 409600. Here level(n) = n.
struct SchemeConfig {
  double rho = 0.0;
  int levels = 0;
  std::size_t dim = 0;
  Point v_direction;
  std::vector<int> level;      ///< level[n-1] = i(n)
  std::vector<double> t;       ///< t[n-1] = t_n
  std::vector<double> eps;     ///< eps[i-1] = eps_i
  std::vector<double> eta;     ///< eta[n-1] = eta_n

  /// The tuple alpha_n (1-based n).
  AlphaTuple alpha(int n) const;
  /// 1 / (1 - rho/8), the weight on the base norm.
  double base_factor() const { return 1.0 / (1.0 - rho / 8.0); }

  friend bool operator==(const SchemeConfig&, const SchemeConfig&) = default;
};

/// Builds and validates the ladder. Throws InputError if rho is outside
/// (0, 1/4), levels < 1, dim < levels + 3, or v_direction is not a unit vector
/// vanishing on coordinates 1..levels+1; ConstraintError if a ladder
/// invariant fails.
SchemeConfig build_scheme(double rho, int levels, std::size_t dim, const Point& v_direction);

/// Checks every SchemeConfig invariant; throws ConstraintError naming the first failure.
void validate_scheme(const SchemeConfig& s);

/// Locally uniformly convex approximant of |.|_alpha:
///   |x|_n = (|x|_alpha^2 + c |x|^2)^{1/2}.
/// With c <= 2 eta + eta^2 it satisfies |.|_alpha <= |.|_n <= (1 + eta)|.|_alpha,
/// and Q_{|.|_n}(x, y) >= c |x - y|^2.
class LurNorm final : public GaugeOracle {
 public:
  LurNorm(AlphaTuple alpha, double c, double eta, ToleranceConfig tol = {});

  double value(const Point& x) const override;
  Functional subgradient(const Point& x) const override;
  std::string name() const override { return "lur"; }
  std::size_t dim() const override { return blueprint_.dim(); }

  /// Lower bound from a certified lower bound of |x|_alpha.
  double lower_from_alpha(double alpha_lower, const Point& x) const;

  const BlueprintGauge& blueprint() const noexcept { return blueprint_; }
  const AlphaTuple& alpha() const noexcept { return blueprint_.alpha(); }
  double c() const noexcept { return c_; }
  double eta() const noexcept { return eta_; }

 private:
  BlueprintGauge blueprint_;
  double c_;
  double eta_;
};

/// Term n of the scheme with blend coefficient c_n = eta_n.
LurNorm make_lur_norm(const SchemeConfig& s, int n, ToleranceConfig tol = {});

double lur_gauge(const LurNorm& ln, const Point& x);

/// Finite composite norm max(|x|_1, ..., |x|_N, (1 - rho/8)^{-1} |x|).
class CompositeNorm final : public GaugeOracle {
 public:
  static constexpr std::size_t kBaseTerm = 0;

  explicit CompositeNorm(SchemeConfig scheme, ToleranceConfig tol = {});

  double value(const Point& x) const override;
  Functional subgradient(const Point& x) const override;
  std::string name() const override { return "composite"; }
  std::size_t dim() const override { return scheme_.dim; }

  /// Values of every term: index 0 is the scaled base norm, index n the n-th LUR term.
  std::vector<double> term_values(const Point& x) const;

  const SchemeConfig& scheme() const noexcept { return scheme_; }
  const std::vector<LurNorm>& terms() const noexcept { return terms_; }
  const LurNorm& term(int n) const { return terms_.at(static_cast<std::size_t>(n - 1)); }
  double base_factor() const noexcept { return scheme_.base_factor(); }

 private:
  SchemeConfig scheme_;
  std::vector<LurNorm> terms_;
};

double composite_gauge(const CompositeNorm& cn, const Point& x);

/// Terms (kBaseTerm for the base norm, n for the n-th LUR term) whose value is at
/// least composite(x) * (1 - slack). Throws InputError for x = 0.
std::set<std::size_t> active_terms(const CompositeNorm& cn, const Point& x, double slack);

struct CompositeCertificate {
  double primal = 0.0;
  double dual = 0.0;
  double gap = 0.0;
};

/// Lower bound for the composite value from per-term blueprint certificates.
CompositeCertificate certify_composite(const CompositeNorm& cn, const Point& x, Sampler& sampler,
                                       int random_dirs = 16, int refine_steps = 32);

}  // namespace renorm
