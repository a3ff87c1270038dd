#include "renorm/renorming.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "renorm/errors.hpp"

namespace renorm {

AlphaTuple SchemeConfig::alpha(int n) const {
  if (n < 1 || n > levels) throw InputError("scheme term index out of range: " + std::to_string(n));
  const auto i = static_cast<std::size_t>(n - 1);
  return make_alpha(v_direction, as_functional(v_direction), Point::unit(dim, i),
                    Functional::unit(dim, i), Point::unit(dim, i + 1),
                    Functional::unit(dim, i + 1), t[i], rho);
}

SchemeConfig build_scheme(double rho, int levels, std::size_t dim, const Point& v_direction) {
  if (!std::isfinite(rho) || !(rho > 0.0 && rho < 0.25)) {
    throw InputError("build_scheme: rho must lie in (0, 1/4)");
  }
  if (levels < 1) throw InputError("build_scheme: at least one level is required");
  if (dim < static_cast<std::size_t>(levels) + 3) {
    throw InputError("build_scheme: dimension " + std::to_string(dim) + " is too small for " +
                     std::to_string(levels) + " levels (need >= levels + 3)");
  }
  if (v_direction.dim() != dim) throw InputError("build_scheme: v_direction has wrong dimension");
  require_finite(v_direction, "build_scheme v_direction");
  if (std::abs(euclid_norm(v_direction) - 1.0) > 1e-12) {
    throw InputError("build_scheme: v_direction must be a unit vector");
  }
  for (std::size_t i = 0; i <= static_cast<std::size_t>(levels); ++i) {
    if (v_direction[i] != 0.0) {
      throw InputError("build_scheme: v_direction overlaps basis coordinate " +
                       std::to_string(i + 1) + " used by the e/h assignment");
    }
  }

  SchemeConfig s;
  s.rho = rho;
  s.levels = levels;
  s.dim = dim;
  s.v_direction = v_direction;
  for (int n = 1; n <= levels; ++n) {
    s.level.push_back(n);
    s.t.push_back(std::ldexp(rho / 16.0, -n));
    s.eps.push_back(std::ldexp(rho * rho / 409600.0, -n));
  }
  for (int n = 1; n <= levels; ++n) s.eta.push_back(s.eps[static_cast<std::size_t>(s.level[n - 1] - 1)]);
  validate_scheme(s);
  return s;
}

void validate_scheme(const SchemeConfig& s) {
  const auto N = static_cast<std::size_t>(s.levels);
  if (s.t.size() != N || s.eta.size() != N || s.level.size() != N) {
    throw ConstraintError("ladder_size", "per-term lists must have one entry per level");
  }
  const double room = s.base_factor() - 1.0;
  for (std::size_t k = 0; k < N; ++k) {
    if (!(s.t[k] > 0.0 && s.t[k] < s.rho / 16.0)) {
      throw ConstraintError("t_range", "t_" + std::to_string(k + 1) + " must lie in (0, rho/16)");
    }
    const double cap = std::min(s.t[k] * s.rho / 12800.0, room);
    if (!(s.eta[k] > 0.0 && s.eta[k] < cap)) {
      throw ConstraintError("eta_bound", "eta_" + std::to_string(k + 1) +
                                             " must lie in (0, min(t rho/12800, (1-rho/8)^-1 - 1))");
    }
    if (k + 1 < N && s.t[k + 1] != s.t[k] / 2.0) {
      throw ConstraintError("t_ladder", "t_{n+1} must equal t_n / 2");
    }
  }
  for (std::size_t n = 0; n < N + 1; ++n) {
    const Functional en_star = Functional::unit(s.dim, n);
    for (std::size_t m = 0; m < N + 1; ++m) {
      const double pair = dual_eval(en_star, Point::unit(s.dim, m));
      if (pair != (n == m ? 1.0 : 0.0)) {
        throw ConstraintError("biorthogonal", "e*_n(e_m) must equal the Kronecker delta");
      }
    }
  }
  if (std::abs(euclid_norm(s.v_direction) - 1.0) > 1e-12) {
    throw ConstraintError("unit_v", "v_n must be a unit vector");
  }
}

LurNorm::LurNorm(AlphaTuple alpha, double c, double eta, ToleranceConfig tol)
    : GaugeOracle(tol), blueprint_(std::move(alpha), tol), c_(c), eta_(eta) {
  if (!(c > 0.0) || !(eta > 0.0)) throw ConstraintError("lur_blend", "c and eta must be positive");
  if (std::sqrt(1.0 + c) > 1.0 + eta) {
    throw ConstraintError("lur_blend", "(1 + c)^(1/2) must not exceed 1 + eta");
  }
}

double LurNorm::value(const Point& x) const {
  const double ga = blueprint_.value(x);
  const double nx = euclid_norm(x);
  return std::sqrt(ga * ga + c_ * nx * nx);
}

Functional LurNorm::subgradient(const Point& x) const {
  const double ga = blueprint_.value(x);
  const double nx = euclid_norm(x);
  const double val = std::sqrt(ga * ga + c_ * nx * nx);
  if (val == 0.0) return Functional(dim());
  return (ga / val) * blueprint_.subgradient(x) + (c_ / val) * as_functional(x);
}

double LurNorm::lower_from_alpha(double alpha_lower, const Point& x) const {
  const double nx = euclid_norm(x);
  const double al = std::max(alpha_lower, 0.0);
  return std::sqrt(al * al + c_ * nx * nx);
}

LurNorm make_lur_norm(const SchemeConfig& s, int n, ToleranceConfig tol) {
  const double eta = s.eta.at(static_cast<std::size_t>(n - 1));
  return LurNorm(s.alpha(n), eta, eta, tol);
}

double lur_gauge(const LurNorm& ln, const Point& x) { return ln.value(x); }

CompositeNorm::CompositeNorm(SchemeConfig scheme, ToleranceConfig tol)
    : GaugeOracle(tol), scheme_(std::move(scheme)) {
  validate_scheme(scheme_);
  terms_.reserve(static_cast<std::size_t>(scheme_.levels));
  for (int n = 1; n <= scheme_.levels; ++n) terms_.push_back(make_lur_norm(scheme_, n, tol));
}

std::vector<double> CompositeNorm::term_values(const Point& x) const {
  require_same_dim(x.dim(), dim(), "composite gauge");
  std::vector<double> out;
  out.reserve(terms_.size() + 1);
  out.push_back(base_factor() * euclid_norm(x));
  for (const LurNorm& t : terms_) out.push_back(t.value(x));
  return out;
}

double CompositeNorm::value(const Point& x) const {
  const auto v = term_values(x);
  return *std::max_element(v.begin(), v.end());
}

Functional CompositeNorm::subgradient(const Point& x) const {
  const auto v = term_values(x);
  const auto k = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
  if (k == kBaseTerm) {
    const double nx = euclid_norm(x);
    if (nx == 0.0) return Functional(dim());
    return (base_factor() / nx) * as_functional(x);
  }
  return terms_[k - 1].subgradient(x);
}

double composite_gauge(const CompositeNorm& cn, const Point& x) { return cn.value(x); }

std::set<std::size_t> active_terms(const CompositeNorm& cn, const Point& x, double slack) {
  if (euclid_norm(x) == 0.0) throw InputError("active_terms: x must be nonzero");
  const auto v = cn.term_values(x);
  const double top = *std::max_element(v.begin(), v.end());
  std::set<std::size_t> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] >= top * (1.0 - slack)) out.insert(k);
  }
  return out;
}

CompositeCertificate certify_composite(const CompositeNorm& cn, const Point& x, Sampler& sampler,
                                       int random_dirs, int refine_steps) {
  const auto v = cn.term_values(x);
  CompositeCertificate cert;
  cert.primal = *std::max_element(v.begin(), v.end());
  cert.dual = v[CompositeNorm::kBaseTerm];
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] <= cert.dual) continue;
    const LurNorm& term = cn.terms()[k - 1];
    const auto c = certify_gauge_alpha(term.blueprint(), x, sampler, random_dirs, refine_steps);
    cert.dual = std::max(cert.dual, term.lower_from_alpha(c.dual, x));
  }
  cert.gap = cert.primal - cert.dual;
  return cert;
}

}  // namespace renorm
