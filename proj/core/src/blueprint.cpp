#include "renorm/blueprint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "renorm/errors.hpp"
#include "renorm/line_search.hpp"

namespace renorm {

namespace {

constexpr double kUnitTol = 1e-12;

double dot(const Point& a, const Point& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

void require_unit(double norm, const char* constraint) {
  if (std::abs(norm - 1.0) > kUnitTol) {
    throw ConstraintError(constraint, "Euclidean norm is " + format_double(norm) + ", expected 1");
  }
}

void require_pairing(double value, const char* constraint) {
  if (std::abs(value - 1.0) > kUnitTol) {
    throw ConstraintError(constraint, "pairing is " + format_double(value) + ", expected 1");
  }
}

}  // namespace

AlphaTuple make_alpha(Point v, Functional v_star, Point e, Functional e_star, Point h,
                      Functional h_star, double t, double rho) {
  const std::size_t d = e.dim();
  if (d == 0 || v.dim() != d || h.dim() != d || v_star.dim() != d || e_star.dim() != d ||
      h_star.dim() != d) {
    throw ConstraintError("dimension", "all vectors and functionals must share one dimension");
  }
  for (const auto* p : {&v, &e, &h}) require_finite(*p, "make_alpha");
  for (const auto* u : {&v_star, &e_star, &h_star}) require_finite(*u, "make_alpha");
  if (!std::isfinite(rho) || !(rho > 0.0 && rho < 0.25)) {
    throw ConstraintError("rho_range", "rho must lie in (0, 1/4)");
  }
  if (!std::isfinite(t) || !(t > 0.0 && t < rho / 16.0)) {
    throw ConstraintError("t_range", "t must lie in (0, rho/16)");
  }
  require_unit(euclid_norm(v), "unit_v");
  require_unit(euclid_norm(e), "unit_e");
  require_unit(euclid_norm(h), "unit_h");
  require_unit(euclid_norm(v_star), "unit_v_star");
  require_unit(euclid_norm(e_star), "unit_e_star");
  require_unit(euclid_norm(h_star), "unit_h_star");
  require_pairing(dual_eval(v_star, v), "pairing_v");
  require_pairing(dual_eval(e_star, e), "pairing_e");
  require_pairing(dual_eval(h_star, h), "pairing_h");
  const double eh = dual_eval(e_star, h);
  if (!(std::abs(eh) < rho / 800.0)) {
    throw ConstraintError("e_star_h", "|e*(h)| = " + format_double(std::abs(eh)) +
                                          " must be < rho/800 = " + format_double(rho / 800.0));
  }
  return AlphaTuple{std::move(v), std::move(e),      std::move(h),      std::move(v_star),
                    std::move(e_star), std::move(h_star), t, rho};
}

AlphaTuple fixture_a() {
  constexpr std::size_t d = 8;
  constexpr double rho = 0.2;
  return make_alpha(Point::unit(d, 2), Functional::unit(d, 2), Point::unit(d, 0),
                    Functional::unit(d, 0), Point::unit(d, 1), Functional::unit(d, 1), rho / 32.0,
                    rho);
}

DerivedPoints derive_points(const AlphaTuple& a) {
  const double rho = a.rho;
  DerivedPoints p;
  p.x_plus = (1.0 - rho / 2.0) * a.e + a.t * a.h;
  p.x_minus = (1.0 - rho / 2.0) * a.e - a.t * a.h;
  p.y_plus = p.x_plus + (rho / 4.0) * a.v;
  p.y_minus = p.x_minus - (rho / 4.0) * a.v;

  const double cap = 1.0 - rho / 8.0;
  if (!(euclid_norm(p.y_plus) < cap) || !(euclid_norm(p.y_minus) < cap)) {
    throw ConstraintError("y_norm", "|y+-| must be < 1 - rho/8");
  }
  const double pp = dot(p.y_plus, p.y_plus);
  const double mm = dot(p.y_minus, p.y_minus);
  const double pm = dot(p.y_plus, p.y_minus);
  if (!(pp * mm - pm * pm > 1e-12 * pp * mm)) {
    throw ConstraintError("y_independent", "y+ and y- must be linearly independent");
  }
  return p;
}

double gauge_C(const AlphaTuple& a, const Point& x) {
  require_same_dim(x.dim(), a.dim(), "gauge_C");
  return std::max(euclid_norm(x), std::abs(dual_eval(a.e_star, x)) / (1.0 - a.rho));
}

namespace {

// |u - s e*| = hypot(u(e) - s, |u_perp|) for Euclidean-unit e*.
struct SplitAlongE {
  double along;
  double perp;
};

SplitAlongE split_along_e(const AlphaTuple& a, const Functional& u) {
  double along = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) along += u[i] * a.e_star[i];
  Functional r = u - along * a.e_star;
  return {along, euclid_norm(r)};
}

}  // namespace

double support_C(const AlphaTuple& a, const Functional& u, double tol) {
  require_same_dim(u.dim(), a.dim(), "support_C");
  const double nu = euclid_norm(u);
  if (nu == 0.0) return 0.0;
  const auto [along, perp] = split_along_e(a, u);
  const double w = 1.0 - a.rho;
  auto f = [&](double s) { return std::hypot(along - s, perp) + w * std::abs(s); };
  const double bound = nu / w;
  auto r = golden_section_minimize(f, -bound, bound, tol * nu);
  return std::min(r.value, nu);
}

double support_half_cap(const AlphaTuple& a, const Functional& u, double tol) {
  require_same_dim(u.dim(), a.dim(), "support_half_cap");
  const double nu = euclid_norm(u);
  if (nu == 0.0) return 0.0;
  const auto [along, perp] = split_along_e(a, u);
  const double w = 1.0 - a.rho;
  auto f = [&](double s) { return std::hypot(along - s, perp) + w * s; };
  auto r = golden_section_minimize(f, 0.0, nu / w, tol * nu);
  return std::min(r.value, nu);
}

BlueprintGauge::BlueprintGauge(AlphaTuple alpha, ToleranceConfig tol, bool unmodified_shortcut)
    : GaugeOracle(tol), alpha_(std::move(alpha)), points_(derive_points(alpha_)),
      shortcut_(unmodified_shortcut) {
  const Point& yp = points_.y_plus;
  const Point& ym = points_.y_minus;
  yp1_ = euclid_norm(yp);
  q1_ = (1.0 / yp1_) * yp;
  Point w = ym - dot(q1_, ym) * q1_;
  w -= dot(q1_, w) * q1_;
  ym2_ = euclid_norm(w);
  q2_ = (1.0 / ym2_) * w;
  ym1_ = dot(q1_, ym);
  e_yp_ = dual_eval(alpha_.e_star, yp);
  e_ym_ = dual_eval(alpha_.e_star, ym);
}

BlueprintGauge::Evaluation BlueprintGauge::evaluate(const Point& x) const {
  require_same_dim(x.dim(), dim(), "gauge_alpha");
  require_finite(x, "gauge_alpha");
  Evaluation out;
  const double nx = euclid_norm(x);
  if (nx == 0.0) return out;

  const double w = 1.0 - alpha_.rho;
  const double ex = dual_eval(alpha_.e_star, x);
  const double gc = std::max(nx, std::abs(ex) / w);
  if (shortcut_ && std::abs(ex) <= w * nx) {
    out.value = nx;
    return out;
  }

  // Coordinates of x in the orthonormal frame {q1, q2, q3}, q3 along the
  // component of x orthogonal to span{y+, y-}.
  double x1 = dot(q1_, x);
  double x2 = dot(q2_, x);
  Point r = x - x1 * q1_ - x2 * q2_;
  const double c1 = dot(q1_, r);
  const double c2 = dot(q2_, r);
  r -= c1 * q1_ + c2 * q2_;
  x1 += c1;
  x2 += c2;
  const double x3 = euclid_norm(r);
  const double x3sq = x3 * x3;

  int evals = 0;
  auto objective = [&](double s1, double s2) {
    ++evals;
    const double r1 = x1 - s1 * yp1_ - s2 * ym1_;
    const double r2 = x2 - s2 * ym2_;
    const double euclid = std::sqrt(r1 * r1 + r2 * r2 + x3sq);
    const double slab = std::abs(ex - s1 * e_yp_ - s2 * e_ym_) / w;
    return std::max(euclid, slab) + std::abs(s1) + std::abs(s2);
  };

  const double tol = tolerance().line_search_tol * gc;
  auto inner = [&](double s1) {
    const double room = std::max(0.0, gc - std::abs(s1));
    return golden_section_minimize([&](double s2) { return objective(s1, s2); }, -room, room,
                                   tol);
  };
  auto outer = golden_section_minimize([&](double s1) { return inner(s1).value; }, -gc, gc, tol);
  auto best_inner = inner(outer.argmin);

  out.value = gc;
  if (best_inner.value < out.value) {
    out.value = best_inner.value;
    out.s_plus = outer.argmin;
    out.s_minus = best_inner.argmin;
  }
  out.evals = evals;
  return out;
}

Functional BlueprintGauge::subgradient(const Point& x) const {
  require_same_dim(x.dim(), dim(), "gauge_alpha subgradient");
  const double nx = euclid_norm(x);
  if (nx == 0.0) return Functional(dim());
  const double w = 1.0 - alpha_.rho;
  const double ex = dual_eval(alpha_.e_star, x);
  if (std::abs(ex) <= w * nx) return (1.0 / nx) * as_functional(x);

  const Evaluation ev = evaluate(x);
  const Point p = x - ev.s_plus * points_.y_plus - ev.s_minus * points_.y_minus;
  const double np = euclid_norm(p);
  if (np <= 1e-9 * nx) return GaugeOracle::subgradient(x);
  const double ep = dual_eval(alpha_.e_star, p);
  if (np >= std::abs(ep) / w) return (1.0 / np) * as_functional(p);
  return (ep > 0.0 ? 1.0 / w : -1.0 / w) * alpha_.e_star;
}

double BlueprintGauge::support(const Functional& u) const {
  require_same_dim(u.dim(), dim(), "support of B_alpha");
  const double sc = support_C(alpha_, u, tolerance().line_search_tol);
  return std::max({sc, std::abs(dual_eval(u, points_.y_plus)),
                   std::abs(dual_eval(u, points_.y_minus))});
}

double gauge_alpha(const AlphaTuple& a, const Point& x, const ToleranceConfig& tol) {
  return BlueprintGauge(a, tol).value(x);
}

double gauge_alpha_lower(const BlueprintGauge& g, const Point& x,
                         std::span<const Functional> net) {
  if (net.empty()) throw InputError("gauge_alpha_lower: empty net");
  double best = 0.0;
  for (const Functional& u : net) {
    const double h = g.support(u);
    if (!(h > 0.0)) throw InputError("gauge_alpha_lower: functional with zero support");
    best = std::max(best, dual_eval(u, x) / h);
  }
  return best;
}

double gauge_alpha_lower(const AlphaTuple& a, const Point& x, std::span<const Functional> net) {
  return gauge_alpha_lower(BlueprintGauge(a), x, net);
}

GaugeCertificate certify_gauge_alpha(const BlueprintGauge& g, const Point& x, Sampler& sampler,
                                     int random_dirs, int refine_steps) {
  GaugeCertificate cert;
  cert.primal = g.value(x);
  const double nx = euclid_norm(x);
  if (nx == 0.0) {
    cert.witness = g.alpha().e_star;
    return cert;
  }
  const AlphaTuple& a = g.alpha();
  const HyperplanePair hp = hyperplanes(a);

  auto ratio = [&](const Functional& u) {
    const double h = g.support(u);
    return h > 0.0 ? dual_eval(u, x) / h : 0.0;
  };
  auto consider = [&](const Functional& u) {
    const double r = ratio(u);
    if (r > cert.dual || cert.witness.dim() == 0) {
      cert.dual = std::max(r, 0.0);
      cert.witness = u;
    }
  };

  for (const Functional& u : {a.e_star, -a.e_star, a.v_star, -a.v_star, a.h_star, -a.h_star,
                              hp.phi_plus, hp.phi_minus}) {
    consider(u);
  }
  consider((1.0 / nx) * as_functional(x));
  consider(g.subgradient(x));

  // At a kink of gauge_C the dual optimum is a blend of the two gradients.
  const BlueprintGauge::Evaluation ev = g.evaluate(x);
  const Point p = x - ev.s_plus * g.points().y_plus - ev.s_minus * g.points().y_minus;
  const double np = euclid_norm(p);
  if (np > 1e-12 * nx) {
    const double ep = dual_eval(a.e_star, p);
    const Functional round = (1.0 / np) * as_functional(p);
    const Functional cap = (ep >= 0.0 ? 1.0 : -1.0) / (1.0 - a.rho) * a.e_star;
    auto blend = [&](double mu) { return mu * round + (1.0 - mu) * cap; };
    const LineSearchResult best = golden_section_minimize(
        [&](double mu) { return -ratio(blend(mu)); }, 0.0, 1.0, 1e-9);
    consider(blend(best.argmin));
    consider(cap);
  }
  for (int i = 0; i < random_dirs; ++i) consider(as_functional(sampler.unit_sphere(g.dim())));

  double radius = 0.05;
  for (int i = 0; i < refine_steps; ++i) {
    Functional cand = cert.witness + radius * as_functional(sampler.unit_sphere(g.dim()));
    const double r = ratio(cand);
    if (r > cert.dual) {
      cert.dual = r;
      cert.witness = cand;
    } else {
      radius *= 0.85;
    }
  }
  cert.gap = cert.primal - cert.dual;
  return cert;
}

HyperplanePair hyperplanes(const AlphaTuple& a) {
  HyperplanePair hp;
  hp.lambda = 1.0 - a.rho / 100.0;
  const double tilt = 1.0 - hp.lambda;
  const double vw = 4.0 * a.t / a.rho;
  hp.phi_plus = hp.lambda * a.e_star + tilt * (a.h_star - vw * a.v_star);
  hp.phi_minus = hp.lambda * a.e_star + tilt * (vw * a.v_star - a.h_star);
  const double bound = 1.0 + a.t / 25.0;
  if (euclid_norm(hp.phi_plus) > bound || euclid_norm(hp.phi_minus) > bound) {
    throw ConstraintError("phi_norm", "dual norm of phi+- exceeds 1 + t/25");
  }
  return hp;
}

double LemmaResiduals::min() const { return *std::min_element(values.begin(), values.end()); }

LemmaResiduals lemma_residuals(const AlphaTuple& a, const Point& k, const std::optional<Point>& z) {
  require_same_dim(k.dim(), a.dim(), "lemma_residuals k");
  require_finite(k, "lemma_residuals k");
  if (euclid_norm(k) > 1.0 + kUnitTol) throw InputError("lemma_residuals: |k| must be <= 1");
  if (z) {
    require_same_dim(z->dim(), a.dim(), "lemma_residuals z");
    require_finite(*z, "lemma_residuals z");
    if (euclid_norm(*z) > 1.0 + kUnitTol) throw InputError("lemma_residuals: |z| must be <= 1");
    if (dual_eval(a.e_star, *z) > 1.0 - a.rho + kUnitTol) {
      throw InputError("lemma_residuals: e*(z) must be <= 1 - rho");
    }
  }

  const DerivedPoints p = derive_points(a);
  const HyperplanePair hp = hyperplanes(a);
  const double rho = a.rho;
  const Point qv = (rho / 4.0) * a.v;
  const Point k_minus = k - qv;
  const Point k_plus = k + qv;
  const double base = a.t * rho / 25.0;
  const double vk = dual_eval(a.v_star, k) / rho;

  auto spill = [&](const Point& w) {
    return std::abs(dual_eval(a.e_star, w)) + std::abs(dual_eval(a.h_star, w));
  };
  const double cap_rhs = rho / 8.0 - std::abs(dual_eval(a.e_star, k));
  auto cap_lhs = [&](const Functional& phi, const Point& x) {
    if (z) return dual_eval(phi, x + k - *z);
    return dual_eval(phi, x + k) - support_half_cap(a, phi);
  };

  LemmaResiduals r;
  r.values[0] = dual_eval(hp.phi_plus, p.x_plus + k - p.y_plus) -
                (base * (1.0 / 16.0 - vk) - spill(k_minus));
  r.values[1] = dual_eval(hp.phi_plus, p.x_plus + k - p.y_minus) -
                (base * (1.0 / 16.0 - vk) - spill(k_plus));
  r.values[2] = cap_lhs(hp.phi_plus, p.x_plus) - cap_rhs;
  r.values[3] = dual_eval(hp.phi_minus, p.x_minus + k - p.y_minus) -
                (base * (1.0 / 16.0 + vk) - spill(k_plus));
  r.values[4] = dual_eval(hp.phi_minus, p.x_minus + k - p.y_plus) -
                (base * (1.0 / 16.0 + vk) - spill(k_minus));
  r.values[5] = cap_lhs(hp.phi_minus, p.x_minus) - cap_rhs;
  return r;
}

}  // namespace renorm
