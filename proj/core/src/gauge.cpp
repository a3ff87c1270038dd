#include "renorm/gauge.hpp"

#include <cmath>
#include <limits>

#include "renorm/errors.hpp"

namespace renorm {

GaugeOracle::GaugeOracle(ToleranceConfig tol) : tol_(tol) { tol_.validate(); }

Functional GaugeOracle::subgradient(const Point& x) const {
  const double scale = std::max(euclid_norm(x), 1e-300);
  const double h = std::cbrt(std::numeric_limits<double>::epsilon()) * scale;
  Functional g(x.dim());
  Point p = x;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    const double xi = x[i];
    p[i] = xi + h;
    const double fp = value(p);
    p[i] = xi - h;
    const double fm = value(p);
    p[i] = xi;
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

EuclideanGauge::EuclideanGauge(std::size_t dim, ToleranceConfig tol)
    : GaugeOracle(tol), dim_(dim) {}

double EuclideanGauge::value(const Point& x) const {
  require_same_dim(x.dim(), dim_, "euclid gauge");
  return euclid_norm(x);
}

Functional EuclideanGauge::subgradient(const Point& x) const {
  double n = value(x);
  if (n == 0.0) return Functional(dim_);
  return (1.0 / n) * as_functional(x);
}

double q_functional(const GaugeOracle& g, const Point& x, const Point& y) {
  require_finite(x, "q_functional");
  require_finite(y, "q_functional");
  const double gx = g.value(x);
  const double gy = g.value(y);
  const double gs = g.value(x + y);
  return 2.0 * gx * gx + 2.0 * gy * gy - gs * gs;
}

double strict_convexity_probe(const GaugeOracle& g, const Point& x, const Point& y) {
  const double gx = g.value(x);
  const double gy = g.value(y);
  if (gx == 0.0 || gy == 0.0) throw InputError("strict_convexity_probe: zero vector");
  Point mid = (0.5 / gx) * x + (0.5 / gy) * y;
  return 1.0 - g.value(mid);
}

}  // namespace renorm
