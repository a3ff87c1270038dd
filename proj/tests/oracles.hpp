#pragma once

// Brute-force reference implementations used to cross-check the library.
// Deliberately naive: closed forms written out per coordinate, grids and
// zooming searches instead of the library's line searches.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

inline double norm2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

// Minimizes a convex function of one variable on [lo, hi] by grid + zoom.
// For convex f the minimizer stays within one cell of the best grid point.
inline double min1d(const std::function<double(double)>& f, double lo, double hi,
                    int grid = 40, int rounds = 20) {
  const double lo0 = lo, hi0 = hi;
  double best = std::numeric_limits<double>::infinity();
  double arg = lo;
  for (int r = 0; r < rounds; ++r) {
    const double step = (hi - lo) / grid;
    for (int i = 0; i <= grid; ++i) {
      const double s = lo + i * step;
      const double v = f(s);
      if (v < best) best = v, arg = s;
    }
    lo = std::max(lo0, arg - 2 * step);
    hi = std::min(hi0, arg + 2 * step);
  }
  return best;
}

// Two variables: the partial minimum over s2 is convex in s1, so nest.
inline double min2d(const std::function<double(double, double)>& f, double lo1, double hi1,
                    double lo2, double hi2) {
  return min1d([&](double s1) { return min1d([&](double s2) { return f(s1, s2); }, lo2, hi2); },
               lo1, hi1);
}

// Fixture tuple in coordinates: e* = u1, h = u2, v = u3 (0-based 0, 1, 2).
struct Fixture {
  double rho = 0.2;
  double t = 0.2 / 32;
  std::size_t d = 8;

  std::vector<double> x_plus() const {
    std::vector<double> x(d, 0.0);
    x[0] = 1 - rho / 2;
    x[1] = t;
    return x;
  }
  std::vector<double> x_minus() const {
    auto x = x_plus();
    x[1] = -t;
    return x;
  }
  std::vector<double> y_plus() const {
    auto y = x_plus();
    y[2] = rho / 4;
    return y;
  }
  std::vector<double> y_minus() const {
    auto y = x_minus();
    y[2] = -rho / 4;
    return y;
  }

  double gauge_c(const std::vector<double>& x) const {
    return std::max(norm2(x), std::abs(x[0]) / (1 - rho));
  }

  double gauge_alpha(const std::vector<double>& x) const {
    const auto yp = y_plus(), ym = y_minus();
    const double r = gauge_c(x);
    auto f = [&](double s1, double s2) {
      std::vector<double> z(x);
      for (std::size_t i = 0; i < d; ++i) z[i] -= s1 * yp[i] + s2 * ym[i];
      return gauge_c(z) + std::abs(s1) + std::abs(s2);
    };
    return min2d(f, -r, r, -r, r);
  }

  // sup over C of u: min_s |u - s e*| + (1 - rho)|s|.
  double support_c(const std::vector<double>& u) const {
    const double r = norm2(u) / (1 - rho);
    return min1d(
        [&](double s) {
          auto w = u;
          w[0] -= s;
          return norm2(w) + (1 - rho) * std::abs(s);
        },
        -r, r);
  }
};

}  // namespace oracle
