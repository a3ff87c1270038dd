#pragma once

#include <algorithm>
#include <cmath>

namespace renorm {

struct LineSearchResult {
  double argmin = 0.0;
  double value = 0.0;
  /// Certified lower bound on the minimum over the search interval (convex f only).
  double lower_bound = 0.0;
  int evals = 0;
};

namespace detail {
inline constexpr double kInvPhi = 0.61803398874989484820;

// Lower bound of a convex function on [a, b] from samples a < c < d < b:
// outside a chord the graph lies above the chord's extension.
inline double convex_lower_bound(double a, double fa, double c, double fc, double d, double fd,
                                 double b, double fb) {
  auto line = [](double x0, double f0, double x1, double f1, double x) {
    if (x1 == x0) return std::min(f0, f1);
    return f0 + (f1 - f0) / (x1 - x0) * (x - x0);
  };
  double lb_left = std::min(fc, line(c, fc, d, fd, a));
  double lb_right = std::min(fd, line(c, fc, d, fd, b));

  // On [c, d] the graph lies above both outer chords.
  auto outer = [&](double x) { return std::max(line(a, fa, c, fc, x), line(d, fd, b, fb, x)); };
  double lb_mid = std::min(outer(c), outer(d));
  double s1 = (c - a) != 0.0 ? (fc - fa) / (c - a) : 0.0;
  double s2 = (b - d) != 0.0 ? (fb - fd) / (b - d) : 0.0;
  if (s1 != s2) {
    double x = (fd - s2 * d - fc + s1 * c) / (s1 - s2);
    if (x > c && x < d) lb_mid = std::min(lb_mid, outer(x));
  }
  return std::min({lb_left, lb_mid, lb_right});
}
}  // namespace detail

/// Golden-section search for a unimodal f on [lo, hi], stopping once the
/// bracket is narrower than `tol`. Returns the best interior sample.
template <class F>
LineSearchResult golden_section_minimize(F&& f, double lo, double hi, double tol,
                                         int max_iter = 400) {
  LineSearchResult r;
  if (!(hi > lo)) {
    r.argmin = lo;
    r.value = r.lower_bound = f(lo);
    r.evals = 1;
    return r;
  }
  double a = lo, b = hi;
  double c = b - detail::kInvPhi * (b - a);
  double d = a + detail::kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  r.evals = 2;
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - detail::kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + detail::kInvPhi * (b - a);
      fd = f(d);
    }
    ++r.evals;
  }
  if (fc <= fd) {
    r.argmin = c;
    r.value = fc;
  } else {
    r.argmin = d;
    r.value = fd;
  }
  r.lower_bound = r.value;
  return r;
}

/// Golden-section search for a convex f that also samples the interval
/// endpoints and returns a lower bound certified by convexity. The endpoints
/// are candidates too, so minima on the boundary are returned exactly.
template <class F>
LineSearchResult certified_golden_section(F&& f, double lo, double hi, double tol,
                                          int max_iter = 400) {
  LineSearchResult r;
  double flo = f(lo);
  double fhi = f(hi);
  if (!(hi > lo)) {
    r.argmin = lo;
    r.value = r.lower_bound = flo;
    r.evals = 2;
    return r;
  }
  double a = lo, b = hi, fa = flo, fb = fhi;
  double c = b - detail::kInvPhi * (b - a);
  double d = a + detail::kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  r.evals = 4;
  for (int it = 0; it < max_iter && (b - a) > tol; ++it) {
    if (fc <= fd) {
      b = d;
      fb = fd;
      d = c;
      fd = fc;
      c = b - detail::kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      fa = fc;
      c = d;
      fc = fd;
      d = a + detail::kInvPhi * (b - a);
      fd = f(d);
    }
    ++r.evals;
  }
  r.argmin = c;
  r.value = fc;
  if (fd < r.value) {
    r.argmin = d;
    r.value = fd;
  }
  if (flo <= r.value) {
    r.argmin = lo;
    r.value = flo;
  }
  if (fhi < r.value) {
    r.argmin = hi;
    r.value = fhi;
  }
  r.lower_bound = std::min(r.value, detail::convex_lower_bound(a, fa, c, fc, d, fd, b, fb));
  return r;
}

}  // namespace renorm
