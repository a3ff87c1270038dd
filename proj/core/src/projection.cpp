#include "renorm/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "renorm/errors.hpp"
#include "renorm/line_search.hpp"
#include "renorm/sampling.hpp"

namespace renorm {

namespace {

// Euclidean projection onto the probability simplex (sort-and-threshold).
std::vector<double> project_to_simplex(std::vector<double> w) {
  std::vector<double> s = w;
  std::sort(s.begin(), s.end(), std::greater<>());
  double cum = 0.0, theta = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    cum += s[k];
    const double cand = (cum - 1.0) / static_cast<double>(k + 1);
    if (s[k] - cand > 0.0) theta = cand;
  }
  for (double& x : w) x = std::max(0.0, x - theta);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  return w;
}

ProjectionResult project_segment(const GaugeOracle& g, const Segment& seg, const Point& x,
                                 const ToleranceConfig& tol) {
  const Point dir = seg.b - seg.a;
  auto f = [&](double s) { return g.value(x - seg.a - s * dir); };
  const auto r = certified_golden_section(f, 0.0, 1.0, tol.line_search_tol);
  ProjectionResult out;
  out.parameter = {r.argmin};
  out.point = seg.a + r.argmin * dir;
  out.distance = r.value;
  out.gap = std::max(0.0, r.value - r.lower_bound) + tol.gauge_rel_tol * r.value;
  out.evals = r.evals;
  return out;
}

class PolytopeProblem {
 public:
  PolytopeProblem(const GaugeOracle& g, const std::vector<Point>& vs, const Point& x)
      : g_(g), vs_(vs), x_(x) {}

  Point residual(const std::vector<double>& w) const {
    Point r = x_;
    for (std::size_t k = 0; k < vs_.size(); ++k) {
      if (w[k] != 0.0) r -= w[k] * vs_[k];
    }
    return r;
  }

  double value(const std::vector<double>& w) {
    ++evals;
    return g_.value(residual(w));
  }

  // Subgradient in weight space: d/dw_k g(x - sum w p) = -u(p_k).
  std::vector<double> subgradient(const std::vector<double>& w) {
    ++evals;
    const Functional u = g_.subgradient(residual(w));
    std::vector<double> gw(vs_.size());
    for (std::size_t k = 0; k < vs_.size(); ++k) gw[k] = -dual_eval(u, vs_[k]);
    return gw;
  }

  // Frank-Wolfe bound: f* >= f(w) + min_k G_k - <G, w>.
  static double fw_bound(double f, const std::vector<double>& gw, const std::vector<double>& w) {
    double gdotw = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) gdotw += gw[k] * w[k];
    return f + *std::min_element(gw.begin(), gw.end()) - gdotw;
  }

  int evals = 0;

 private:
  const GaugeOracle& g_;
  const std::vector<Point>& vs_;
  const Point& x_;
};

ProjectionResult project_polytope(const GaugeOracle& g, const Polytope& poly, const Point& x,
                                  const ToleranceConfig& tol, const PolytopeSolverOptions& opts) {
  const auto& vs = poly.vertices;
  const std::size_t m = vs.size();
  PolytopeProblem prob(g, vs, x);

  std::vector<double> best_w(m, 0.0);
  double best_f = std::numeric_limits<double>::infinity();
  double lower = -std::numeric_limits<double>::infinity();

  auto record = [&](const std::vector<double>& w, double f) {
    if (f < best_f) {
      best_f = f;
      best_w = w;
    }
  };

  // Vertices are candidates in their own right.
  std::size_t best_vertex = 0;
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<double> w(m, 0.0);
    w[k] = 1.0;
    const double f = prob.value(w);
    if (f < best_f) best_vertex = k;
    record(w, f);
  }
  if (m == 1) {
    const auto gw = prob.subgradient(best_w);
    lower = PolytopeProblem::fw_bound(best_f, gw, best_w);
  }

  Sampler sampler(opts.seed);
  for (int restart = 0; m > 1 && restart < opts.restarts; ++restart) {
    std::vector<double> w(m, 0.0);
    if (restart == 0) {
      std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(m));
    } else if (restart == 1) {
      w[best_vertex] = 1.0;
    } else {
      double total = 0.0;
      for (double& wi : w) total += (wi = -std::log(sampler.uniform()));
      for (double& wi : w) wi /= total;
    }
    double f = prob.value(w);
    record(w, f);
    const double level_gap0 = 0.05 * std::max(f, 1e-12);
    for (int it = 0; it < opts.iterations_per_restart; ++it) {
      const auto gw = prob.subgradient(w);
      lower = std::max(lower, PolytopeProblem::fw_bound(f, gw, w));
      const double mean = std::accumulate(gw.begin(), gw.end(), 0.0) / static_cast<double>(m);
      double norm2 = 0.0;
      for (double gk : gw) norm2 += (gk - mean) * (gk - mean);
      if (norm2 < 1e-300) break;
      const double level_gap = level_gap0 / (1.0 + it);
      const double step = (f - best_f + level_gap) / norm2;
      std::vector<double> next(m);
      for (std::size_t k = 0; k < m; ++k) next[k] = w[k] - step * (gw[k] - mean);
      w = project_to_simplex(std::move(next));
      f = prob.value(w);
      record(w, f);
    }
  }

  // Pairwise exchanges: move mass between two vertices along a 1-D convex slice.
  bool still_improving = false;
  for (int round = 0; m > 1 && round < opts.polish_rounds; ++round) {
    const double start = best_f;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const double lo = -best_w[j];
        const double hi = best_w[i];
        if (!(hi > lo)) continue;
        const std::vector<double> base = best_w;
        auto slice = [&](double theta) {
          std::vector<double> w = base;
          w[i] -= theta;
          w[j] += theta;
          w[i] = std::max(w[i], 0.0);
          w[j] = std::max(w[j], 0.0);
          return prob.value(w);
        };
        const auto r = golden_section_minimize(slice, lo, hi, tol.line_search_tol);
        if (r.value < best_f) {
          std::vector<double> w = base;
          w[i] = std::max(w[i] - r.argmin, 0.0);
          w[j] = std::max(w[j] + r.argmin, 0.0);
          record(w, r.value);
        }
      }
    }
    const double gain = start - best_f;
    still_improving = gain > tol.cert_gap_tol * std::max(1.0, best_f);
    if (gain <= tol.line_search_tol * std::max(1.0, best_f)) break;
  }
  if (m > 1) {
    const auto gw = prob.subgradient(best_w);
    lower = std::max(lower, PolytopeProblem::fw_bound(best_f, gw, best_w));
  }
  if (still_improving) {
    throw NumericalError("nearest_point: polytope solver still improving at end of budget",
                         best_w, best_f);
  }

  ProjectionResult out;
  out.parameter = best_w;
  out.point = x - prob.residual(best_w);
  out.distance = best_f;
  out.gap = std::max(0.0, best_f - lower) + tol.gauge_rel_tol * best_f;
  out.evals = prob.evals;
  return out;
}

}  // namespace

ProjectionResult nearest_point(const GaugeOracle& g, const CompactConvexSet& K, const Point& x,
                               const ToleranceConfig& tol, const PolytopeSolverOptions& opts) {
  tol.validate();
  require_same_dim(x.dim(), K.dim(), "nearest_point");
  require_same_dim(x.dim(), g.dim(), "nearest_point gauge");
  require_finite(x, "nearest_point");
  if (K.is_segment()) return project_segment(g, K.as_segment(), x, tol);
  return project_polytope(g, K.as_polytope(), x, tol, opts);
}

bool ModulusReport::all_pass() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
}

ModulusReport modulus_scan(const GaugeOracle& g, const CompactConvexSet& K,
                           std::span<const WitnessPair> pairs, double bound,
                           const ToleranceConfig& tol) {
  ModulusReport rep;
  for (const WitnessPair& p : pairs) {
    const auto ra = nearest_point(g, K, p.first, tol);
    const auto rb = nearest_point(g, K, p.second, tol);
    ModulusRow row;
    row.n = p.n;
    row.delta = p.delta;
    row.bound = bound;
    row.in_sep = g.value(p.first - p.second);
    row.out_sep = g.value(ra.point - rb.point);
    row.pass = row.out_sep >= bound - tol.cert_gap_tol && row.in_sep <= p.delta + tol.cert_gap_tol;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace renorm
