#include "renorm/theorem.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <thread>

#include "renorm/errors.hpp"
#include "renorm/sampling.hpp"

namespace renorm {

namespace {

double point_segment_distance(const Point& p, const Segment& s) {
  const Point d = s.b - s.a;
  const double dd = dual_eval(as_functional(d), d);
  double t = dual_eval(as_functional(d), p - s.a) / dd;
  t = std::clamp(t, 0.0, 1.0);
  return euclid_norm(p - s.a - t * d);
}

HypothesisCheck at_most(std::string name, std::string formula, double measured, double bound,
                        double slack) {
  return {std::move(name), std::move(formula), measured, bound, measured <= bound + slack};
}

HypothesisCheck strictly_below(std::string name, std::string formula, double measured,
                               double bound) {
  return {std::move(name), std::move(formula), measured, bound, measured < bound};
}

// Lower bound for g(x) when g is one of the library's norms; g(x) otherwise.
double certified_lower(const GaugeOracle& g, const Point& x, Sampler& sampler) {
  if (const auto* cn = dynamic_cast<const CompositeNorm*>(&g)) {
    return certify_composite(*cn, x, sampler).dual;
  }
  if (const auto* ln = dynamic_cast<const LurNorm*>(&g)) {
    return ln->lower_from_alpha(certify_gauge_alpha(ln->blueprint(), x, sampler).dual, x);
  }
  if (const auto* bg = dynamic_cast<const BlueprintGauge*>(&g)) {
    return certify_gauge_alpha(*bg, x, sampler).dual;
  }
  return g.value(x);
}

}  // namespace

bool Theorem22Report::hypotheses_pass() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const auto& h) { return h.pass; });
}

std::vector<std::string> Theorem22Report::failed() const {
  std::vector<std::string> out;
  for (const auto& h : hypotheses) {
    if (!h.pass) out.push_back(h.name);
  }
  return out;
}

Theorem22Report theorem22_check(const AlphaTuple& a, const GaugeOracle& g,
                                const CompactConvexSet& K, double eta,
                                const Theorem22Options& opts) {
  const ToleranceConfig& tol = opts.tol;
  tol.validate();
  require_same_dim(g.dim(), a.dim(), "theorem22_check gauge");
  require_same_dim(K.dim(), a.dim(), "theorem22_check set");

  const double rho = a.rho;
  const double t = a.t;
  const double small = t * rho / 12800.0;
  const DerivedPoints P = derive_points(a);
  const BlueprintGauge blueprint(a, tol);
  const double rel = tol.gauge_rel_tol;
  Sampler sampler(opts.seed);

  Theorem22Report rep;
  auto& H = rep.hypotheses;
  H.push_back({"eta_positive", "eta > 0", eta, 0.0, eta > 0.0});
  H.push_back(strictly_below("eta_bound", "eta < t*rho/12800", eta, small));

  std::vector<Point> probes = {P.x_plus, P.x_minus, P.y_plus, P.y_minus, a.e, a.h, a.v};
  for (int i = 0; i < opts.sandwich_samples; ++i) probes.push_back(sampler.unit_sphere(a.dim()));
  double min_lower = std::numeric_limits<double>::infinity();
  double max_upper = 0.0;
  for (const Point& x : probes) {
    const double gx = g.value(x);
    min_lower = std::min(min_lower, gx / blueprint.value(x));
    max_upper = std::max(max_upper, gx / euclid_norm(x));
  }
  H.push_back({"sandwich_lower", "min g(x)/|x|_alpha >= 1 (sampled)", min_lower, 1.0,
               min_lower >= 1.0 - rel});
  const double upper = 1.0 / ((1.0 - rho) * (1.0 - rho));
  H.push_back(at_most("sandwich_upper", "max g(x)/|x| <= (1-rho)^-2 (sampled)", max_upper, upper,
                      rel * upper));
  H.push_back(at_most("y_plus_bound", "g(y+) <= 1 + eta", g.value(P.y_plus), 1.0 + eta, rel));
  H.push_back(at_most("y_minus_bound", "g(y-) <= 1 + eta", g.value(P.y_minus), 1.0 + eta, rel));

  Point v_k = a.v;
  double containment = 0.0;
  if (K.is_segment()) {
    const Segment& s = K.as_segment();
    Point d = s.b - s.a;
    d *= 1.0 / euclid_norm(d);
    if (dual_eval(a.v_star, d) < 0.0) d = -d;
    v_k = d;
    containment = std::max(point_segment_distance((rho / 4.0) * v_k, s),
                           point_segment_distance((-rho / 4.0) * v_k, s));
  } else {
    const EuclideanGauge euclid(a.dim(), tol);
    for (double sign : {1.0, -1.0}) {
      const auto r = nearest_point(euclid, K, (sign * rho / 4.0) * v_k, tol);
      containment = std::max(containment, r.distance);
    }
  }
  H.push_back(at_most("segment_containment", "dist([-(rho/4)v_K, (rho/4)v_K], K) = 0",
                      containment, 0.0, tol.cert_gap_tol));
  H.push_back(strictly_below("v_approximation", "(rho/4) g(v - v_K) < eta",
                             (rho / 4.0) * g.value(a.v - v_k), eta));

  double k_norm = 0.0;
  for (const Point& p : K.vertices()) k_norm = std::max(k_norm, g.value(p));
  H.push_back(at_most("K_in_unit_ball", "max_K g(k) <= 1", k_norm, 1.0, rel));
  H.push_back(strictly_below("sup_K_e_star", "sup_K |e*(k)| < t*rho/12800", K.max_abs(a.e_star),
                             small));
  H.push_back(strictly_below("sup_K_h_star", "sup_K |h*(k)| < t*rho/12800", K.max_abs(a.h_star),
                             small));

  double min_deficit = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 8; ++i) {
    const Point x = sampler.unit_sphere(a.dim());
    const Point y = sampler.unit_sphere(a.dim());
    min_deficit = std::min(min_deficit, strict_convexity_probe(g, x, y));
  }
  H.push_back({"strict_convexity_sampled", "min midpoint deficit >= 0 (sampled)", min_deficit,
               0.0, min_deficit >= -tol.cert_gap_tol});

  if (!rep.hypotheses_pass()) return rep;

  SeparationConclusion c;
  const auto rp = nearest_point(g, K, P.x_plus, tol);
  const auto rm = nearest_point(g, K, P.x_minus, tol);
  c.r_plus = rp.point;
  c.r_minus = rm.point;
  c.gap_plus = rp.gap;
  c.gap_minus = rm.gap;
  c.v_star_r_plus = dual_eval(a.v_star, rp.point);
  c.v_star_r_minus = dual_eval(a.v_star, rm.point);
  const Point in_vec = P.x_plus - P.x_minus;
  const Point out_vec = rp.point - rm.point;
  c.in_sep = g.value(in_vec);
  c.out_sep = g.value(out_vec);
  c.delta = separation_delta(rho, t);
  c.bound = rho / 16.0;
  c.swing_bound = rho / 32.0;
  c.in_sep_cert_gap = std::max(0.0, c.in_sep - certified_lower(g, in_vec, sampler));
  c.out_sep_cert_gap = std::max(0.0, c.out_sep - certified_lower(g, out_vec, sampler));
  const double slack = tol.cert_gap_tol;
  c.pass = c.v_star_r_plus <= -c.swing_bound + slack && c.v_star_r_minus >= c.swing_bound - slack &&
           c.out_sep >= c.bound - slack && c.in_sep <= c.delta + slack;
  rep.conclusion = std::move(c);
  return rep;
}

bool LadderResult::pass() const {
  return ladder.all_pass() && ratios_double && witnesses_bounded &&
         std::all_of(levels.begin(), levels.end(), [](const auto& l) { return l.pass(); });
}

LadderResult theorem31_run(const SchemeConfig& scheme, const CompactConvexSet& K,
                           const LadderOptions& opts) {
  const CompositeNorm cn(scheme, opts.level.tol);
  const int N = scheme.levels;

  auto run_level = [&](int n) {
    Theorem22Options lo = opts.level;
    lo.seed = opts.level.seed + static_cast<std::uint64_t>(n);
    return theorem22_check(scheme.alpha(n), cn, K, scheme.eta[static_cast<std::size_t>(n - 1)], lo);
  };

  LadderResult res;
  res.levels.resize(static_cast<std::size_t>(N));
  const bool parallel = opts.parallel && std::thread::hardware_concurrency() > 1 && N > 1;
  if (parallel) {
    std::vector<std::future<Theorem22Report>> jobs;
    for (int n = 1; n <= N; ++n) jobs.push_back(std::async(std::launch::async, run_level, n));
    for (int n = 1; n <= N; ++n) res.levels[static_cast<std::size_t>(n - 1)] = jobs[static_cast<std::size_t>(n - 1)].get();
  } else {
    for (int n = 1; n <= N; ++n) res.levels[static_cast<std::size_t>(n - 1)] = run_level(n);
  }

  const double rho = scheme.rho;
  res.max_witness_norm = 0.0;
  for (int n = 1; n <= N; ++n) {
    const auto idx = static_cast<std::size_t>(n - 1);
    const Theorem22Report& lvl = res.levels[idx];
    const double t = scheme.t[idx];
    ModulusRow row;
    row.n = n;
    row.delta = separation_delta(rho, t);
    row.bound = rho / 16.0;
    if (lvl.conclusion) {
      row.in_sep = lvl.conclusion->in_sep;
      row.out_sep = lvl.conclusion->out_sep;
    }
    row.pass = lvl.pass() && row.out_sep >= row.bound - opts.level.tol.cert_gap_tol &&
               row.in_sep <= row.delta + opts.level.tol.cert_gap_tol;
    res.ladder.rows.push_back(row);
    res.ratios.push_back(row.bound / row.delta);

    const DerivedPoints P = derive_points(scheme.alpha(n));
    res.max_witness_norm =
        std::max({res.max_witness_norm, cn.value(P.x_plus), cn.value(P.x_minus)});
  }
  res.witnesses_bounded = res.max_witness_norm <= 1.2;
  res.ratios_double = true;
  for (std::size_t k = 1; k < res.ratios.size(); ++k) {
    if (std::abs(res.ratios[k] / res.ratios[k - 1] - 2.0) > 1e-12) res.ratios_double = false;
  }

  // Continuity evidence at the first witness: separations of projections of
  // nearby points. Reported only.
  const Point x0 = derive_points(scheme.alpha(1)).x_plus;
  const auto r0 = nearest_point(cn, K, x0, opts.level.tol);
  Sampler sampler(opts.level.seed ^ 0xc0ffeeULL);
  for (double radius : {1e-2, 1e-3, 1e-4}) {
    LocalModulus lm;
    lm.radius = radius;
    for (int i = 0; i < opts.local_modulus_dirs; ++i) {
      const Point x = x0 + radius * sampler.unit_sphere(scheme.dim);
      const auto r = nearest_point(cn, K, x, opts.level.tol);
      lm.max_out_sep = std::max(lm.max_out_sep, cn.value(r.point - r0.point));
    }
    res.local_moduli.push_back(lm);
  }
  return res;
}

}  // namespace renorm
