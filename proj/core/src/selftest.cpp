#include "renorm/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "renorm/blueprint.hpp"
#include "renorm/convex_set.hpp"
#include "renorm/gauge.hpp"
#include "renorm/projection.hpp"
#include "renorm/renorming.hpp"
#include "renorm/sampling.hpp"

namespace renorm {

namespace {

int count(double base, double scale) {
  return std::max(1, static_cast<int>(std::lround(base * scale)));
}

// Records min over samples of (lhs - rhs); passes when it is >= -slack.
class MinTracker {
 public:
  void add(double margin) { worst_ = std::min(worst_, margin); }
  SelfCheck check(std::string name, double slack) const {
    std::ostringstream d;
    d << "min margin " << format_double(worst_) << " (slack " << format_double(slack) << ")";
    return {std::move(name), worst_ >= -slack, d.str()};
  }

 private:
  double worst_ = std::numeric_limits<double>::infinity();
};

SelfCheck guarded(const std::string& name, const std::function<SelfCheck()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::string("threw: ") + e.what()};
  }
}

SuiteResult geometry_suite(const SelftestOptions& o) {
  SuiteResult s{"geometry_core", {}};
  const std::size_t d = 8;
  const EuclideanGauge euclid(d);
  Sampler rng(o.seed);
  const int n = count(500, o.scale);

  s.checks.push_back(guarded("euclid_triangle", [&] {
    MinTracker m;
    for (int i = 0; i < n; ++i) {
      const Point x = rng.unit_ball(d), y = rng.unit_ball(d);
      m.add(euclid.value(x) + euclid.value(y) - euclid.value(x + y));
    }
    return m.check("euclid_triangle", 1e-15);
  }));
  s.checks.push_back(guarded("euclid_q_identity", [&] {
    MinTracker m;
    for (int i = 0; i < n; ++i) {
      const Point x = rng.unit_ball(d), y = rng.unit_ball(d);
      const double diff = euclid_norm(x - y);
      m.add(-std::abs(q_functional(euclid, x, y) - diff * diff));
    }
    return m.check("euclid_q_identity", 1e-12);
  }));
  s.checks.push_back(guarded("sampler_determinism", [&] {
    const auto a = sample_unit_sphere(o.seed, 16, d);
    const auto b = sample_unit_sphere(o.seed, 16, d);
    return SelfCheck{"sampler_determinism", a == b, "two streams from one seed"};
  }));
  s.checks.push_back(guarded("sphere_samples_unit", [&] {
    MinTracker m;
    for (int i = 0; i < n; ++i) m.add(-std::abs(euclid_norm(rng.unit_sphere(d)) - 1.0));
    return m.check("sphere_samples_unit", 1e-14);
  }));
  return s;
}

SuiteResult blueprint_suite(const SelftestOptions& o) {
  SuiteResult s{"blueprint_norm", {}};
  const AlphaTuple a = fixture_a();
  const BlueprintGauge g(a);
  const std::size_t d = a.dim();
  Sampler rng(o.seed + 1);
  const double upper = 1.0 / (1.0 - a.rho);

  s.checks.push_back(guarded("alpha_sandwich", [&] {
    MinTracker m;
    for (int i = 0; i < count(300, o.scale); ++i) {
      const Point x = rng.unit_sphere(d);
      const double v = g.value(x);
      m.add(std::min(v - 1.0, upper - v));
    }
    return m.check("alpha_sandwich", 1e-6);
  }));
  s.checks.push_back(guarded("alpha_triangle", [&] {
    MinTracker m;
    for (int i = 0; i < count(100, o.scale); ++i) {
      const Point x = rng.unit_ball(d), y = rng.unit_ball(d);
      m.add(g.value(x) + g.value(y) - g.value(x + y));
    }
    return m.check("alpha_triangle", 1e-8);
  }));
  s.checks.push_back(guarded("y_points_on_sphere", [&] {
    MinTracker m;
    m.add(-std::abs(g.value(g.points().y_plus) - 1.0));
    m.add(-std::abs(g.value(g.points().y_minus) - 1.0));
    return m.check("y_points_on_sphere", 1e-6);
  }));
  s.checks.push_back(guarded("lemma_residuals", [&] {
    MinTracker m;
    for (int i = 0; i < count(2000, o.scale); ++i) {
      const Point k = rng.unit_ball(d);
      Point z = rng.unit_ball(d);
      while (dual_eval(a.e_star, z) > 1.0 - a.rho) z = rng.unit_ball(d);
      m.add(lemma_residuals(a, k, z).min());
      m.add(lemma_residuals(a, k).min());
    }
    return m.check("lemma_residuals", 1e-12);
  }));
  s.checks.push_back(guarded("hyperplane_norm", [&] {
    const HyperplanePair hp = hyperplanes(a);
    MinTracker m;
    const double bound = 1.0 + a.t / 25.0;
    m.add(bound - g.support(hp.phi_plus));
    m.add(bound - g.support(hp.phi_minus));
    return m.check("hyperplane_norm", 0.0);
  }));
  s.checks.push_back(guarded("certificate_gap", [&] {
    MinTracker m;
    const std::vector<Point> span = {a.e, a.h, a.v};
    for (int i = 0; i < count(20, o.scale); ++i) {
      const Point x = rng.unit_sphere_in_span(span);
      const GaugeCertificate c = certify_gauge_alpha(g, x, rng);
      m.add(0.05 * c.primal - c.gap);
    }
    return m.check("certificate_gap", 0.0);
  }));
  return s;
}

SuiteResult renorming_suite(const SelftestOptions& o) {
  SuiteResult s{"renorming", {}};
  const SchemeConfig scheme = build_scheme(0.2, 4, 8, Point::unit(8, 7));
  const CompositeNorm cn(scheme);
  Sampler rng(o.seed + 2);
  const std::size_t d = scheme.dim;

  s.checks.push_back(guarded("scheme_valid", [&] {
    validate_scheme(scheme);
    return SelfCheck{"scheme_valid", true, "all ladder invariants hold"};
  }));
  s.checks.push_back(guarded("lur_sandwich", [&] {
    MinTracker m;
    for (int i = 0; i < count(50, o.scale); ++i) {
      const Point x = rng.unit_sphere(d);
      for (const LurNorm& ln : cn.terms()) {
        const double ga = ln.blueprint().value(x);
        const double v = ln.value(x);
        m.add(std::min(v - ga, (1.0 + ln.eta()) * ga - v) / ga);
      }
    }
    return m.check("lur_sandwich", 1e-9);
  }));
  s.checks.push_back(guarded("composite_sandwich", [&] {
    MinTracker m;
    const double lo = scheme.base_factor();
    const double hi = lo / (1.0 - scheme.rho);
    for (int i = 0; i < count(100, o.scale); ++i) {
      const double v = cn.value(rng.unit_sphere(d));
      m.add(std::min(v - lo, hi - v));
    }
    return m.check("composite_sandwich", 1e-6);
  }));
  s.checks.push_back(guarded("lur_q_lower", [&] {
    MinTracker m;
    const LurNorm& ln = cn.term(1);
    for (int i = 0; i < count(100, o.scale); ++i) {
      const Point x = rng.unit_ball(d), y = rng.unit_ball(d);
      const double diff = euclid_norm(x - y);
      m.add(q_functional(ln, x, y) - ln.c() * diff * diff);
    }
    return m.check("lur_q_lower", 1e-10);
  }));
  return s;
}

SuiteResult projection_suite(const SelftestOptions& o) {
  SuiteResult s{"projection", {}};
  const AlphaTuple a = fixture_a();
  const BlueprintGauge g(a);
  const std::size_t d = a.dim();
  Sampler rng(o.seed + 3);
  const CompactConvexSet seg =
      CompactConvexSet::segment(0.3 * Point::unit(d, 3) - 0.1 * Point::unit(d, 0),
                                -0.2 * Point::unit(d, 4) + 0.1 * Point::unit(d, 2));
  std::vector<Point> verts;
  for (int i = 0; i < 4; ++i) verts.push_back(0.4 * rng.unit_ball(d));
  const CompactConvexSet poly = CompactConvexSet::polytope(verts);

  for (const auto* K : {&seg, &poly}) {
    const std::string tag = K->is_segment() ? "segment" : "polytope";
    s.checks.push_back(guarded(tag + "_optimality", [&] {
      MinTracker m;
      for (int i = 0; i < count(K->is_segment() ? 20 : 4, o.scale); ++i) {
        const Point x = rng.unit_ball(d);
        const ProjectionResult r = nearest_point(g, *K, x, g.tolerance());
        m.add(g.tolerance().cert_gap_tol - r.gap);
        for (const Point& p : K->vertices()) m.add(g.value(x - p) - r.distance);
        for (int j = 0; j < 8; ++j) {
          std::vector<double> w(K->parameter_count());
          double sum = 0.0;
          for (double& wi : w) sum += (wi = rng.uniform());
          if (!K->is_segment()) {
            for (double& wi : w) wi /= sum;
          }
          m.add(g.value(x - K->at(w)) - r.distance + g.tolerance().cert_gap_tol);
        }
      }
      return m.check(tag + "_optimality", 1e-9);
    }));
  }
  return s;
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& opts) {
  return {geometry_suite(opts), blueprint_suite(opts), renorming_suite(opts),
          projection_suite(opts)};
}

}  // namespace renorm
