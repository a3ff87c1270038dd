#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "renorm/blueprint.hpp"
#include "renorm/errors.hpp"
#include "renorm/sampling.hpp"

using namespace renorm;

namespace {

const oracle::Fixture kRef;

std::string violated(const std::function<void()>& build) {
  try {
    build();
  } catch (const ConstraintError& e) {
    return e.constraint();
  }
  return "";
}

AlphaTuple fixture_with(double t, Point h) {
  const std::size_t d = 8;
  const Point e = Point::unit(d, 0), v = Point::unit(d, 2);
  return make_alpha(v, as_functional(v), e, as_functional(e), h, as_functional(h), t, 0.2);
}

}  // namespace

TEST(AlphaTuple, FixtureIsValid) {
  const AlphaTuple a = fixture_a();
  EXPECT_EQ(a.dim(), 8u);
  EXPECT_DOUBLE_EQ(a.t, 0.00625);
  EXPECT_DOUBLE_EQ(a.rho, 0.2);
}

TEST(AlphaTuple, RejectsLargeT) {
  EXPECT_EQ(violated([] { fixture_with(0.0125, Point::unit(8, 1)); }), "t_range");
  EXPECT_EQ(violated([] { fixture_with(0.0, Point::unit(8, 1)); }), "t_range");
}

TEST(AlphaTuple, RejectsTiltedH) {
  // sin(theta) = rho/100 puts |e*(h)| far above rho/800.
  const double s = 0.002, c = std::sqrt(1 - s * s);
  Point h(8);
  h[0] = s;
  h[1] = c;
  EXPECT_EQ(violated([&] { fixture_with(0.00625, h); }), "e_star_h");
}

TEST(AlphaTuple, NamesEachViolation) {
  const std::size_t d = 8;
  const Point e = Point::unit(d, 0), h = Point::unit(d, 1), v = Point::unit(d, 2);
  const Functional es = as_functional(e), hs = as_functional(h), vs = as_functional(v);
  EXPECT_EQ(violated([&] { make_alpha(v, vs, e, es, h, hs, 0.00625, 0.25); }), "rho_range");
  EXPECT_EQ(violated([&] { make_alpha(2.0 * v, vs, e, es, h, hs, 0.00625, 0.2); }), "unit_v");
  EXPECT_EQ(violated([&] { make_alpha(v, vs, e, 0.5 * es, h, hs, 0.00625, 0.2); }), "unit_e_star");
  const Functional u4 = Functional::unit(d, 3);
  EXPECT_EQ(violated([&] { make_alpha(v, u4, e, es, h, hs, 0.00625, 0.2); }), "pairing_v");
  EXPECT_EQ(violated([&] { make_alpha(v, vs, e, es, Point{1, 0}, hs, 0.00625, 0.2); }),
            "dimension");
}

TEST(DerivedPoints, FixtureCoordinates) {
  const DerivedPoints p = derive_points(fixture_a());
  EXPECT_EQ(p.x_plus.values(), kRef.x_plus());
  EXPECT_EQ(p.x_minus.values(), kRef.x_minus());
  EXPECT_EQ(p.y_plus.values(), kRef.y_plus());
  EXPECT_EQ(p.y_minus.values(), kRef.y_minus());
  EXPECT_NEAR(euclid_norm(p.y_plus), 0.9014095, 1e-7);
  EXPECT_LT(euclid_norm(p.y_plus), 0.975);
  const Point diff = p.x_plus - p.x_minus;
  EXPECT_DOUBLE_EQ(diff[1], 0.0125);
  EXPECT_EQ(euclid_norm(diff), 0.0125);
}

TEST(GaugeC, Values) {
  const AlphaTuple a = fixture_a();
  EXPECT_DOUBLE_EQ(gauge_C(a, Point::unit(8, 2)), 1.0);
  EXPECT_DOUBLE_EQ(gauge_C(a, derive_points(a).x_plus), 1.125);
  Sampler rng(1);
  for (int i = 0; i < 100; ++i) {
    const Point x = rng.unit_ball(8);
    EXPECT_DOUBLE_EQ(gauge_C(a, x), kRef.gauge_c(x.values()));
  }
}

TEST(SupportC, MatchesGridOracle) {
  const AlphaTuple a = fixture_a();
  EXPECT_NEAR(support_C(a, a.e_star), 0.8, 1e-12);
  Sampler rng(2);
  for (int i = 0; i < 30; ++i) {
    const Point u = rng.unit_sphere(8);
    EXPECT_NEAR(support_C(a, as_functional(u)), kRef.support_c(u.values()), 1e-10);
  }
}

TEST(GaugeAlpha, KeyValues) {
  const AlphaTuple a = fixture_a();
  const DerivedPoints p = derive_points(a);
  EXPECT_EQ(gauge_alpha(a, Point(8)), 0.0);
  EXPECT_NEAR(gauge_alpha(a, p.y_plus), 1.0, 1e-6);
  EXPECT_NEAR(gauge_alpha(a, p.y_minus), 1.0, 1e-6);
  EXPECT_NEAR(gauge_alpha(a, Point::unit(8, 2)), 1.0, 1e-6);
  const double xp = gauge_alpha(a, p.x_plus);
  EXPECT_GT(xp, 1.0);
  EXPECT_LE(xp, 1.125);
}

TEST(GaugeAlpha, XPlusAboveHyperplaneCertificate) {
  const AlphaTuple a = fixture_a();
  const BlueprintGauge g(a);
  const Point xp = g.points().x_plus;
  const std::vector<Functional> net = {hyperplanes(a).phi_plus};
  const double lower = gauge_alpha_lower(g, xp, net);
  // phi+(x+) = 0.998 * 0.9 + 0.002 * 0.00625 over h(phi+) = phi+(y+) = 0.8982.
  EXPECT_NEAR(lower, 0.8982125 / 0.8982, 1e-12);
  EXPECT_GT(lower, 1.0);
  EXPECT_GE(g.value(xp), lower - 1e-12);
}

TEST(GaugeAlpha, MatchesBruteForceOracle) {
  const AlphaTuple a = fixture_a();
  const BlueprintGauge g(a, {}, false);
  std::vector<Point> xs = {derive_points(a).x_plus, derive_points(a).x_minus,
                           Point{0.95, 0.1, -0.2, 0, 0, 0, 0, 0}, Point{-0.9, 0.02, 0.01, 0, 0, 0.1, 0, 0}};
  Sampler rng(3);
  const std::vector<Point> span = {a.e, a.h, a.v};
  for (int i = 0; i < 6; ++i) xs.push_back(rng.unit_sphere_in_span(span));
  for (int i = 0; i < 4; ++i) xs.push_back(rng.unit_sphere(8));
  for (const Point& x : xs) {
    EXPECT_NEAR(g.value(x), kRef.gauge_alpha(x.values()), 1e-8) << format_point(x);
  }
}

TEST(GaugeAlpha, ShortcutAgreesWithNestedSearch) {
  const AlphaTuple a = fixture_a();
  const BlueprintGauge fast(a), slow(a, {}, false);
  Sampler rng(4);
  for (int i = 0; i < 200; ++i) {
    const Point x = rng.unit_ball(8);
    EXPECT_NEAR(fast.value(x), slow.value(x), 1e-9 * std::max(1.0, fast.value(x)));
  }
}

TEST(GaugeAlpha, NormAxioms) {
  const BlueprintGauge g(fixture_a());
  Sampler rng(5);
  for (int i = 0; i < 100; ++i) {
    const Point x = rng.unit_ball(8), y = rng.unit_ball(8);
    const double gx = g.value(x);
    EXPECT_NEAR(g.value(-x), gx, 1e-9);
    EXPECT_NEAR(g.value(3.5 * x), 3.5 * gx, 1e-9);
    EXPECT_LE(g.value(x + y), gx + g.value(y) + 1e-9);
    EXPECT_GE(gx, euclid_norm(x) * (1 - 1e-10));
    EXPECT_LE(gx, 1.25 * euclid_norm(x) * (1 + 1e-10));
  }
}

TEST(GaugeAlpha, RejectsBadInput) {
  const BlueprintGauge g(fixture_a());
  EXPECT_THROW(g.value(Point{1, 2, 3}), InputError);
  EXPECT_THROW(g.value(Point{1, 0, 0, 0, 0, 0, 0, std::numeric_limits<double>::infinity()}),
               InputError);
}

TEST(GaugeAlphaLower, SupportCertificates) {
  const AlphaTuple a = fixture_a();
  const BlueprintGauge g(a);
  const std::vector<Functional> net = {a.e_star};
  EXPECT_NEAR(gauge_alpha_lower(g, g.points().y_plus, net), 1.0, 1e-12);
  EXPECT_THROW(gauge_alpha_lower(g, g.points().y_plus, std::vector<Functional>{}), InputError);
  EXPECT_THROW(gauge_alpha_lower(g, g.points().y_plus, std::vector<Functional>{Functional(8)}),
               InputError);
}

TEST(GaugeAlphaLower, WeakDuality) {
  const BlueprintGauge g(fixture_a());
  Sampler rng(6);
  std::vector<Functional> net;
  for (int i = 0; i < 50; ++i) net.push_back(as_functional(rng.unit_sphere(8)));
  for (int i = 0; i < 50; ++i) {
    const Point x = rng.unit_ball(8);
    EXPECT_LE(gauge_alpha_lower(g, x, net), g.value(x) + 1e-6);
  }
}

TEST(Support, MatchesOracleDefinition) {
  const AlphaTuple a = fixture_a();
  const BlueprintGauge g(a);
  Sampler rng(7);
  for (int i = 0; i < 20; ++i) {
    const Point u = rng.unit_sphere(8);
    const double yp = std::abs(dual_eval(as_functional(u), g.points().y_plus));
    const double ym = std::abs(dual_eval(as_functional(u), g.points().y_minus));
    EXPECT_NEAR(g.support(as_functional(u)), std::max({kRef.support_c(u.values()), yp, ym}), 1e-10);
  }
}

TEST(Certificate, SmallGapInSpan) {
  const AlphaTuple a = fixture_a();
  const BlueprintGauge g(a);
  Sampler rng(8);
  const std::vector<Point> span = {a.e, a.h, a.v};
  for (int i = 0; i < 40; ++i) {
    const Point x = rng.unit_sphere_in_span(span);
    const GaugeCertificate c = certify_gauge_alpha(g, x, rng);
    EXPECT_LE(c.dual, c.primal + 1e-9);
    EXPECT_LE(c.gap, 1e-6 * c.primal);
    EXPECT_NEAR(c.gap, c.primal - c.dual, 1e-15);
  }
}

TEST(Hyperplanes, FixtureValues) {
  const AlphaTuple a = fixture_a();
  const HyperplanePair hp = hyperplanes(a);
  EXPECT_DOUBLE_EQ(hp.lambda, 0.998);
  const std::vector<double> want = {0.998, 0.002, -0.00025, 0, 0, 0, 0, 0};
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(hp.phi_plus[i], want[i], 1e-15);
    EXPECT_NEAR(hp.phi_minus[i], i == 0 ? want[i] : -want[i], 1e-15);
  }
  EXPECT_NEAR(euclid_norm(hp.phi_plus), 0.9980020, 1e-7);
  EXPECT_LE(euclid_norm(hp.phi_plus), 1.0 + a.t / 25.0);
}

TEST(Hyperplanes, SeparationArithmetic) {
  const AlphaTuple a = fixture_a();
  const DerivedPoints p = derive_points(a);
  const HyperplanePair hp = hyperplanes(a);
  EXPECT_NEAR(dual_eval(hp.phi_plus, p.x_plus - p.y_plus), 1.25e-5, 1e-17);
}

TEST(LemmaResiduals, ZeroKItemOne) {
  const LemmaResiduals r = lemma_residuals(fixture_a(), Point(8));
  // lhs 1.25e-5, rhs t rho / (25 * 16) = 3.125e-6.
  EXPECT_NEAR(r.values[0], 9.375e-6, 1e-17);
  EXPECT_STREQ(LemmaResiduals::kNames[0], "plus_vs_y_plus");
}

TEST(LemmaResiduals, CapItemWithGivenZ) {
  Point z(8);
  z[0] = 0.8;
  const LemmaResiduals r = lemma_residuals(fixture_a(), Point(8), z);
  EXPECT_NEAR(r.values[2], 0.0998125 - 0.025, 1e-15);
  EXPECT_GT(r.values[2], 0.0);
}

TEST(LemmaResiduals, WorstCaseZDominatesSampledZ) {
  const AlphaTuple a = fixture_a();
  Sampler rng(9);
  for (int i = 0; i < 500; ++i) {
    const Point k = rng.unit_ball(8);
    Point z = rng.unit_ball(8);
    while (dual_eval(a.e_star, z) > 0.8) z = rng.unit_ball(8);
    const LemmaResiduals worst = lemma_residuals(a, k), some = lemma_residuals(a, k, z);
    EXPECT_LE(worst.values[2], some.values[2] + 1e-12);
    EXPECT_LE(worst.values[5], some.values[5] + 1e-12);
  }
}

TEST(LemmaResiduals, SweepNonnegative) {
  const AlphaTuple a = fixture_a();
  Sampler rng(10);
  for (int i = 0; i < 20000; ++i) {
    const Point k = rng.unit_ball(8);
    Point z = rng.unit_ball(8);
    while (dual_eval(a.e_star, z) > 0.8) z = rng.unit_ball(8);
    ASSERT_GE(lemma_residuals(a, k, z).min(), -1e-12);
  }
}

TEST(LemmaResiduals, RejectsOutOfDomain) {
  const AlphaTuple a = fixture_a();
  EXPECT_THROW(lemma_residuals(a, 2.0 * Point::unit(8, 3)), InputError);
  EXPECT_THROW(lemma_residuals(a, Point(8), Point::unit(8, 0)), InputError);
  EXPECT_THROW(lemma_residuals(a, Point(8), 1.5 * Point::unit(8, 1)), InputError);
}
