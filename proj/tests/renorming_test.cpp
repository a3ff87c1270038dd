#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "renorm/errors.hpp"
#include "renorm/gauge.hpp"
#include "renorm/renorming.hpp"
#include "renorm/sampling.hpp"

using namespace renorm;

namespace {

SchemeConfig standard_scheme() { return build_scheme(0.2, 4, 8, Point::unit(8, 6)); }

}  // namespace

TEST(Scheme, LadderValues) {
  const SchemeConfig s = standard_scheme();
  ASSERT_EQ(s.t.size(), 4u);
  const double want_t[] = {0.00625, 0.003125, 0.0015625, 0.00078125};
  for (int n = 0; n < 4; ++n) {
    EXPECT_DOUBLE_EQ(s.t[n], want_t[n]);
    EXPECT_EQ(s.level[n], n + 1);
  }
  EXPECT_DOUBLE_EQ(s.eta[0], 0.04 / 819200);
  EXPECT_NEAR(s.eta[0], 4.8828e-8, 1e-12);
  EXPECT_LT(s.eta[0], s.t[0] * s.rho / 12800);
  EXPECT_NEAR(s.t[0] * s.rho / 12800, 9.7656e-8, 1e-12);
  for (int i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(s.eps[i], std::ldexp(0.04 / 409600, -(i + 1)));
  EXPECT_DOUBLE_EQ(s.base_factor(), 1.0 / 0.975);
  EXPECT_NO_THROW(validate_scheme(s));
}

TEST(Scheme, TuplesFollowBasisAssignment) {
  const SchemeConfig s = standard_scheme();
  for (int n = 1; n <= 4; ++n) {
    const AlphaTuple a = s.alpha(n);
    EXPECT_EQ(a.e, Point::unit(8, n - 1));
    EXPECT_EQ(a.h, Point::unit(8, n));
    EXPECT_EQ(a.v, Point::unit(8, 6));
    EXPECT_DOUBLE_EQ(a.t, s.t[n - 1]);
  }
  EXPECT_THROW(s.alpha(0), InputError);
  EXPECT_THROW(s.alpha(5), InputError);
}

TEST(Scheme, RejectsBadParameters) {
  EXPECT_THROW(build_scheme(0.2, 4, 6, Point::unit(6, 5)), InputError);
  EXPECT_THROW(build_scheme(0.25, 4, 8, Point::unit(8, 7)), InputError);
  EXPECT_THROW(build_scheme(0.2, 0, 8, Point::unit(8, 7)), InputError);
  EXPECT_THROW(build_scheme(0.2, 4, 8, Point::unit(8, 2)), InputError);
  EXPECT_THROW(build_scheme(0.2, 4, 8, 2.0 * Point::unit(8, 7)), InputError);
}

TEST(Scheme, ValidateNamesBrokenInvariant) {
  SchemeConfig s = standard_scheme();
  s.t[2] *= 1.5;
  try {
    validate_scheme(s);
    FAIL() << "expected ConstraintError";
  } catch (const ConstraintError& e) {
    EXPECT_EQ(e.constraint(), "t_ladder");
  }
  s = standard_scheme();
  s.eta[0] = 1e-6;
  try {
    validate_scheme(s);
    FAIL() << "expected ConstraintError";
  } catch (const ConstraintError& e) {
    EXPECT_EQ(e.constraint(), "eta_bound");
  }
}

TEST(LurNorm, SandwichAroundBlueprint) {
  const SchemeConfig s = standard_scheme();
  Sampler rng(31);
  for (int n = 1; n <= 4; ++n) {
    const LurNorm ln = make_lur_norm(s, n);
    EXPECT_EQ(lur_gauge(ln, Point(8)), 0.0);
    for (int i = 0; i < 100; ++i) {
      const Point x = rng.unit_sphere(8);
      const double ga = ln.blueprint().value(x), v = lur_gauge(ln, x);
      EXPECT_GE(v, ga);
      EXPECT_LE(v, (1 + ln.eta()) * ga * (1 + 1e-12));
      // Oracle: the blend formula written out.
      EXPECT_DOUBLE_EQ(v, std::sqrt(ga * ga + ln.c() * euclid_norm(x) * euclid_norm(x)));
    }
  }
}

TEST(LurNorm, QuantitativeConvexity) {
  const SchemeConfig s = standard_scheme();
  Sampler rng(32);
  for (int n = 1; n <= 4; ++n) {
    const LurNorm ln = make_lur_norm(s, n);
    for (int i = 0; i < 100; ++i) {
      const Point x = rng.unit_ball(8), y = rng.unit_ball(8);
      const double diff = euclid_norm(x - y);
      EXPECT_GE(q_functional(ln, x, y), ln.c() * diff * diff - 1e-10);
    }
  }
}

TEST(LurNorm, RejectsOversizedBlend) {
  EXPECT_THROW(LurNorm(fixture_a(), 1e-3, 1e-6), ConstraintError);
  EXPECT_THROW(LurNorm(fixture_a(), 0.0, 1e-6), ConstraintError);
  EXPECT_NO_THROW(LurNorm(fixture_a(), 1e-6, 1e-6));
}

TEST(CompositeNorm, ValueOnSliceFreeDirection) {
  const CompositeNorm cn(standard_scheme());
  EXPECT_NEAR(composite_gauge(cn, Point::unit(8, 6)), 1.0 / (1.0 - 0.025), 1e-15);
  EXPECT_NEAR(composite_gauge(cn, Point::unit(8, 6)), 1.0256410, 1e-7);
  EXPECT_EQ(active_terms(cn, Point::unit(8, 6), 1e-6), std::set<std::size_t>{CompositeNorm::kBaseTerm});
}

TEST(CompositeNorm, WitnessPointsStayNearSphere) {
  const SchemeConfig s = standard_scheme();
  const CompositeNorm cn(s);
  for (int n = 1; n <= 4; ++n) {
    const DerivedPoints p = derive_points(s.alpha(n));
    EXPECT_LE(cn.value(p.y_plus), 1 + s.eta[n - 1] + 1e-10);
    EXPECT_LE(cn.value(p.y_minus), 1 + s.eta[n - 1] + 1e-10);
    const auto vals = cn.term_values(p.y_plus);
    EXPECT_NEAR(vals[CompositeNorm::kBaseTerm], euclid_norm(p.y_plus) / 0.975, 1e-15);
  }
  const DerivedPoints p1 = derive_points(s.alpha(1));
  EXPECT_TRUE(active_terms(cn, p1.y_plus, 1e-3).count(1));
  EXPECT_NEAR(cn.term_values(p1.y_plus)[0], 0.9245, 1e-4);
}

TEST(CompositeNorm, ActiveTermsNonemptyAndBounded) {
  const CompositeNorm cn(standard_scheme());
  Sampler rng(33);
  for (int i = 0; i < 100; ++i) {
    const auto act = active_terms(cn, rng.unit_sphere(8), 1e-6);
    EXPECT_FALSE(act.empty());
    EXPECT_LE(act.size(), 5u);
  }
  EXPECT_THROW(active_terms(cn, Point(8), 1e-6), InputError);
}

TEST(CompositeNorm, Sandwich) {
  const CompositeNorm cn(standard_scheme());
  Sampler rng(34);
  for (int i = 0; i < 1000; ++i) {
    const double v = cn.value(rng.unit_sphere(8));
    EXPECT_GE(v, 1.0 / 0.975 - 1e-12);
    EXPECT_LE(v, 1.0 / 0.975 / 0.8 + 1e-6);
  }
}

TEST(CompositeNorm, StrictlyConvexWhereBlueprintIsFlat) {
  const SchemeConfig s = standard_scheme();
  const CompositeNorm cn(s);
  const DerivedPoints p = derive_points(s.alpha(1));
  const BlueprintGauge& raw = cn.term(1).blueprint();
  EXPECT_NEAR(strict_convexity_probe(raw, p.y_plus, p.y_minus), 0.0, 1e-6);
  EXPECT_GT(strict_convexity_probe(cn, p.y_plus, p.y_minus), 0.0);
}

TEST(CompositeNorm, CertificateBracketsValue) {
  const SchemeConfig s = standard_scheme();
  const CompositeNorm cn(s);
  Sampler rng(35);
  const Point x = derive_points(s.alpha(2)).x_plus;
  const CompositeCertificate c = certify_composite(cn, x, rng);
  EXPECT_LE(c.dual, c.primal + 1e-12);
  EXPECT_LE(c.gap, 1e-3 * c.primal);
}
