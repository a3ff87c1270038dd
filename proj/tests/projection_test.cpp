#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "renorm/convex_set.hpp"
#include "renorm/errors.hpp"
#include "renorm/projection.hpp"
#include "renorm/renorming.hpp"
#include "renorm/sampling.hpp"

using namespace renorm;

namespace {

const ToleranceConfig kTol{};

double segment_oracle(const GaugeOracle& g, const Segment& s, const Point& x) {
  return oracle::min1d([&](double t) { return g.value(x - s.a - t * (s.b - s.a)); }, 0.0, 1.0);
}

// Triangle projection by a zooming grid over barycentric coordinates.
double triangle_oracle(const GaugeOracle& g, const std::vector<Point>& v, const Point& x) {
  auto f = [&](double a, double b) {
    a = std::clamp(a, 0.0, 1.0);
    b = std::clamp(b, 0.0, 1.0 - a);
    return g.value(x - (a * v[0] + b * v[1] + (1 - a - b) * v[2]));
  };
  return oracle::min2d(f, 0.0, 1.0, 0.0, 1.0);
}

}  // namespace

TEST(ConvexSet, Construction) {
  EXPECT_THROW(CompactConvexSet::segment(Point{1, 0}, Point{1, 0}), InputError);
  EXPECT_THROW(CompactConvexSet::segment(Point{1, 0}, Point{1, 0, 0}), InputError);
  EXPECT_THROW(CompactConvexSet::polytope({}), InputError);
  const auto K = CompactConvexSet::polytope({Point{1, 0}, Point{0, 1}, Point{1, 0}});
  EXPECT_EQ(K.vertices().size(), 2u);
  EXPECT_DOUBLE_EQ(K.max_abs(Functional{-2, 1}), 2.0);
  const auto S = CompactConvexSet::symmetric_segment(Point::unit(3, 2), 0.05);
  EXPECT_TRUE(S.is_segment());
  EXPECT_EQ(S.at(std::vector<double>{0.5}), Point(3));
}

TEST(NearestPoint, PointInsideSet) {
  const BlueprintGauge g(fixture_a());
  const auto K = CompactConvexSet::symmetric_segment(Point::unit(8, 5), 0.3);
  const Point x = 0.1 * Point::unit(8, 5);
  const auto r = nearest_point(g, K, x, kTol);
  EXPECT_NEAR(r.distance, 0.0, 1e-12);
  EXPECT_NEAR(euclid_norm(r.point - x), 0.0, 1e-9);
}

TEST(NearestPoint, EuclideanCoordinateProjection) {
  const EuclideanGauge g(8);
  const auto K = CompactConvexSet::symmetric_segment(Point::unit(8, 2), 0.05);
  const auto r = nearest_point(g, K, Point::unit(8, 2), kTol);
  EXPECT_NEAR(r.distance, 0.95, 1e-12);
  EXPECT_NEAR(r.point[2], 0.05, 1e-12);
}

TEST(NearestPoint, CompositeSwingsAwayFromWitness) {
  const SchemeConfig s = build_scheme(0.2, 4, 8, Point::unit(8, 6));
  const CompositeNorm cn(s);
  const auto K = CompactConvexSet::symmetric_segment(Point::unit(8, 6), 0.05);
  const DerivedPoints p = derive_points(s.alpha(1));
  EXPECT_LE(nearest_point(cn, K, p.x_plus, kTol).point[6], -0.00625);
  EXPECT_GE(nearest_point(cn, K, p.x_minus, kTol).point[6], 0.00625);
}

TEST(NearestPoint, SegmentMatchesOracle) {
  const BlueprintGauge g(fixture_a());
  Sampler rng(41);
  for (int i = 0; i < 10; ++i) {
    const Point a = 0.5 * rng.unit_ball(8), b = 0.5 * rng.unit_ball(8);
    const auto K = CompactConvexSet::segment(a, b);
    const Point x = rng.unit_ball(8);
    const auto r = nearest_point(g, K, x, kTol);
    const double want = segment_oracle(g, K.as_segment(), x);
    EXPECT_NEAR(r.distance, want, 1e-8);
    EXPECT_LE(r.gap, kTol.cert_gap_tol);
    EXPECT_NEAR(g.value(x - r.point), r.distance, 1e-12);
  }
}

TEST(NearestPoint, TriangleMatchesOracle) {
  const BlueprintGauge g(fixture_a());
  Sampler rng(42);
  for (int i = 0; i < 4; ++i) {
    const std::vector<Point> v = {0.4 * rng.unit_ball(8), 0.4 * rng.unit_ball(8),
                                  0.4 * rng.unit_ball(8)};
    const auto K = CompactConvexSet::polytope(v);
    const Point x = rng.unit_ball(8);
    const auto r = nearest_point(g, K, x, kTol);
    EXPECT_NEAR(r.distance, triangle_oracle(g, v, x), 2e-6);
    EXPECT_LE(r.gap, kTol.cert_gap_tol);
    double wsum = 0.0;
    for (double w : r.parameter) {
      EXPECT_GE(w, 0.0);
      wsum += w;
    }
    EXPECT_NEAR(wsum, 1.0, 1e-12);
  }
}

TEST(NearestPoint, RejectsDimensionMismatch) {
  const EuclideanGauge g(3);
  const auto K = CompactConvexSet::symmetric_segment(Point::unit(4, 0), 1.0);
  EXPECT_THROW(nearest_point(g, K, Point(3), kTol), InputError);
}

TEST(ModulusScan, IdenticalPairHasZeroSeparation) {
  const BlueprintGauge g(fixture_a());
  const auto K = CompactConvexSet::symmetric_segment(Point::unit(8, 6), 0.05);
  const Point x = Point::unit(8, 0);
  const std::vector<WitnessPair> pairs = {{x, x, 0.0, 1}};
  const ModulusReport rep = modulus_scan(g, K, pairs, 0.0, kTol);
  ASSERT_EQ(rep.rows.size(), 1u);
  EXPECT_EQ(rep.rows[0].in_sep, 0.0);
  EXPECT_NEAR(rep.rows[0].out_sep, 0.0, 1e-9);
}

TEST(ModulusScan, LadderWitnessPairs) {
  const SchemeConfig s = build_scheme(0.2, 4, 8, Point::unit(8, 6));
  const CompositeNorm cn(s);
  const auto K = CompactConvexSet::symmetric_segment(Point::unit(8, 6), 0.05);
  std::vector<WitnessPair> pairs;
  for (int n = 1; n <= 4; ++n) {
    const DerivedPoints p = derive_points(s.alpha(n));
    pairs.push_back({p.x_plus, p.x_minus, 2 * s.t[n - 1] / 0.64, n});
  }
  const ModulusReport rep = modulus_scan(cn, K, pairs, 0.0125, kTol);
  EXPECT_TRUE(rep.all_pass());
  for (std::size_t i = 1; i < rep.rows.size(); ++i) {
    EXPECT_NEAR(rep.rows[i].delta, rep.rows[i - 1].delta / 2, 1e-15);
    EXPECT_GE(rep.rows[i].out_sep, 0.0125);
  }
  EXPECT_NEAR(rep.rows[0].delta, 0.01953125, 1e-15);
}
