#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <limits>

#include "elastic/geometry.hpp"
#include "support/generators.hpp"

using namespace elastic;

namespace {

const Tolerance kTol;

Segment seg(double ax, double ay, double bx, double by) {
  return Segment(make_point({ax, ay}), make_point({bx, by}));
}

// Lenient radii are inflated by eps * scale, so ends move by about 1e-9.
void expect_interval(const MaybeInterval& got, double lo, double hi, double eps = 1e-8) {
  ASSERT_TRUE(got.has_value());
  EXPECT_NEAR(got->lo, lo, eps);
  EXPECT_NEAR(got->hi, hi, eps);
}

}  // namespace

TEST(Radius, RejectsNegativeAndNonFinite) {
  EXPECT_THROW(Radius(-1.0), InputError);
  EXPECT_THROW(Radius(std::nan("")), InputError);
  EXPECT_THROW(Radius(std::numeric_limits<double>::infinity()), InputError);
  EXPECT_EQ(Radius(0.0).value(), 0.0);
}

TEST(Tolerance, RejectsOutOfRangeEps) {
  EXPECT_THROW(Tolerance(0.0), InputError);
  EXPECT_THROW(Tolerance(1.0), InputError);
  EXPECT_NO_THROW(Tolerance(1e-12));
}

TEST(PointSegmentWithin, Examples) {
  EXPECT_TRUE(point_segment_within(make_point({0, 0}), seg(0, 0, 1, 0), Radius(0), kTol));
  EXPECT_TRUE(point_segment_within(make_point({0.5, 0.3}), seg(0, 0, 1, 0), Radius(0.3), kTol));
  EXPECT_FALSE(point_segment_within(make_point({2, 0}), seg(0, 0, 1, 0), Radius(0.5), kTol));
}

TEST(PointSegmentWithin, DegenerateSegmentIsBall) {
  EXPECT_TRUE(point_segment_within(make_point({3, 4}), seg(0, 0, 0, 0), Radius(5), kTol));
  EXPECT_FALSE(point_segment_within(make_point({3, 4}), seg(0, 0, 0, 0), Radius(4.99), kTol));
}

TEST(PointSegmentWithin, Errors) {
  EXPECT_THROW(point_segment_within(make_point({NAN, 0}), seg(0, 0, 1, 0), Radius(1), kTol),
               InputError);
  EXPECT_THROW(point_segment_within(make_point({0, 0, 0}), seg(0, 0, 1, 0), Radius(1), kTol),
               DimensionError);
}

TEST(LineBall, Examples) {
  expect_interval(line_ball_intersection(seg(0, 0, 1, 0), make_point({0.5, 0}), Radius(0.5), kTol), 0, 1);
  EXPECT_FALSE(line_ball_intersection(seg(0, 0, 1, 0), make_point({0.5, 1}), Radius(0.5), kTol));
  expect_interval(line_ball_intersection(seg(0, 0, 1, 0), make_point({0, 0}), Radius(1), kTol), -1, 1);
}

TEST(LineBall, DegenerateCarrierThrows) {
  EXPECT_THROW(line_ball_intersection(seg(1, 1, 1, 1), make_point({0, 0}), Radius(1), kTol),
               InputError);
}

TEST(LineCappedCylinder, Examples) {
  expect_interval(line_capped_cylinder_intersection(seg(-2, 0, 2, 0), seg(0, 0, 0, 1), Radius(1), kTol),
                  0.25, 0.75);
  EXPECT_FALSE(line_capped_cylinder_intersection(seg(-2, 2, 2, 2), seg(0, 0, 0, 1), Radius(1), kTol));
  EXPECT_THROW(line_capped_cylinder_intersection(seg(-2, 0, 2, 0), seg(0, 0, 0, 0), Radius(1), kTol),
               InputError);
}

// Dense sampling of the diagonal carrier against the capped cylinder of the x-axis edge.
TEST(LineCappedCylinder, MatchesSampledMembership) {
  const Segment carrier = seg(-1, -1, 2, 2);
  const Segment axis = seg(0, 0, 1, 0);
  const auto got = line_capped_cylinder_intersection(carrier, axis, Radius(0.5), kTol);
  ASSERT_TRUE(got);
  double lo = INFINITY, hi = -INFINITY;
  const int n = 100000;
  for (int s = 0; s <= n; ++s) {
    const double t = -1.0 + 3.0 * s / n;
    const Point v = carrier.at(t);
    // Foot on the axis and perpendicular distance within the radius.
    if (v[0] >= 0 && v[0] <= 1 && std::abs(v[1]) <= 0.5) {
      lo = std::min(lo, t);
      hi = std::max(hi, t);
    }
  }
  EXPECT_NEAR(got->lo, lo, 1e-4);
  EXPECT_NEAR(got->hi, hi, 1e-4);
}

TEST(LineStadium, Examples) {
  // x in [-1, 2] on the carrier x = -3 + 6t.
  expect_interval(line_stadium_intersection(seg(-3, 0, 3, 0), seg(0, 0, 1, 0), Radius(1), kTol),
                  2.0 / 6.0, 5.0 / 6.0);
  EXPECT_FALSE(line_stadium_intersection(seg(0, 2, 1, 2), seg(0, 0, 1, 0), Radius(1), kTol));
}

TEST(LineStadium, DegenerateEdgeEqualsBall) {
  testgen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Segment carrier = testgen::random_segment(rng);
    const Point c = testgen::random_point(rng, 2);
    const Radius r(testgen::uniform(rng, 0.0, 0.7));
    const auto a = line_stadium_intersection(carrier, Segment(c, c), r, kTol);
    const auto b = line_ball_intersection(carrier, c, r, kTol);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) {
      EXPECT_DOUBLE_EQ(a->lo, b->lo);
      EXPECT_DOUBLE_EQ(a->hi, b->hi);
    }
  }
}

// Bisection on sampled stadium membership locates the interval ends.
TEST(LineStadium, MatchesBisectionOracle) {
  testgen::Rng rng(12);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Segment carrier = testgen::random_segment(rng);
    const Segment e = testgen::random_segment(rng);
    const double delta = testgen::uniform(rng, 0.05, 0.6);
    if (carrier.direction().norm() < 0.05) continue;
    const auto got = line_stadium_intersection(carrier, e, Radius(delta), kTol);
    const auto inside = [&](double t) { return point_segment_distance(carrier.at(t), e) <= delta; };
    // Coarse scan for any inside parameter.
    double seed = NAN;
    for (int s = 0; s <= 20000 && std::isnan(seed); ++s) {
      const double t = -50.0 + 100.0 * s / 20000;
      if (inside(t)) seed = t;
    }
    if (std::isnan(seed)) {
      EXPECT_FALSE(got.has_value());
      continue;
    }
    ASSERT_TRUE(got.has_value());
    const auto edge_of = [&](double out) {
      double a = out, b = seed;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        (inside(mid) ? b : a) = mid;
      }
      return b;
    };
    EXPECT_NEAR(got->lo, edge_of(-1e3), 1e-6);
    EXPECT_NEAR(got->hi, edge_of(1e3), 1e-6);
    ++checked;
  }
  EXPECT_GT(checked, 50);
}

TEST(LineDoubleStadium, Examples) {
  EXPECT_TRUE(line_double_stadium_intersects(seg(-3, 0, 3, 0), seg(0, 1, 0, -1), seg(0.5, 1, 0.5, -1),
                                             Radius(0.3), kTol));
  EXPECT_FALSE(line_double_stadium_intersects(seg(-3, 0, 3, 0), seg(0, 1, 0, 2), seg(0, -1, 0, -2),
                                              Radius(0.3), kTol));
}

TEST(LineDoubleStadium, MatchesParameterSweep) {
  testgen::Rng rng(13);
  int agree = 0, total = 0;
  for (int i = 0; i < 100; ++i) {
    const Segment carrier = testgen::random_segment(rng);
    const Segment e1 = testgen::random_segment(rng);
    const Segment e2 = testgen::random_segment(rng);
    const double delta = testgen::uniform(rng, 0.05, 0.5);
    if (carrier.direction().norm() < 0.05) continue;
    // Sweep with the smallest slack over both stadium memberships.
    double best = INFINITY;
    for (int s = 0; s <= 40000; ++s) {
      const double t = -20.0 + 40.0 * s / 40000;
      const Point v = carrier.at(t);
      best = std::min(best, std::max(point_segment_distance(v, e1), point_segment_distance(v, e2)));
    }
    const double step = 40.0 / 40000 * carrier.direction().norm();
    if (std::abs(best - delta) < step) continue;  // too close to call by sampling
    ++total;
    agree += line_double_stadium_intersects(carrier, e1, e2, Radius(delta), kTol) == (best <= delta);
  }
  EXPECT_EQ(agree, total);
  EXPECT_GT(total, 80);
}

TEST(SegmentIntersection, Examples) {
  const auto x = segment_segment_intersection(seg(0, 0, 1, 1), seg(0, 1, 1, 0), kTol);
  ASSERT_TRUE(std::holds_alternative<PointIntersection>(x));
  EXPECT_NEAR(std::get<PointIntersection>(x).t, 0.5, 1e-15);
  EXPECT_NEAR(std::get<PointIntersection>(x).location[0], 0.5, 1e-15);

  const auto o = segment_segment_intersection(seg(0, 0, 2, 0), seg(1, 0, 3, 0), kTol);
  ASSERT_TRUE(std::holds_alternative<OverlapIntersection>(o));
  EXPECT_EQ(std::get<OverlapIntersection>(o).from, make_point({1, 0}));
  EXPECT_EQ(std::get<OverlapIntersection>(o).to, make_point({2, 0}));

  EXPECT_TRUE(std::holds_alternative<NoIntersection>(
      segment_segment_intersection(seg(0, 0, 1, 0), seg(0, 1, 1, 1), kTol)));
}

TEST(SegmentIntersection, TouchingEndpointsAndDegenerate) {
  const auto t = segment_segment_intersection(seg(0, 0, 1, 0), seg(1, 0, 1, 1), kTol);
  ASSERT_TRUE(std::holds_alternative<PointIntersection>(t));
  EXPECT_NEAR(std::get<PointIntersection>(t).t, 1.0, 1e-15);
  const auto p = segment_segment_intersection(seg(0.5, 0, 0.5, 0), seg(0, 0, 1, 0), kTol);
  ASSERT_TRUE(std::holds_alternative<PointIntersection>(p));
  EXPECT_NEAR(std::get<PointIntersection>(p).u, 0.5, 1e-15);
  EXPECT_THROW(segment_segment_intersection(Segment(make_point({0, 0, 0}), make_point({1, 0, 0})),
                                            Segment(make_point({0, 0, 0}), make_point({1, 0, 0})), kTol),
               DimensionError);
}

TEST(SegmentIntersection, SymmetricOnRandomInputs) {
  testgen::Rng rng(14);
  for (int i = 0; i < 500; ++i) {
    const Segment e1 = testgen::random_segment(rng);
    const Segment e2 = testgen::random_segment(rng);
    const auto a = segment_segment_intersection(e1, e2, kTol);
    const auto b = segment_segment_intersection(e2, e1, kTol);
    ASSERT_EQ(a.index(), b.index());
    if (const auto* pa = std::get_if<PointIntersection>(&a)) {
      const auto& pb = std::get<PointIntersection>(b);
      EXPECT_LT((pa->location - pb.location).norm(), 1e-12);
      EXPECT_NEAR(pa->t, pb.u, 1e-12);
      EXPECT_NEAR(pa->u, pb.t, 1e-12);
    }
  }
  // Collinear overlaps report the same endpoint set in both orders.
  const auto a = std::get<OverlapIntersection>(segment_segment_intersection(seg(0, 0, 2, 2), seg(3, 3, 1, 1), kTol));
  const auto b = std::get<OverlapIntersection>(segment_segment_intersection(seg(3, 3, 1, 1), seg(0, 0, 2, 2), kTol));
  const bool same = (a.from == b.from && a.to == b.to) || (a.from == b.to && a.to == b.from);
  EXPECT_TRUE(same);
}

TEST(RaySegment, Examples) {
  EXPECT_TRUE(ray_segment_intersects(make_point({0, 0}), seg(1, -1, 1, 1), kTol));
  EXPECT_FALSE(ray_segment_intersects(make_point({2, 0}), seg(1, -1, 1, 1), kTol));
  EXPECT_TRUE(ray_segment_intersects(make_point({0, 0}), seg(1, 0, 3, 0), kTol));
  EXPECT_FALSE(ray_segment_intersects(make_point({4, 0}), seg(1, 0, 3, 0), kTol));
  EXPECT_TRUE(ray_segment_intersects(make_point({0, 0}), seg(1, 0, 2, 1), kTol));  // grazes an endpoint
  EXPECT_THROW(ray_segment_intersects(make_point({0, 0, 0}), seg(1, 0, 2, 1), kTol), DimensionError);
}

TEST(OrderOnLine, Examples) {
  const Segment c = seg(0, 0, 1, 0);
  EXPECT_EQ(order_on_line(c, 0.2, 0.7, kTol), Order::before);
  EXPECT_EQ(order_on_line(c, 0.7, 0.2, kTol), Order::after);
  EXPECT_EQ(order_on_line(c, 0.5, 0.5, kTol), Order::equal);
  EXPECT_EQ(order_on_line(c, 0.5 + kTol.eps() / 10, 0.5, kTol), Order::equal);
  EXPECT_THROW(order_on_line(seg(0, 0, 0, 0), 0.1, 0.2, kTol), InputError);
}

TEST(IntervalsCover, GapsAndTouching) {
  EXPECT_TRUE(intervals_cover({{0.0, 0.5}, {0.5, 1.0}}, 0.0, 1.0, kTol));
  EXPECT_TRUE(intervals_cover({{0.4, 1.2}, {-0.1, 0.45}}, 0.0, 1.0, kTol));
  EXPECT_FALSE(intervals_cover({{0.0, 0.4}, {0.5, 1.0}}, 0.0, 1.0, kTol));
  EXPECT_FALSE(intervals_cover({}, 0.0, 1.0, kTol));
  EXPECT_FALSE(intervals_cover({{0.1, 1.0}}, 0.0, 1.0, kTol));
}

// Properties over random inputs.

TEST(GeometryProperties, StadiumDecomposition) {
  testgen::Rng rng(21);
  for (int i = 0; i < 2000; ++i) {
    const Point v = testgen::random_point(rng, 2, -0.5, 1.5);
    const Segment e = testgen::random_segment(rng);
    const Radius r(testgen::uniform(rng, 0.0, 0.8));
    const bool combined = point_segment_within(v, e, r, kTol);
    const bool parts = point_in_ball(v, e.a, r, kTol) || point_in_ball(v, e.b, r, kTol) ||
                       (!e.degenerate() && point_in_capped_cylinder(v, e, r, kTol));
    EXPECT_EQ(combined, parts);
  }
}

TEST(GeometryProperties, IntervalSoundness) {
  testgen::Rng rng(22);
  const double eps = 1e-7;
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const Segment carrier = testgen::random_segment(rng);
    const Segment e = testgen::random_segment(rng);
    const double delta = testgen::uniform(rng, 0.05, 0.6);
    if (carrier.direction().norm() < 0.1 || e.direction().norm() < 0.1) continue;
    const auto check = [&](const MaybeInterval& iv, const std::function<double(const Point&)>& dist) {
      if (!iv || iv->length() < 1e-4) return;  // skip tangent instances
      EXPECT_LE(dist(carrier.at(iv->lo + eps)), delta + 1e-9);
      EXPECT_LE(dist(carrier.at(0.5 * (iv->lo + iv->hi))), delta + 1e-9);
      EXPECT_LE(dist(carrier.at(iv->hi - eps)), delta + 1e-9);
      EXPECT_GT(dist(carrier.at(iv->lo - 10 * eps)), delta);
      EXPECT_GT(dist(carrier.at(iv->hi + 10 * eps)), delta);
      ++checked;
    };
    check(line_ball_intersection(carrier, e.a, Radius(delta), kTol),
          [&](const Point& v) { return (v - e.a).norm(); });
    check(line_stadium_intersection(carrier, e, Radius(delta), kTol),
          [&](const Point& v) { return point_segment_distance(v, e); });
    check(line_capped_cylinder_intersection(carrier, e, Radius(delta), kTol), [&](const Point& v) {
      const double t = (v - e.a).dot(e.direction()) / e.direction().squaredNorm();
      if (t < 0 || t > 1) return std::numeric_limits<double>::infinity();
      return (e.at(t) - v).norm();
    });
  }
  EXPECT_GT(checked, 300);
}

TEST(GeometryProperties, MonotoneInDelta) {
  testgen::Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    const Segment carrier = testgen::random_segment(rng);
    const Segment e = testgen::random_segment(rng);
    if (carrier.degenerate() || e.degenerate()) continue;
    const double d1 = testgen::uniform(rng, 0.0, 0.5);
    const double d2 = d1 + testgen::uniform(rng, 0.0, 0.5);
    const auto a = line_stadium_intersection(carrier, e, Radius(d1), kTol);
    const auto b = line_stadium_intersection(carrier, e, Radius(d2), kTol);
    if (a) {
      ASSERT_TRUE(b);
      EXPECT_LE(b->lo, a->lo);
      EXPECT_GE(b->hi, a->hi);
    }
    const auto c1 = line_capped_cylinder_intersection(carrier, e, Radius(d1), kTol);
    const auto c2 = line_capped_cylinder_intersection(carrier, e, Radius(d2), kTol);
    if (c1) {
      ASSERT_TRUE(c2);
      EXPECT_LE(c2->lo, c1->lo + 1e-12);
      EXPECT_GE(c2->hi, c1->hi - 1e-12);
    }
    const Point v = testgen::random_point(rng, 2);
    if (point_segment_within(v, e, Radius(d1), kTol)) {
      EXPECT_TRUE(point_segment_within(v, e, Radius(d2), kTol));
    }
  }
}
