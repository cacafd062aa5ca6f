#include "elastic/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace elastic {

namespace {

double cross2(const Point& u, const Point& v) { return u[0] * v[1] - u[1] * v[0]; }

void require_planar(const Segment& e) {
  if (e.dim() != 2) {
    throw DimensionError("planar operation on a segment of dimension " + std::to_string(e.dim()));
  }
}

void require_carrier(const Segment& carrier) {
  if (carrier.degenerate()) {
    throw InputError("carrier segment is degenerate; its supporting line is undefined");
  }
}

// A radius that the strict bias has shrunk to nothing contains no point at all.
bool radius_is_empty(double r, const Tolerance& tol) {
  return r < 0.0 || (tol.bias() == Bias::strict && r <= 0.0);
}

// Line parameters of l(carrier) within distance r of center.
MaybeInterval ball_interval(const Segment& carrier, const Point& center, double r,
                            const Tolerance& tol) {
  if (radius_is_empty(r, tol)) return std::nullopt;
  const Point dir = carrier.direction();
  const Point w = carrier.a - center;
  const double len2 = dir.squaredNorm();
  // Expand around the foot of the perpendicular; this is the quadratic
  // t^2 + a t + b <= 0 with the linear term completed.
  const double foot = -w.dot(dir) / len2;
  const double h2 = (w + foot * dir).squaredNorm();
  const double slack = r * r - h2;
  if (slack < 0.0) return std::nullopt;
  const double half = std::sqrt(slack / len2);
  return ParamInterval{foot - half, foot + half};
}

MaybeInterval capped_cylinder_interval(const Segment& carrier, const Segment& axis, double r,
                                       const Tolerance& tol) {
  if (radius_is_empty(r, tol)) return std::nullopt;
  const Point dir = carrier.direction();
  const Point w = axis.direction();
  const double w2 = w.squaredNorm();
  const Point rel = carrier.a - axis.a;

  // Slab between the hyperplanes P(uv) and P(vu): foot parameter s(t) in [0, 1].
  const double s0 = rel.dot(w) / w2;
  const double s1 = dir.dot(w) / w2;
  ParamInterval slab{-std::numeric_limits<double>::infinity(),
                     std::numeric_limits<double>::infinity()};
  if (s1 == 0.0) {
    if (!tol.param_leq(0.0, s0) || !tol.param_leq(s0, 1.0)) return std::nullopt;
  } else {
    const double ta = -s0 / s1;
    const double tb = (1.0 - s0) / s1;
    slab = {std::min(ta, tb), std::max(ta, tb)};
  }

  // Distance to the axis line: |r0 + t r1|.
  const Point r0 = rel - s0 * w;
  const Point r1 = dir - s1 * w;
  const double r1sq = r1.squaredNorm();
  ParamInterval tube = slab;
  if (r1sq <= 1e-30 * dir.squaredNorm()) {
    if (r0.squaredNorm() > r * r) return std::nullopt;
  } else {
    const double foot = -r0.dot(r1) / r1sq;
    const double h2 = (r0 + foot * r1).squaredNorm();
    const double slack = r * r - h2;
    if (slack < 0.0) return std::nullopt;
    const double half = std::sqrt(slack / r1sq);
    tube = {foot - half, foot + half};
  }

  const double lo = std::max(slab.lo, tube.lo);
  const double hi = std::min(slab.hi, tube.hi);
  if (!(lo <= hi)) return std::nullopt;
  return ParamInterval{lo, hi};
}

MaybeInterval hull(const MaybeInterval& x, const MaybeInterval& y) {
  if (!x) return y;
  if (!y) return x;
  return ParamInterval{std::min(x->lo, y->lo), std::max(x->hi, y->hi)};
}

MaybeInterval stadium_interval(const Segment& carrier, const Segment& e, double r,
                               const Tolerance& tol) {
  auto result = ball_interval(carrier, e.a, r, tol);
  if (e.degenerate()) return result;
  result = hull(result, ball_interval(carrier, e.b, r, tol));
  return hull(result, capped_cylinder_interval(carrier, e, r, tol));
}

void require_finite_segment(const Segment& e) {
  require_finite(e.a, "segment endpoint");
  require_finite(e.b, "segment endpoint");
}

}  // namespace

Point make_point(std::initializer_list<double> coords) {
  Point p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (double c : coords) p[i++] = c;
  return p;
}

Segment::Segment(Point from, Point to) : a(std::move(from)), b(std::move(to)) {
  require_same_dim(a, b);
}

Radius::Radius(double value) : value_(value) {
  if (!std::isfinite(value) || value < 0.0) {
    throw InputError("radius must be finite and non-negative, got " + std::to_string(value));
  }
}

Tolerance::Tolerance(double eps, Bias bias) : eps_(eps), bias_(bias) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw InputError("tolerance must lie in (0, 1), got " + std::to_string(eps));
  }
}

bool Tolerance::leq(double a, double b, double scale) const {
  const double band = eps_ * scale;
  return bias_ == Bias::lenient ? a <= b + band : a < b - band;
}

bool Tolerance::param_leq(double a, double b) const {
  return a <= b + eps_ * std::max({1.0, std::abs(a), std::abs(b)});
}

double Tolerance::effective_radius(double delta, double scale) const {
  const double band = eps_ * scale;
  return bias_ == Bias::lenient ? delta + band : delta - band;
}

double distance(const Point& p, const Point& q) { return (p - q).norm(); }

double closest_param(const Point& v, const Segment& e) {
  const Point dir = e.direction();
  const double len2 = dir.squaredNorm();
  if (len2 == 0.0) return 0.0;
  return std::clamp((v - e.a).dot(dir) / len2, 0.0, 1.0);
}

double point_segment_distance(const Point& v, const Segment& e) {
  return (e.at(closest_param(v, e)) - v).norm();
}

double geometric_scale(std::initializer_list<const Point*> points, double delta) {
  double scale = std::abs(delta);
  for (const Point* p : points) {
    if (p->size() > 0) scale = std::max(scale, p->cwiseAbs().maxCoeff());
  }
  return scale;
}

void require_finite(const Point& p, const char* what) {
  if (!p.allFinite()) throw InputError(std::string(what) + " has a non-finite coordinate");
}

void require_same_dim(const Point& p, const Point& q) {
  if (p.size() != q.size()) {
    throw DimensionError("dimension mismatch: " + std::to_string(p.size()) + " vs " +
                         std::to_string(q.size()));
  }
}

bool point_in_ball(const Point& v, const Point& center, Radius delta, const Tolerance& tol) {
  require_same_dim(v, center);
  require_finite(v, "point");
  require_finite(center, "ball center");
  const double scale = geometric_scale({&v, &center}, delta.value());
  return tol.leq(distance(v, center), delta.value(), scale);
}

bool point_in_capped_cylinder(const Point& v, const Segment& axis, Radius delta,
                              const Tolerance& tol) {
  require_same_dim(v, axis.a);
  require_finite(v, "point");
  require_finite_segment(axis);
  if (axis.degenerate()) return point_in_ball(v, axis.a, delta, tol);
  const Point w = axis.direction();
  const double s = (v - axis.a).dot(w) / w.squaredNorm();
  if (!tol.param_leq(0.0, s) || !tol.param_leq(s, 1.0)) return false;
  const double scale = geometric_scale({&v, &axis.a, &axis.b}, delta.value());
  return tol.leq((axis.a + s * w - v).norm(), delta.value(), scale);
}

bool point_segment_within(const Point& v, const Segment& e, Radius delta, const Tolerance& tol) {
  require_same_dim(v, e.a);
  require_finite(v, "point");
  require_finite_segment(e);
  const double scale = geometric_scale({&v, &e.a, &e.b}, delta.value());
  return tol.leq(point_segment_distance(v, e), delta.value(), scale);
}

MaybeInterval line_ball_intersection(const Segment& carrier, const Point& center, Radius delta,
                                     const Tolerance& tol) {
  require_same_dim(carrier.a, center);
  require_finite_segment(carrier);
  require_finite(center, "ball center");
  require_carrier(carrier);
  const double scale = geometric_scale({&carrier.a, &carrier.b, &center}, delta.value());
  return ball_interval(carrier, center, tol.effective_radius(delta.value(), scale), tol);
}

MaybeInterval line_capped_cylinder_intersection(const Segment& carrier, const Segment& axis,
                                                Radius delta, const Tolerance& tol) {
  require_same_dim(carrier.a, axis.a);
  require_finite_segment(carrier);
  require_finite_segment(axis);
  require_carrier(carrier);
  if (axis.degenerate()) throw InputError("capped cylinder axis is degenerate");
  const double scale =
      geometric_scale({&carrier.a, &carrier.b, &axis.a, &axis.b}, delta.value());
  return capped_cylinder_interval(carrier, axis, tol.effective_radius(delta.value(), scale), tol);
}

MaybeInterval line_stadium_intersection(const Segment& carrier, const Segment& e, Radius delta,
                                        const Tolerance& tol) {
  require_same_dim(carrier.a, e.a);
  require_finite_segment(carrier);
  require_finite_segment(e);
  require_carrier(carrier);
  const double scale = geometric_scale({&carrier.a, &carrier.b, &e.a, &e.b}, delta.value());
  return stadium_interval(carrier, e, tol.effective_radius(delta.value(), scale), tol);
}

bool line_double_stadium_intersects(const Segment& carrier, const Segment& e1, const Segment& e2,
                                    Radius delta, const Tolerance& tol) {
  const auto first = line_stadium_intersection(carrier, e1, delta, tol);
  if (!first) return false;
  const auto second = line_stadium_intersection(carrier, e2, delta, tol);
  if (!second) return false;
  return tol.param_leq(first->lo, second->hi) && tol.param_leq(second->lo, first->hi);
}

SegmentIntersection segment_segment_intersection(const Segment& e1, const Segment& e2,
                                                 const Tolerance& tol) {
  require_planar(e1);
  require_planar(e2);
  require_finite_segment(e1);
  require_finite_segment(e2);
  const double scale = geometric_scale({&e1.a, &e1.b, &e2.a, &e2.b});

  if (e1.degenerate() || e2.degenerate()) {
    // A point against a segment (or a point).
    const bool first_is_point = e1.degenerate();
    const Segment& dot = first_is_point ? e1 : e2;
    const Segment& other = first_is_point ? e2 : e1;
    if (point_segment_distance(dot.a, other) > tol.band(scale)) return NoIntersection{};
    const double s = closest_param(dot.a, other);
    if (first_is_point) return PointIntersection{dot.a, 0.0, s};
    return PointIntersection{dot.a, s, 0.0};
  }

  const Point r = e1.direction();
  const Point s = e2.direction();
  const Point qp = e2.a - e1.a;
  const double denom = cross2(r, s);
  const double rn = r.norm();
  const double sn = s.norm();

  if (std::abs(denom) > tol.eps() * rn * sn) {
    const double t = cross2(qp, s) / denom;
    const double u = cross2(qp, r) / denom;
    if (!tol.param_leq(0.0, t) || !tol.param_leq(t, 1.0) || !tol.param_leq(0.0, u) ||
        !tol.param_leq(u, 1.0)) {
      return NoIntersection{};
    }
    const double tc = std::clamp(t, 0.0, 1.0);
    return PointIntersection{e1.at(tc), tc, std::clamp(u, 0.0, 1.0)};
  }

  // Parallel: either disjoint or on a common line.
  if (std::abs(cross2(qp, r)) > tol.band(scale) * rn) return NoIntersection{};

  const double r2 = r.squaredNorm();
  const double ta = qp.dot(r) / r2;
  const double tb = (e2.b - e1.a).dot(r) / r2;
  const double lo = std::max(0.0, std::min(ta, tb));
  const double hi = std::min(1.0, std::max(ta, tb));
  if (!tol.param_leq(lo, hi)) return NoIntersection{};

  // e2's endpoints ordered along e1.
  const bool forward = ta <= tb;
  const Point& near_end = forward ? e2.a : e2.b;
  const Point& far_end = forward ? e2.b : e2.a;
  const double t_near = std::min(ta, tb);
  const double t_far = std::max(ta, tb);

  if (std::abs(hi - lo) <= tol.eps() * std::max(1.0, std::abs(lo))) {
    const double t = std::clamp(lo, 0.0, 1.0);
    const Point where = e1.at(t);
    return PointIntersection{where, t, closest_param(where, e2)};
  }

  OverlapIntersection overlap;
  if (t_near <= 0.0) {
    overlap.from = e1.a;
    overlap.t_from = 0.0;
  } else {
    overlap.from = near_end;
    overlap.t_from = t_near;
  }
  if (t_far >= 1.0) {
    overlap.to = e1.b;
    overlap.t_to = 1.0;
  } else {
    overlap.to = far_end;
    overlap.t_to = t_far;
  }
  return overlap;
}

bool ray_segment_intersects(const Point& v, const Segment& e, const Tolerance& tol) {
  require_planar(e);
  if (v.size() != 2) throw DimensionError("ray origin must be planar");
  require_finite(v, "ray origin");
  require_finite_segment(e);
  const double scale = geometric_scale({&v, &e.a, &e.b});
  const Point& p = e.a;
  const Point& q = e.b;

  if (std::abs(p[1] - q[1]) <= tol.band(scale)) {
    // Horizontal edge: only hit when it lies on the ray's line.
    if (std::abs(v[1] - p[1]) > tol.band(scale)) return false;
    return v[0] <= std::max(p[0], q[0]) + tol.band(scale);
  }

  const double t = (v[1] - p[1]) / (q[1] - p[1]);
  if (!tol.param_leq(0.0, t) || !tol.param_leq(t, 1.0)) return false;
  const double x = p[0] + t * (q[0] - p[0]);
  return v[0] <= x + tol.band(scale);
}

bool intervals_cover(std::vector<ParamInterval> intervals, double lo, double hi,
                     const Tolerance& tol) {
  std::sort(intervals.begin(), intervals.end(),
            [](const ParamInterval& x, const ParamInterval& y) { return x.lo < y.lo; });
  double reach = lo;
  bool started = false;
  for (const auto& piece : intervals) {
    if (!tol.param_leq(piece.lo, reach)) break;
    started = true;
    reach = std::max(reach, piece.hi);
    if (tol.param_leq(hi, reach)) return true;
  }
  return started && tol.param_leq(hi, reach);
}

MaybeInterval clip_to_unit(const MaybeInterval& interval, const Tolerance& tol) {
  if (!interval) return std::nullopt;
  if (!tol.param_leq(interval->lo, 1.0) || !tol.param_leq(0.0, interval->hi)) return std::nullopt;
  return ParamInterval{std::clamp(interval->lo, 0.0, 1.0), std::clamp(interval->hi, 0.0, 1.0)};
}

Order order_on_line(const Segment& carrier, double t1, double t2, const Tolerance& tol) {
  require_carrier(carrier);
  if (!std::isfinite(t1) || !std::isfinite(t2)) throw InputError("non-finite line parameter");
  const double band = tol.eps() * std::max({1.0, std::abs(t1), std::abs(t2)});
  if (std::abs(t1 - t2) <= band) return Order::equal;
  return t1 < t2 ? Order::before : Order::after;
}

std::string to_string(Order order) {
  switch (order) {
    case Order::before:
      return "before";
    case Order::equal:
      return "equal";
    case Order::after:
      return "after";
  }
  return "unknown";
}

}  // namespace elastic
