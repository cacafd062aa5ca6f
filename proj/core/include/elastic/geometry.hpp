#ifndef ELASTIC_GEOMETRY_HPP
#define ELASTIC_GEOMETRY_HPP

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace elastic {

/// A point in R^d. Region code works with d = 2.
using Point = Eigen::VectorXd;

Point make_point(std::initializer_list<double> coords);

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Closed segment from a to b. a == b is a legal degenerate segment.
struct Segment {
  Point a;
  Point b;

  Segment() = default;
  Segment(Point from, Point to);

  int dim() const { return static_cast<int>(a.size()); }
  bool degenerate() const { return a == b; }
  Point direction() const { return b - a; }
  /// Point on the supporting line at parameter t (a at 0, b at 1).
  Point at(double t) const { return a + t * (b - a); }
};

/// Closed interval of line parameters, lo <= hi.
struct ParamInterval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double t) const { return lo <= t && t <= hi; }
  friend bool operator==(const ParamInterval&, const ParamInterval&) = default;
};

using MaybeInterval = std::optional<ParamInterval>;

/// Non-negative finite radius of a metric ball.
class Radius {
 public:
  explicit Radius(double value);
  double value() const { return value_; }

 private:
  double value_;
};

enum class Bias {
  lenient,  // values inside the band count as satisfying "<="
  strict,   // values inside the band count as violating "<="
};

/// Tolerance band for sign decisions.
///
/// A distance comparison a <= delta is decided by a <= delta + eps*scale
/// (lenient) or a < delta - eps*scale (strict), where scale is the magnitude
/// of the geometry being compared. Incidence and parameter comparisons
/// always accept values inside the band. Deciders run both biases and report a near-boundary
/// margin when they disagree.
class Tolerance {
 public:
  static constexpr double kDefaultEps = 1e-9;

  explicit Tolerance(double eps = kDefaultEps, Bias bias = Bias::lenient);

  double eps() const { return eps_; }
  Bias bias() const { return bias_; }
  Tolerance with_bias(Bias bias) const { return Tolerance(eps_, bias); }

  double band(double scale) const { return eps_ * scale; }
  bool leq(double a, double b, double scale) const;
  /// a <= b within eps * max(1, |a|, |b|). Used for line parameters and other
  /// topological comparisons, so it ignores the bias: only radii move with it.
  bool param_leq(double a, double b) const;
  /// Radius shifted outward (lenient) or inward (strict) by the band.
  double effective_radius(double delta, double scale) const;

 private:
  double eps_;
  Bias bias_;
};

/// Nesting depth of radicals in a coordinate expression.
enum class RootType { rational = 1, single_radical = 2, nested_radical = 3 };

enum class Order { before, equal, after };

double distance(const Point& p, const Point& q);
double point_segment_distance(const Point& v, const Segment& e);
/// Parameter of the closest point of e to v, clamped to [0, 1].
double closest_param(const Point& v, const Segment& e);

/// Magnitude used to scale tolerance bands: max |coordinate| over the points and delta.
double geometric_scale(std::initializer_list<const Point*> points, double delta = 0.0);

void require_finite(const Point& p, const char* what);
void require_same_dim(const Point& p, const Point& q);

bool point_in_ball(const Point& v, const Point& center, Radius delta, const Tolerance& tol);
/// v in R_delta(axis): within delta of the supporting line with the foot on the segment.
bool point_in_capped_cylinder(const Point& v, const Segment& axis, Radius delta,
                              const Tolerance& tol);
/// Stadium membership: exists u in e with |u - v| <= delta.
bool point_segment_within(const Point& v, const Segment& e, Radius delta, const Tolerance& tol);

MaybeInterval line_ball_intersection(const Segment& carrier, const Point& center, Radius delta,
                                     const Tolerance& tol);
MaybeInterval line_capped_cylinder_intersection(const Segment& carrier, const Segment& axis,
                                                Radius delta, const Tolerance& tol);
/// Intersection of the carrier's line with the stadium D_delta(e); e may be degenerate.
MaybeInterval line_stadium_intersection(const Segment& carrier, const Segment& e, Radius delta,
                                        const Tolerance& tol);
bool line_double_stadium_intersects(const Segment& carrier, const Segment& e1, const Segment& e2,
                                    Radius delta, const Tolerance& tol);

struct NoIntersection {
  friend bool operator==(const NoIntersection&, const NoIntersection&) = default;
};

struct PointIntersection {
  Point location;
  double t = 0.0;  // parameter on the first segment
  double u = 0.0;  // parameter on the second segment
};

/// Collinear overlap; endpoints are taken from the four input endpoints.
struct OverlapIntersection {
  Point from;
  Point to;
  double t_from = 0.0;  // parameters on the first segment, t_from < t_to
  double t_to = 0.0;
};

using SegmentIntersection = std::variant<NoIntersection, PointIntersection, OverlapIntersection>;

SegmentIntersection segment_segment_intersection(const Segment& e1, const Segment& e2,
                                                 const Tolerance& tol);

/// Does the horizontal ray {(x, v.y) : x >= v.x} meet e?
bool ray_segment_intersects(const Point& v, const Segment& e, const Tolerance& tol);

/// Does the union of intervals cover [lo, hi] without gaps wider than the band?
bool intervals_cover(std::vector<ParamInterval> intervals, double lo, double hi,
                     const Tolerance& tol);

/// Clip to [0, 1]; empty when the interval misses [0, 1] beyond the band.
MaybeInterval clip_to_unit(const MaybeInterval& interval, const Tolerance& tol);

Order order_on_line(const Segment& carrier, double t1, double t2, const Tolerance& tol);

std::string to_string(Order order);

}  // namespace elastic

#endif  // ELASTIC_GEOMETRY_HPP
