#ifndef ELASTIC_CURVES_HPP
#define ELASTIC_CURVES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "elastic/geometry.hpp"

namespace elastic {

/// Polygonal curve in R^d given by m >= 1 vertices. Consecutive duplicates
/// are allowed and produce degenerate edges.
class PolygonalCurve {
 public:
  PolygonalCurve() = default;
  explicit PolygonalCurve(std::vector<Point> vertices);

  std::size_t size() const { return vertices_.size(); }
  int dim() const { return vertices_.empty() ? 0 : static_cast<int>(vertices_.front().size()); }
  const Point& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<Point>& vertices() const { return vertices_; }

  /// Edges p_i p_{i+1}; a single-vertex curve has one degenerate edge.
  std::size_t edge_count() const { return vertices_.size() == 1 ? 1 : vertices_.size() - 1; }
  Segment edge(std::size_t i) const;

  /// Each edge split into `factor` equal pieces.
  PolygonalCurve refined(std::size_t factor) const;

  friend bool operator==(const PolygonalCurve& x, const PolygonalCurve& y);

 private:
  std::vector<Point> vertices_;
};

PolygonalCurve make_curve(std::initializer_list<std::initializer_list<double>> vertices);

/// Monotone alignment (1,1) -> (m,k); indices are 1-based.
struct WarpingPath {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  bool valid_for(std::size_t m, std::size_t k) const;
  friend bool operator==(const WarpingPath&, const WarpingPath&) = default;
};

enum class Margin { robust, near_boundary };

struct DecisionResult {
  bool verdict = false;
  Margin margin = Margin::robust;
};

std::string to_string(Margin margin);

/// Runs decide_once under both biases. The verdict is the lenient result.
template <class Decide>
DecisionResult decide_with_margin(const Tolerance& tol, Decide&& decide_once) {
  const bool lenient = decide_once(tol.with_bias(Bias::lenient));
  const bool strict = decide_once(tol.with_bias(Bias::strict));
  return {lenient, lenient == strict ? Margin::robust : Margin::near_boundary};
}

// Predicates on the edges and vertices of a curve pair.

/// Some point of edgeP within delta of qi. P2 is the same test with the roles swapped.
bool predicate_p1(const Segment& edge_p, const Point& qi, Radius delta, const Tolerance& tol);
bool predicate_p2(const Segment& edge_q, const Point& pj, Radius delta, const Tolerance& tol);

/// l(edgeQ) meets the double stadium of e1 and e2. P4 swaps the curves.
bool predicate_p3(const Segment& edge_q, const Segment& e1, const Segment& e2, Radius delta,
                  const Tolerance& tol);
bool predicate_p4(const Segment& edge_p, const Segment& e1, const Segment& e2, Radius delta,
                  const Tolerance& tol);

/// (|p_1 - q_1| <= delta, |p_m - q_k| <= delta)
std::pair<bool, bool> predicate_p5_p6(const PolygonalCurve& p, const PolygonalCurve& q,
                                      Radius delta, const Tolerance& tol);

/// Points a1 before-or-at a2 on the directed line of edgeQ with a1 near pj and a2 near pt.
bool predicate_p7(const Point& pj, const Point& pt, const Segment& edge_q, Radius delta,
                  const Tolerance& tol);
bool predicate_p8(const Point& qi, const Point& qt, const Segment& edge_p, Radius delta,
                  const Tolerance& tol);

// Continuous deciders. Each runs under both tolerance biases; the verdict is
// the lenient one and the margin records whether the strict run disagreed.

DecisionResult decide_directed_hausdorff_curve(const PolygonalCurve& p, const PolygonalCurve& q,
                                               Radius delta, const Tolerance& tol = Tolerance());
DecisionResult decide_hausdorff_curve(const PolygonalCurve& p, const PolygonalCurve& q,
                                      Radius delta, const Tolerance& tol = Tolerance());
DecisionResult decide_frechet(const PolygonalCurve& p, const PolygonalCurve& q, Radius delta,
                              const Tolerance& tol = Tolerance());
DecisionResult decide_weak_frechet(const PolygonalCurve& p, const PolygonalCurve& q, Radius delta,
                                   const Tolerance& tol = Tolerance());

// Discrete measures on the vertex sequences.

double discrete_hausdorff(const PolygonalCurve& p, const PolygonalCurve& q);
double discrete_frechet(const PolygonalCurve& p, const PolygonalCurve& q);

struct DtwResult {
  double value = 0.0;  // sum of squared distances, no final square root
  WarpingPath path;
};

/// Dynamic time warping with squared Euclidean costs. Ties in the backtrack
/// prefer the diagonal step, then advancing i, then advancing j.
DtwResult dtw(const PolygonalCurve& p, const PolygonalCurve& q);

class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive minimum over all warping paths. Refuses m + k > 14.
double dtw_bruteforce(const PolygonalCurve& p, const PolygonalCurve& q);

/// Cost of an explicit warping path, summed from (1,1) onwards.
double warping_cost(const PolygonalCurve& p, const PolygonalCurve& q, const WarpingPath& path);

enum class CurveMeasure { hausdorff, frechet, weak_frechet };

DecisionResult decide(CurveMeasure measure, const PolygonalCurve& p, const PolygonalCurve& q,
                      Radius delta, const Tolerance& tol = Tolerance());

/// Bisection on the decider over [0, max pairwise vertex distance].
double compute_distance(const PolygonalCurve& p, const PolygonalCurve& q, CurveMeasure measure,
                        const Tolerance& tol = Tolerance());

double max_vertex_distance(const std::vector<Point>& p, const std::vector<Point>& q);

}  // namespace elastic

#endif  // ELASTIC_CURVES_HPP
