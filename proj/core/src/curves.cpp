#include "elastic/curves.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <limits>

namespace elastic {

namespace {

void require_compatible(const PolygonalCurve& p, const PolygonalCurve& q) {
  if (p.size() == 0 || q.size() == 0) throw InputError("curves need at least one vertex");
  if (p.dim() != q.dim()) {
    throw DimensionError("curve dimensions differ: " + std::to_string(p.dim()) + " vs " +
                         std::to_string(q.dim()));
  }
}

// Vertex list with a single vertex doubled so that every curve has an edge.
std::vector<Point> with_edge(const PolygonalCurve& c) {
  std::vector<Point> v = c.vertices();
  if (v.size() == 1) v.push_back(v.front());
  return v;
}

// Parameters of edge e within delta of x, clipped to [0, 1]. Cell-boundary
// free interval of the free-space diagram.
MaybeInterval free_interval(const Point& x, const Segment& e, Radius delta, const Tolerance& tol) {
  if (e.degenerate()) {
    if (point_in_ball(x, e.a, delta, tol)) return ParamInterval{0.0, 1.0};
    return std::nullopt;
  }
  return clip_to_unit(line_ball_intersection(e, x, delta, tol), tol);
}

bool directed_hausdorff_once(const PolygonalCurve& p, const PolygonalCurve& q, Radius delta,
                             const Tolerance& tol) {
  std::vector<Segment> q_edges;
  for (std::size_t j = 0; j < q.edge_count(); ++j) q_edges.push_back(q.edge(j));

  std::vector<ParamInterval> cover;
  for (std::size_t i = 0; i < p.edge_count(); ++i) {
    const Segment e = p.edge(i);
    if (e.degenerate()) {
      const bool near = std::any_of(q_edges.begin(), q_edges.end(), [&](const Segment& f) {
        return point_segment_within(e.a, f, delta, tol);
      });
      if (!near) return false;
      continue;
    }
    cover.clear();
    for (const auto& f : q_edges) {
      if (auto piece = clip_to_unit(line_stadium_intersection(e, f, delta, tol), tol)) {
        cover.push_back(*piece);
      }
    }
    if (!intervals_cover(cover, 0.0, 1.0, tol)) return false;
  }
  return true;
}

// Free-space diagram of two curves with at least two vertices each.
struct FreeSpace {
  std::size_t m = 0;
  std::size_t k = 0;
  // vertical[i][j]: p_i against Q-edge j, parameter along Q.
  std::vector<std::vector<MaybeInterval>> vertical;
  // horizontal[i][j]: q_j against P-edge i, parameter along P.
  std::vector<std::vector<MaybeInterval>> horizontal;
  bool start_free = false;
  bool end_free = false;
};

FreeSpace build_free_space(const PolygonalCurve& pc, const PolygonalCurve& qc, Radius delta,
                           const Tolerance& tol) {
  const std::vector<Point> p = with_edge(pc);
  const std::vector<Point> q = with_edge(qc);
  FreeSpace fs;
  fs.m = p.size();
  fs.k = q.size();
  fs.vertical.assign(fs.m, std::vector<MaybeInterval>(fs.k - 1));
  fs.horizontal.assign(fs.m - 1, std::vector<MaybeInterval>(fs.k));
  for (std::size_t i = 0; i < fs.m; ++i) {
    for (std::size_t j = 0; j + 1 < fs.k; ++j) {
      fs.vertical[i][j] = free_interval(p[i], Segment(q[j], q[j + 1]), delta, tol);
    }
  }
  for (std::size_t i = 0; i + 1 < fs.m; ++i) {
    for (std::size_t j = 0; j < fs.k; ++j) {
      fs.horizontal[i][j] = free_interval(q[j], Segment(p[i], p[i + 1]), delta, tol);
    }
  }
  const auto [first, last] = predicate_p5_p6(pc, qc, delta, tol);
  fs.start_free = first;
  fs.end_free = last;
  return fs;
}

bool starts_at_zero(const MaybeInterval& x, const Tolerance& tol) {
  return x && tol.param_leq(x->lo, 0.0);
}

bool ends_at_one(const MaybeInterval& x, const Tolerance& tol) {
  return x && tol.param_leq(1.0, x->hi);
}

// Part of `target` reachable monotonically from a boundary point at parameter >= from.
MaybeInterval monotone_pass(double from, const MaybeInterval& target, const Tolerance& tol) {
  if (!target || !tol.param_leq(from, target->hi)) return std::nullopt;
  const double lo = std::max(from, target->lo);
  return ParamInterval{lo, std::max(lo, target->hi)};
}

bool frechet_once(const PolygonalCurve& pc, const PolygonalCurve& qc, Radius delta,
                  const Tolerance& tol) {
  const FreeSpace fs = build_free_space(pc, qc, delta, tol);
  if (!fs.start_free || !fs.end_free) return false;
  const std::size_t m = fs.m;
  const std::size_t k = fs.k;

  std::vector<std::vector<MaybeInterval>> left(m, std::vector<MaybeInterval>(k - 1));
  std::vector<std::vector<MaybeInterval>> bottom(m - 1, std::vector<MaybeInterval>(k));

  if (starts_at_zero(fs.vertical[0][0], tol)) left[0][0] = fs.vertical[0][0];
  for (std::size_t j = 1; j + 1 < k; ++j) {
    if (ends_at_one(left[0][j - 1], tol) && starts_at_zero(fs.vertical[0][j], tol)) {
      left[0][j] = fs.vertical[0][j];
    }
  }
  if (starts_at_zero(fs.horizontal[0][0], tol)) bottom[0][0] = fs.horizontal[0][0];
  for (std::size_t i = 1; i + 1 < m; ++i) {
    if (ends_at_one(bottom[i - 1][0], tol) && starts_at_zero(fs.horizontal[i][0], tol)) {
      bottom[i][0] = fs.horizontal[i][0];
    }
  }

  for (std::size_t i = 0; i + 1 < m; ++i) {
    for (std::size_t j = 0; j + 1 < k; ++j) {
      const MaybeInterval& in_left = left[i][j];
      const MaybeInterval& in_bottom = bottom[i][j];
      // Entering from below reaches the whole right boundary; entering from
      // the left only the part at or above the entry height.
      if (in_bottom) {
        left[i + 1][j] = fs.vertical[i + 1][j];
      } else if (in_left) {
        left[i + 1][j] = monotone_pass(in_left->lo, fs.vertical[i + 1][j], tol);
      }
      if (in_left) {
        bottom[i][j + 1] = fs.horizontal[i][j + 1];
      } else if (in_bottom) {
        bottom[i][j + 1] = monotone_pass(in_bottom->lo, fs.horizontal[i][j + 1], tol);
      }
    }
  }
  return ends_at_one(left[m - 1][k - 2], tol) || ends_at_one(bottom[m - 2][k - 1], tol);
}

bool weak_frechet_once(const PolygonalCurve& pc, const PolygonalCurve& qc, Radius delta,
                       const Tolerance& tol) {
  const FreeSpace fs = build_free_space(pc, qc, delta, tol);
  if (!fs.start_free || !fs.end_free) return false;
  const std::size_t rows = fs.m - 1;
  const std::size_t cols = fs.k - 1;
  // Free space inside a cell is convex, so cells connect through any
  // non-empty shared boundary interval.
  std::vector<std::vector<bool>> seen(rows, std::vector<bool>(cols, false));
  std::deque<std::pair<std::size_t, std::size_t>> queue{{0, 0}};
  seen[0][0] = true;
  while (!queue.empty()) {
    const auto [i, j] = queue.front();
    queue.pop_front();
    if (i == rows - 1 && j == cols - 1) return true;
    const auto visit = [&](std::size_t ni, std::size_t nj) {
      if (!seen[ni][nj]) {
        seen[ni][nj] = true;
        queue.emplace_back(ni, nj);
      }
    };
    if (i + 1 < rows && fs.vertical[i + 1][j]) visit(i + 1, j);
    if (i > 0 && fs.vertical[i][j]) visit(i - 1, j);
    if (j + 1 < cols && fs.horizontal[i][j + 1]) visit(i, j + 1);
    if (j > 0 && fs.horizontal[i][j]) visit(i, j - 1);
  }
  return false;
}

bool decide_once(CurveMeasure measure, const PolygonalCurve& p, const PolygonalCurve& q,
                 Radius delta, const Tolerance& tol) {
  switch (measure) {
    case CurveMeasure::hausdorff:
      return directed_hausdorff_once(p, q, delta, tol) && directed_hausdorff_once(q, p, delta, tol);
    case CurveMeasure::frechet:
      return frechet_once(p, q, delta, tol);
    case CurveMeasure::weak_frechet:
      return weak_frechet_once(p, q, delta, tol);
  }
  return false;
}

void enumerate_paths(const PolygonalCurve& p, const PolygonalCurve& q, std::size_t i,
                     std::size_t j, double acc, double& best) {
  acc += (p.vertex(i) - q.vertex(j)).squaredNorm();
  const std::size_t m = p.size();
  const std::size_t k = q.size();
  if (i + 1 == m && j + 1 == k) {
    best = std::min(best, acc);
    return;
  }
  if (i + 1 < m && j + 1 < k) enumerate_paths(p, q, i + 1, j + 1, acc, best);
  if (i + 1 < m) enumerate_paths(p, q, i + 1, j, acc, best);
  if (j + 1 < k) enumerate_paths(p, q, i, j + 1, acc, best);
}

}  // namespace

PolygonalCurve::PolygonalCurve(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InputError("a polygonal curve needs at least one vertex");
  for (const auto& v : vertices_) {
    require_same_dim(v, vertices_.front());
    require_finite(v, "curve vertex");
  }
  if (vertices_.front().size() < 1) throw DimensionError("curve dimension must be at least 1");
}

Segment PolygonalCurve::edge(std::size_t i) const {
  if (vertices_.size() == 1) return Segment(vertices_[0], vertices_[0]);
  return Segment(vertices_.at(i), vertices_.at(i + 1));
}

PolygonalCurve PolygonalCurve::refined(std::size_t factor) const {
  if (factor == 0) throw InputError("refinement factor must be positive");
  if (vertices_.size() == 1 || factor == 1) return *this;
  std::vector<Point> out;
  out.reserve((vertices_.size() - 1) * factor + 1);
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    const Segment e(vertices_[i], vertices_[i + 1]);
    for (std::size_t s = 0; s < factor; ++s) {
      out.push_back(e.at(static_cast<double>(s) / static_cast<double>(factor)));
    }
  }
  out.push_back(vertices_.back());
  return PolygonalCurve(std::move(out));
}

bool operator==(const PolygonalCurve& x, const PolygonalCurve& y) {
  return x.vertices_.size() == y.vertices_.size() &&
         std::equal(x.vertices_.begin(), x.vertices_.end(), y.vertices_.begin(),
                    [](const Point& a, const Point& b) { return a.size() == b.size() && a == b; });
}

PolygonalCurve make_curve(std::initializer_list<std::initializer_list<double>> vertices) {
  std::vector<Point> pts;
  for (auto v : vertices) pts.push_back(make_point(v));
  return PolygonalCurve(std::move(pts));
}

bool WarpingPath::valid_for(std::size_t m, std::size_t k) const {
  if (pairs.empty()) return false;
  if (pairs.front() != std::pair<std::size_t, std::size_t>{1, 1}) return false;
  if (pairs.back() != std::pair<std::size_t, std::size_t>{m, k}) return false;
  for (std::size_t s = 1; s < pairs.size(); ++s) {
    const auto di = pairs[s].first - pairs[s - 1].first;
    const auto dj = pairs[s].second - pairs[s - 1].second;
    if (pairs[s].first < pairs[s - 1].first || pairs[s].second < pairs[s - 1].second) return false;
    if (di > 1 || dj > 1 || di + dj == 0) return false;
  }
  return true;
}

std::string to_string(Margin margin) {
  return margin == Margin::robust ? "robust" : "near_boundary";
}

bool predicate_p1(const Segment& edge_p, const Point& qi, Radius delta, const Tolerance& tol) {
  return point_segment_within(qi, edge_p, delta, tol);
}

bool predicate_p2(const Segment& edge_q, const Point& pj, Radius delta, const Tolerance& tol) {
  return point_segment_within(pj, edge_q, delta, tol);
}

bool predicate_p3(const Segment& edge_q, const Segment& e1, const Segment& e2, Radius delta,
                  const Tolerance& tol) {
  if (edge_q.degenerate()) {
    return point_segment_within(edge_q.a, e1, delta, tol) &&
           point_segment_within(edge_q.a, e2, delta, tol);
  }
  return line_double_stadium_intersects(edge_q, e1, e2, delta, tol);
}

bool predicate_p4(const Segment& edge_p, const Segment& e1, const Segment& e2, Radius delta,
                  const Tolerance& tol) {
  return predicate_p3(edge_p, e1, e2, delta, tol);
}

std::pair<bool, bool> predicate_p5_p6(const PolygonalCurve& p, const PolygonalCurve& q,
                                      Radius delta, const Tolerance& tol) {
  require_compatible(p, q);
  return {point_in_ball(p.vertex(0), q.vertex(0), delta, tol),
          point_in_ball(p.vertex(p.size() - 1), q.vertex(q.size() - 1), delta, tol)};
}

bool predicate_p7(const Point& pj, const Point& pt, const Segment& edge_q, Radius delta,
                  const Tolerance& tol) {
  if (edge_q.degenerate()) {
    return point_in_ball(edge_q.a, pj, delta, tol) && point_in_ball(edge_q.a, pt, delta, tol);
  }
  const auto first = line_ball_intersection(edge_q, pj, delta, tol);
  const auto second = line_ball_intersection(edge_q, pt, delta, tol);
  return first && second && tol.param_leq(first->lo, second->hi);
}

bool predicate_p8(const Point& qi, const Point& qt, const Segment& edge_p, Radius delta,
                  const Tolerance& tol) {
  return predicate_p7(qi, qt, edge_p, delta, tol);
}

DecisionResult decide_directed_hausdorff_curve(const PolygonalCurve& p, const PolygonalCurve& q,
                                               Radius delta, const Tolerance& tol) {
  require_compatible(p, q);
  return decide_with_margin(tol, [&](const Tolerance& t) { return directed_hausdorff_once(p, q, delta, t); });
}

DecisionResult decide_hausdorff_curve(const PolygonalCurve& p, const PolygonalCurve& q,
                                      Radius delta, const Tolerance& tol) {
  require_compatible(p, q);
  return decide_with_margin(tol, [&](const Tolerance& t) {
    return decide_once(CurveMeasure::hausdorff, p, q, delta, t);
  });
}

DecisionResult decide_frechet(const PolygonalCurve& p, const PolygonalCurve& q, Radius delta,
                              const Tolerance& tol) {
  require_compatible(p, q);
  return decide_with_margin(tol, [&](const Tolerance& t) { return frechet_once(p, q, delta, t); });
}

DecisionResult decide_weak_frechet(const PolygonalCurve& p, const PolygonalCurve& q, Radius delta,
                                   const Tolerance& tol) {
  require_compatible(p, q);
  return decide_with_margin(tol, [&](const Tolerance& t) { return weak_frechet_once(p, q, delta, t); });
}

DecisionResult decide(CurveMeasure measure, const PolygonalCurve& p, const PolygonalCurve& q,
                      Radius delta, const Tolerance& tol) {
  require_compatible(p, q);
  return decide_with_margin(tol, [&](const Tolerance& t) { return decide_once(measure, p, q, delta, t); });
}

double discrete_hausdorff(const PolygonalCurve& p, const PolygonalCurve& q) {
  require_compatible(p, q);
  const auto directed = [](const PolygonalCurve& x, const PolygonalCurve& y) {
    double worst = 0.0;
    for (const auto& a : x.vertices()) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& b : y.vertices()) best = std::min(best, (a - b).squaredNorm());
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::sqrt(std::max(directed(p, q), directed(q, p)));
}

double discrete_frechet(const PolygonalCurve& p, const PolygonalCurve& q) {
  require_compatible(p, q);
  const std::size_t m = p.size();
  const std::size_t k = q.size();
  std::vector<double> prev(k), cur(k);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const double c = (p.vertex(i) - q.vertex(j)).squaredNorm();
      double reach;
      if (i == 0 && j == 0) {
        reach = c;
      } else if (i == 0) {
        reach = std::max(c, cur[j - 1]);
      } else if (j == 0) {
        reach = std::max(c, prev[j]);
      } else {
        reach = std::max(c, std::min({prev[j - 1], prev[j], cur[j - 1]}));
      }
      cur[j] = reach;
    }
    std::swap(prev, cur);
  }
  return std::sqrt(prev[k - 1]);
}

DtwResult dtw(const PolygonalCurve& p, const PolygonalCurve& q) {
  require_compatible(p, q);
  const std::size_t m = p.size();
  const std::size_t k = q.size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> acc(m, std::vector<double>(k, inf));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const double c = (p.vertex(i) - q.vertex(j)).squaredNorm();
      if (i == 0 && j == 0) {
        acc[i][j] = c;
        continue;
      }
      double best = inf;
      if (i > 0 && j > 0) best = std::min(best, acc[i - 1][j - 1]);
      if (i > 0) best = std::min(best, acc[i - 1][j]);
      if (j > 0) best = std::min(best, acc[i][j - 1]);
      acc[i][j] = best + c;
    }
  }

  DtwResult result;
  result.value = acc[m - 1][k - 1];
  std::size_t i = m - 1;
  std::size_t j = k - 1;
  result.path.pairs.emplace_back(i + 1, j + 1);
  while (i > 0 || j > 0) {
    // Candidates in tie-break order: diagonal, i-advance, j-advance.
    std::size_t ni = i, nj = j;
    double best = inf;
    if (i > 0 && j > 0 && acc[i - 1][j - 1] < best) {
      best = acc[i - 1][j - 1];
      ni = i - 1;
      nj = j - 1;
    }
    if (i > 0 && acc[i - 1][j] < best) {
      best = acc[i - 1][j];
      ni = i - 1;
      nj = j;
    }
    if (j > 0 && acc[i][j - 1] < best) {
      ni = i;
      nj = j - 1;
    }
    i = ni;
    j = nj;
    result.path.pairs.emplace_back(i + 1, j + 1);
  }
  std::reverse(result.path.pairs.begin(), result.path.pairs.end());
  return result;
}

double dtw_bruteforce(const PolygonalCurve& p, const PolygonalCurve& q) {
  require_compatible(p, q);
  if (p.size() + q.size() > 14) {
    throw RefusalError("dtw_bruteforce refuses m + k = " + std::to_string(p.size() + q.size()) +
                       " > 14");
  }
  double best = std::numeric_limits<double>::infinity();
  enumerate_paths(p, q, 0, 0, 0.0, best);
  return best;
}

double warping_cost(const PolygonalCurve& p, const PolygonalCurve& q, const WarpingPath& path) {
  if (!path.valid_for(p.size(), q.size())) throw InputError("invalid warping path");
  double acc = 0.0;
  for (const auto& [i, j] : path.pairs) acc += (p.vertex(i - 1) - q.vertex(j - 1)).squaredNorm();
  return acc;
}

double max_vertex_distance(const std::vector<Point>& p, const std::vector<Point>& q) {
  double best = 0.0;
  for (const auto& a : p) {
    for (const auto& b : q) best = std::max(best, (a - b).squaredNorm());
  }
  return std::sqrt(best);
}

double compute_distance(const PolygonalCurve& p, const PolygonalCurve& q, CurveMeasure measure,
                        const Tolerance& tol) {
  require_compatible(p, q);
  const Tolerance lenient = tol.with_bias(Bias::lenient);
  const auto holds = [&](double delta) {
    return decide_once(measure, p, q, Radius(delta), lenient);
  };
  const double upper = max_vertex_distance(p.vertices(), q.vertices());
  if (holds(0.0)) return 0.0;
  if (!holds(upper)) {
    throw NumericError("bisection bracket [0, " + std::to_string(upper) +
                       "] does not contain the distance");
  }
  double lo = 0.0;
  double hi = upper;
  const double stop = tol.eps() * std::max(1.0, upper);
  for (int iter = 0; iter < 64 && hi - lo > stop; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (holds(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace elastic
