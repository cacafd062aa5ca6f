#include "elastic/region.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace elastic {

namespace {

void require_planar_point(const Point& v) {
  if (v.size() != 2) throw DimensionError("region geometry is planar; got dimension " +
                                          std::to_string(v.size()));
}

double region_scale(const PolygonalRegion& r) {
  double s = 0.0;
  for (std::size_t k = 0; k < r.ring_count(); ++k) {
    for (const auto& v : r.ring(k).vertices()) s = std::max(s, v.cwiseAbs().maxCoeff());
  }
  return s;
}

bool segments_touch(const Segment& e, const Segment& f, const Tolerance& tol) {
  return !std::holds_alternative<NoIntersection>(segment_segment_intersection(e, f, tol));
}

bool strictly_inside_ring(const Point& v, const Ring& ring, const Tolerance& tol) {
  const double scale = std::max(geometric_scale({&v}), 1e-300);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (point_segment_distance(v, ring.edge(i)) <= tol.band(scale)) return false;
  }
  return ray_parity(v, ring);
}

std::size_t distinct_vertices(const Ring& ring) {
  std::vector<Point> seen;
  for (const auto& v : ring.vertices()) {
    if (std::none_of(seen.begin(), seen.end(), [&](const Point& s) { return s == v; })) {
      seen.push_back(v);
    }
  }
  return seen.size();
}

bool directed_region_once(const PolygonalRegion& p, const PolygonalRegion& q,
                          const RelevantVertices& q_vertices, Radius delta, const Tolerance& tol) {
  return boundary_predicate_b(p, q, delta, tol) && interior_predicate_i(p, q_vertices, delta, tol);
}

double bisect(double upper, const Tolerance& tol, const std::function<bool(double)>& holds) {
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

}  // namespace

Ring::Ring(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  for (const auto& v : vertices_) {
    require_planar_point(v);
    require_finite(v, "ring vertex");
  }
  // A repeated closing vertex is accepted and dropped.
  if (vertices_.size() > 1 && vertices_.front() == vertices_.back()) vertices_.pop_back();
}

Segment Ring::edge(std::size_t i) const {
  return Segment(vertices_.at(i), vertices_.at((i + 1) % vertices_.size()));
}

double Ring::signed_area() const {
  double twice = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Point& a = vertices_[i];
    const Point& b = vertices_[(i + 1) % vertices_.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return 0.5 * twice;
}

bool operator==(const Ring& x, const Ring& y) {
  return x.vertices_.size() == y.vertices_.size() &&
         std::equal(x.vertices_.begin(), x.vertices_.end(), y.vertices_.begin());
}

Ring make_ring(std::initializer_list<std::initializer_list<double>> vertices) {
  std::vector<Point> pts;
  for (auto v : vertices) pts.push_back(make_point(v));
  return Ring(std::move(pts));
}

PolygonalRegion::PolygonalRegion(Ring outer, std::vector<Ring> holes)
    : outer_(std::move(outer)), holes_(std::move(holes)) {}

std::vector<Segment> PolygonalRegion::boundary_edges() const {
  std::vector<Segment> out;
  for (std::size_t r = 0; r < ring_count(); ++r) {
    for (std::size_t i = 0; i < ring(r).size(); ++i) out.push_back(ring(r).edge(i));
  }
  return out;
}

std::vector<EdgeRef> PolygonalRegion::boundary_refs() const {
  std::vector<EdgeRef> out;
  for (std::size_t r = 0; r < ring_count(); ++r) {
    for (std::size_t i = 0; i < ring(r).size(); ++i) out.push_back({r, i});
  }
  return out;
}

std::vector<Point> PolygonalRegion::all_vertices() const {
  std::vector<Point> out;
  for (std::size_t r = 0; r < ring_count(); ++r) {
    out.insert(out.end(), ring(r).vertices().begin(), ring(r).vertices().end());
  }
  return out;
}

bool operator==(const PolygonalRegion& x, const PolygonalRegion& y) {
  return x.outer_ == y.outer_ && x.holes_ == y.holes_;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::too_few_vertices:
      return "too_few_vertices";
    case ViolationKind::zero_area:
      return "zero_area";
    case ViolationKind::self_intersection:
      return "self_intersection";
    case ViolationKind::hole_outside:
      return "hole_outside";
    case ViolationKind::holes_overlap:
      return "holes_overlap";
  }
  return "unknown";
}

std::string Violation::describe() const {
  std::string text = to_string(kind) + " in ring " + std::to_string(ring);
  switch (kind) {
    case ViolationKind::self_intersection:
      text += " between edges " + std::to_string(edge) + " and " + std::to_string(other_edge);
      break;
    case ViolationKind::hole_outside:
    case ViolationKind::holes_overlap:
      text += " against ring " + std::to_string(other_ring) + " (edges " + std::to_string(edge) +
              ", " + std::to_string(other_edge) + ")";
      break;
    default:
      break;
  }
  return text;
}

ValidationReport validate_region(const PolygonalRegion& region, const Tolerance& tol) {
  ValidationReport report;
  const Tolerance touch = tol.with_bias(Bias::lenient);
  const double scale = std::max(region_scale(region), 1e-300);

  for (std::size_t r = 0; r < region.ring_count(); ++r) {
    const Ring& ring = region.ring(r);
    if (distinct_vertices(ring) < 3) {
      report.violations.push_back({ViolationKind::too_few_vertices, r, r, 0, 0});
      continue;
    }
    if (std::abs(ring.signed_area()) <= tol.band(scale * scale)) {
      report.violations.push_back({ViolationKind::zero_area, r, r, 0, 0});
    }
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
        const auto hit = segment_segment_intersection(ring.edge(i), ring.edge(j), touch);
        const bool bad = adjacent ? std::holds_alternative<OverlapIntersection>(hit)
                                  : !std::holds_alternative<NoIntersection>(hit);
        if (bad) report.violations.push_back({ViolationKind::self_intersection, r, r, i, j});
      }
    }
  }

  const Ring& outer = region.outer();
  for (std::size_t h = 0; h < region.holes().size(); ++h) {
    const Ring& hole = region.holes()[h];
    const std::size_t r = h + 1;
    bool outside = false;
    for (std::size_t i = 0; i < hole.size() && !outside; ++i) {
      for (std::size_t j = 0; j < outer.size(); ++j) {
        if (segments_touch(hole.edge(i), outer.edge(j), touch)) {
          report.violations.push_back({ViolationKind::hole_outside, r, 0, i, j});
          outside = true;
          break;
        }
      }
    }
    if (!outside && hole.size() > 0 && !strictly_inside_ring(hole.vertex(0), outer, touch)) {
      report.violations.push_back({ViolationKind::hole_outside, r, 0, 0, 0});
    }
  }

  for (std::size_t h = 0; h < region.holes().size(); ++h) {
    for (std::size_t g = h + 1; g < region.holes().size(); ++g) {
      const Ring& a = region.holes()[h];
      const Ring& b = region.holes()[g];
      bool overlap = false;
      for (std::size_t i = 0; i < a.size() && !overlap; ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          if (segments_touch(a.edge(i), b.edge(j), touch)) {
            report.violations.push_back({ViolationKind::holes_overlap, h + 1, g + 1, i, j});
            overlap = true;
            break;
          }
        }
      }
      if (!overlap && a.size() > 0 && b.size() > 0 &&
          (ray_parity(a.vertex(0), b) || ray_parity(b.vertex(0), a))) {
        report.violations.push_back({ViolationKind::holes_overlap, h + 1, g + 1, 0, 0});
      }
    }
  }
  return report;
}

bool ray_parity(const Point& v, const Ring& ring) {
  require_planar_point(v);
  bool odd = false;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point& a = ring.vertex(i);
    const Point& b = ring.vertex((i + 1) % ring.size());
    // Half-open rule: a vertex on the ray counts for the edge whose other
    // endpoint lies strictly above, so shared vertices are not counted twice.
    if ((a[1] > v[1]) != (b[1] > v[1])) {
      const double x = a[0] + (v[1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1]);
      if (v[0] < x) odd = !odd;
    }
  }
  return odd;
}

bool point_in_region(const Point& v, const PolygonalRegion& region, const Tolerance& tol) {
  require_planar_point(v);
  require_finite(v, "query point");
  const double scale = std::max(region_scale(region), geometric_scale({&v}));
  const double band = tol.band(scale);
  bool odd = false;
  for (std::size_t r = 0; r < region.ring_count(); ++r) {
    const Ring& ring = region.ring(r);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (point_segment_distance(v, ring.edge(i)) <= band) return true;
    }
    if (ray_parity(v, ring)) odd = !odd;
  }
  return odd;
}

EdgeClassification classify_edge_against_region(const Segment& e, const PolygonalRegion& region,
                                                const Tolerance& tol) {
  if (e.dim() != 2) throw DimensionError("edge classification is planar");
  const Tolerance topo = tol.with_bias(Bias::lenient);
  std::vector<double> cuts;
  if (!e.degenerate()) {
    for (const auto& f : region.boundary_edges()) {
      const auto hit = segment_segment_intersection(e, f, topo);
      if (const auto* pt = std::get_if<PointIntersection>(&hit)) {
        cuts.push_back(pt->t);
      } else if (const auto* ov = std::get_if<OverlapIntersection>(&hit)) {
        cuts.push_back(ov->t_from);
        cuts.push_back(ov->t_to);
      }
    }
  }
  const double merge = 10.0 * tol.eps();
  std::sort(cuts.begin(), cuts.end());
  EdgeClassification out;
  out.edge = e;
  for (double t : cuts) {
    if (t <= merge || t >= 1.0 - merge) continue;
    if (!out.cut_params.empty() && t - out.cut_params.back() <= merge) continue;
    out.cut_params.push_back(t);
  }
  double lo = 0.0;
  for (std::size_t s = 0; s <= out.cut_params.size(); ++s) {
    const double hi = s < out.cut_params.size() ? out.cut_params[s] : 1.0;
    out.inside_flags.push_back(point_in_region(e.at(0.5 * (lo + hi)), region, topo));
    lo = hi;
  }
  return out;
}

RelevantVertices::RelevantVertices(const PolygonalRegion& region, const Tolerance& tol) {
  const Tolerance topo = tol.with_bias(Bias::lenient);
  const std::vector<Segment> edges = region.boundary_edges();
  const double scale = std::max(region_scale(region), 1e-300);
  const double band = 10.0 * tol.band(scale);
  const std::size_t n = edges.size();

  std::vector<double> dist(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t l = j + 1; l < n; ++l) {
        if (edges[i].degenerate() || edges[j].degenerate() || edges[l].degenerate()) continue;
        for (auto& cand : voronoi_vertex_candidates(edges[i], edges[j], edges[l], {i, j, l}, tol)) {
          const Point& v = cand.location;
          double nearest = std::numeric_limits<double>::infinity();
          for (std::size_t e = 0; e < n; ++e) {
            dist[e] = point_segment_distance(v, edges[e]);
            nearest = std::min(nearest, dist[e]);
          }
          const double slack = band + 1e-9 * nearest;
          // All three generating edges must be nearest, at distinct points.
          if (dist[i] > nearest + slack || dist[j] > nearest + slack ||
              dist[l] > nearest + slack) {
            continue;
          }
          const Point ci = edges[i].at(closest_param(v, edges[i]));
          const Point cj = edges[j].at(closest_param(v, edges[j]));
          const Point cl = edges[l].at(closest_param(v, edges[l]));
          if ((ci - cj).norm() <= slack || (ci - cl).norm() <= slack || (cj - cl).norm() <= slack) {
            continue;
          }
          const bool duplicate = std::any_of(vertices_.begin(), vertices_.end(), [&](const Vertex& w) {
            return (w.candidate.location - v).norm() <= band;
          });
          if (duplicate) continue;
          const bool inside = point_in_region(v, region, topo);
          vertices_.push_back({std::move(cand), nearest, inside});
        }
      }
    }
  }
}

bool boundary_predicate_b(const PolygonalRegion& p, const PolygonalRegion& q, Radius delta,
                          const Tolerance& tol) {
  const std::vector<Segment> q_edges = q.boundary_edges();
  std::vector<ParamInterval> cover;
  for (const auto& e : p.boundary_edges()) {
    if (e.degenerate()) {
      if (point_in_region(e.a, q, tol)) continue;
      const bool near = std::any_of(q_edges.begin(), q_edges.end(), [&](const Segment& f) {
        return point_segment_within(e.a, f, delta, tol);
      });
      if (!near) return false;
      continue;
    }
    const EdgeClassification cls = classify_edge_against_region(e, q, tol);
    cover.clear();
    for (const auto& f : q_edges) {
      if (auto piece = clip_to_unit(line_stadium_intersection(e, f, delta, tol), tol)) {
        cover.push_back(*piece);
      }
    }
    double lo = 0.0;
    for (std::size_t s = 0; s < cls.inside_flags.size(); ++s) {
      const double hi = s < cls.cut_params.size() ? cls.cut_params[s] : 1.0;
      if (!cls.inside_flags[s] && !intervals_cover(cover, lo, hi, tol)) return false;
      lo = hi;
    }
  }
  return true;
}

bool interior_predicate_i(const PolygonalRegion& p, const RelevantVertices& q_vertices,
                          Radius delta, const Tolerance& tol) {
  const Tolerance topo = tol.with_bias(Bias::lenient);
  for (const auto& w : q_vertices.vertices()) {
    if (w.inside) continue;
    const Point& v = w.candidate.location;
    const double scale = std::max(geometric_scale({&v}, delta.value()), w.clearance);
    if (tol.leq(w.clearance, delta.value(), scale)) continue;
    if (point_in_region(v, p, topo)) return false;
  }
  return true;
}

bool interior_predicate_i(const PolygonalRegion& p, const PolygonalRegion& q, Radius delta,
                          const Tolerance& tol) {
  return interior_predicate_i(p, RelevantVertices(q, tol), delta, tol);
}

DecisionResult decide_directed_hausdorff_region(const PolygonalRegion& p,
                                                const PolygonalRegion& q, Radius delta,
                                                const Tolerance& tol) {
  const RelevantVertices q_vertices(q, tol);
  return decide_with_margin(tol, [&](const Tolerance& t) {
    return directed_region_once(p, q, q_vertices, delta, t);
  });
}

DecisionResult decide_hausdorff_region(const PolygonalRegion& p, const PolygonalRegion& q,
                                       Radius delta, const Tolerance& tol) {
  const RelevantVertices p_vertices(p, tol);
  const RelevantVertices q_vertices(q, tol);
  return decide_with_margin(tol, [&](const Tolerance& t) {
    return directed_region_once(p, q, q_vertices, delta, t) &&
           directed_region_once(q, p, p_vertices, delta, t);
  });
}

double compute_directed_hausdorff_region(const PolygonalRegion& p, const PolygonalRegion& q,
                                         const Tolerance& tol) {
  const RelevantVertices q_vertices(q, tol);
  const Tolerance lenient = tol.with_bias(Bias::lenient);
  const double upper = max_vertex_distance(p.all_vertices(), q.all_vertices());
  return bisect(upper, tol, [&](double delta) {
    return directed_region_once(p, q, q_vertices, Radius(delta), lenient);
  });
}

double compute_hausdorff_region(const PolygonalRegion& p, const PolygonalRegion& q,
                                const Tolerance& tol) {
  return std::max(compute_directed_hausdorff_region(p, q, tol),
                  compute_directed_hausdorff_region(q, p, tol));
}

}  // namespace elastic
