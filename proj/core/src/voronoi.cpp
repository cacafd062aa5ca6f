// Voronoi-vertex candidates of three segments.
//
// Each segment contributes three sub-sites: its two endpoints and its
// supporting line. For every choice of one sub-site per segment we intersect
// two bisectors:
//   three points        circumcenter (linear system)
//   two points, a line  point bisector against the focus/directrix parabola
//   a point, two lines  midline or angle bisectors against the parabola
//   three lines         pairwise angle bisectors intersected
#include <algorithm>
#include <cmath>
#include <optional>

#include "elastic/region.hpp"

namespace elastic {

namespace {

struct Site {
  bool is_line = false;
  Point origin;     // the point, or a point on the line
  Point direction;  // unit direction of the line
  Point normal;     // unit normal of the line
  SubSite tag;
};

struct Line {
  Point origin;
  Point direction;  // unit
};

double cross2(const Point& u, const Point& v) { return u[0] * v[1] - u[1] * v[0]; }

Point perp(const Point& u) { return make_point({-u[1], u[0]}); }

Site make_site(const Segment& e, SubSiteKind kind, std::size_t id) {
  Site s;
  s.tag = {id, kind};
  switch (kind) {
    case SubSiteKind::first_endpoint:
      s.origin = e.a;
      break;
    case SubSiteKind::second_endpoint:
      s.origin = e.b;
      break;
    case SubSiteKind::supporting_line:
      s.is_line = true;
      s.origin = e.a;
      s.direction = e.direction().normalized();
      s.normal = perp(s.direction);
      break;
  }
  return s;
}

double site_distance(const Point& v, const Site& s) {
  if (s.is_line) return std::abs(s.normal.dot(v - s.origin));
  return (v - s.origin).norm();
}

// One sub-site contained in another: coincident points, a point on a line,
// or two equal lines.
bool contained(const Site& x, const Site& y, double band) {
  if (!x.is_line && !y.is_line) return (x.origin - y.origin).norm() <= band;
  if (x.is_line && y.is_line) {
    return std::abs(cross2(x.direction, y.direction)) <= 1e-12 &&
           std::abs(x.normal.dot(y.origin - x.origin)) <= band;
  }
  const Site& line = x.is_line ? x : y;
  const Site& pt = x.is_line ? y : x;
  return std::abs(line.normal.dot(pt.origin - line.origin)) <= band;
}

std::optional<Point> intersect(const Line& l1, const Line& l2) {
  const double denom = cross2(l1.direction, l2.direction);
  if (std::abs(denom) <= 1e-12) return std::nullopt;
  const double s = cross2(l2.origin - l1.origin, l2.direction) / denom;
  return Point(l1.origin + s * l1.direction);
}

Line point_bisector(const Point& p, const Point& q) {
  return {0.5 * (p + q), perp(q - p).normalized()};
}

// Bisector of two distinct lines: the midline if parallel, else the two
// angle bisectors through the crossing point.
std::vector<Line> line_bisectors(const Site& l1, const Site& l2) {
  if (std::abs(cross2(l1.direction, l2.direction)) <= 1e-12) {
    const double offset = l1.normal.dot(l2.origin - l1.origin);
    return {{l1.origin + 0.5 * offset * l1.normal, l1.direction}};
  }
  const Line a{l1.origin, l1.direction};
  const Line b{l2.origin, l2.direction};
  const Point cross = *intersect(a, b);
  // Align the second direction so the sum and difference are the bisectors.
  return {{cross, (l1.direction + l2.direction).normalized()},
          {cross, (l1.direction - l2.direction).normalized()}};
}

// Points x on `line` with |x - focus| = dist(x, directrix).
std::vector<Point> line_parabola(const Line& line, const Point& focus, const Site& directrix) {
  const Point w = line.origin - focus;
  const double c0 = directrix.normal.dot(line.origin - directrix.origin);
  const double c1 = directrix.normal.dot(line.direction);
  // (1 - c1^2) s^2 + 2 (w.u - c0 c1) s + (|w|^2 - c0^2) = 0
  const double qa = 1.0 - c1 * c1;
  const double qb = w.dot(line.direction) - c0 * c1;
  const double qc = w.squaredNorm() - c0 * c0;
  std::vector<Point> out;
  const auto push = [&](double s) { out.push_back(line.origin + s * line.direction); };
  if (std::abs(qa) <= 1e-12) {
    if (std::abs(qb) > 1e-15) push(-qc / (2.0 * qb));
    return out;
  }
  double disc = qb * qb - qa * qc;
  if (disc < 0.0) {
    if (disc < -1e-12 * (qb * qb + std::abs(qa * qc))) return out;
    disc = 0.0;
  }
  const double root = std::sqrt(disc);
  // Numerically stable pair of roots.
  const double q = -(qb + std::copysign(root, qb));
  if (q != 0.0) {
    push(q / qa);
    push(qc / q);
  } else {
    push(0.0);
  }
  return out;
}

struct Raw {
  Point location;
  RootType tag;
  CandidateCase kind;
};

std::vector<Raw> solve(const std::vector<const Site*>& points, const std::vector<const Site*>& lines) {
  std::vector<Raw> out;
  if (lines.empty()) {
    const Point& p = points[0]->origin;
    const Point& q = points[1]->origin;
    const Point& r = points[2]->origin;
    if (auto x = intersect(point_bisector(p, q), point_bisector(p, r))) {
      out.push_back({*x, RootType::rational, CandidateCase::three_points});
    }
  } else if (lines.size() == 1) {
    const Point& p = points[0]->origin;
    const Point& q = points[1]->origin;
    for (auto& x : line_parabola(point_bisector(p, q), p, *lines[0])) {
      out.push_back({x, RootType::single_radical, CandidateCase::two_points_line});
    }
  } else if (lines.size() == 2) {
    const bool parallel = std::abs(cross2(lines[0]->direction, lines[1]->direction)) <= 1e-12;
    const auto kind =
        parallel ? CandidateCase::point_two_lines_parallel : CandidateCase::point_two_lines_crossing;
    const auto tag = parallel ? RootType::single_radical : RootType::nested_radical;
    for (const auto& bis : line_bisectors(*lines[0], *lines[1])) {
      for (auto& x : line_parabola(bis, points[0]->origin, *lines[0])) {
        out.push_back({x, tag, kind});
      }
    }
  } else {
    const auto first = line_bisectors(*lines[0], *lines[1]);
    const auto second = line_bisectors(*lines[0], *lines[2]);
    for (const auto& l1 : first) {
      for (const auto& l2 : second) {
        if (auto x = intersect(l1, l2)) {
          out.push_back({*x, RootType::single_radical, CandidateCase::three_lines});
        }
      }
    }
  }
  return out;
}

}  // namespace

double sub_site_distance(const Point& v, const Segment& edge, SubSiteKind kind) {
  if (edge.degenerate() && kind == SubSiteKind::supporting_line) {
    throw InputError("degenerate segment has no supporting line");
  }
  return site_distance(v, make_site(edge, kind, 0));
}

std::string to_string(CandidateCase c) {
  switch (c) {
    case CandidateCase::three_points:
      return "three_points";
    case CandidateCase::two_points_line:
      return "two_points_line";
    case CandidateCase::point_two_lines_parallel:
      return "point_two_lines_parallel";
    case CandidateCase::point_two_lines_crossing:
      return "point_two_lines_crossing";
    case CandidateCase::three_lines:
      return "three_lines";
  }
  return "unknown";
}

std::vector<VoronoiCandidate> voronoi_vertex_candidates(const Segment& a, const Segment& b,
                                                        const Segment& c, const Tolerance& tol) {
  return voronoi_vertex_candidates(a, b, c, {0, 1, 2}, tol);
}

std::vector<VoronoiCandidate> voronoi_vertex_candidates(const Segment& a, const Segment& b,
                                                        const Segment& c,
                                                        const std::array<std::size_t, 3>& ids,
                                                        const Tolerance& tol) {
  const std::array<const Segment*, 3> segs{&a, &b, &c};
  for (const Segment* s : segs) {
    if (s->dim() != 2) throw DimensionError("Voronoi candidates need planar segments");
    require_finite(s->a, "segment endpoint");
    require_finite(s->b, "segment endpoint");
    if (s->degenerate()) throw InputError("Voronoi candidates need non-degenerate segments");
  }
  const double scale = std::max(1e-300, geometric_scale({&a.a, &a.b, &b.a, &b.b, &c.a, &c.b}));
  const double band = tol.band(scale);

  constexpr std::array<SubSiteKind, 3> kinds{SubSiteKind::first_endpoint,
                                             SubSiteKind::second_endpoint,
                                             SubSiteKind::supporting_line};
  std::array<std::array<Site, 3>, 3> sites;
  for (std::size_t s = 0; s < 3; ++s) {
    for (std::size_t k = 0; k < 3; ++k) sites[s][k] = make_site(*segs[s], kinds[k], ids[s]);
  }

  std::vector<VoronoiCandidate> out;
  for (const Site& x : sites[0]) {
    for (const Site& y : sites[1]) {
      if (contained(x, y, band)) continue;
      for (const Site& z : sites[2]) {
        if (contained(x, z, band) || contained(y, z, band)) continue;
        std::vector<const Site*> points, lines;
        for (const Site* s : {&x, &y, &z}) (s->is_line ? lines : points).push_back(s);
        for (auto& raw : solve(points, lines)) {
          if (!raw.location.allFinite()) continue;
          // Discard roots that lost equidistance to rounding.
          const double dx = site_distance(raw.location, x);
          const double dy = site_distance(raw.location, y);
          const double dz = site_distance(raw.location, z);
          const double slack = 1e-7 * std::max({scale, dx, raw.location.cwiseAbs().maxCoeff()});
          if (std::abs(dx - dy) > slack || std::abs(dx - dz) > slack) continue;
          out.push_back({std::move(raw.location), raw.tag, {x.tag, y.tag, z.tag}, raw.kind});
        }
      }
    }
  }

  // Merge near-duplicates, keeping the lowest root type.
  const double merge = 10.0 * band;
  std::vector<VoronoiCandidate> merged;
  for (auto& cand : out) {
    auto hit = std::find_if(merged.begin(), merged.end(), [&](const VoronoiCandidate& m) {
      return (m.location - cand.location).norm() <= merge;
    });
    if (hit == merged.end()) {
      merged.push_back(std::move(cand));
    } else if (static_cast<int>(cand.tag) < static_cast<int>(hit->tag)) {
      *hit = std::move(cand);
    }
  }
  return merged;
}

}  // namespace elastic
