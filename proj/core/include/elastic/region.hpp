#ifndef ELASTIC_REGION_HPP
#define ELASTIC_REGION_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "elastic/curves.hpp"
#include "elastic/geometry.hpp"

namespace elastic {

/// Closed planar polygonal ring; the first vertex is implicitly repeated.
/// Structural checks (simplicity, area) live in validate_region.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::vector<Point> vertices);

  std::size_t size() const { return vertices_.size(); }
  const Point& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<Point>& vertices() const { return vertices_; }
  Segment edge(std::size_t i) const;
  double signed_area() const;

  friend bool operator==(const Ring& x, const Ring& y);

 private:
  std::vector<Point> vertices_;
};

Ring make_ring(std::initializer_list<std::initializer_list<double>> vertices);

/// Index of a boundary edge: ring 0 is the outer ring, ring h+1 is hole h.
struct EdgeRef {
  std::size_t ring = 0;
  std::size_t index = 0;
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

/// Closure of the outer ring's interior minus the hole interiors.
class PolygonalRegion {
 public:
  PolygonalRegion() = default;
  PolygonalRegion(Ring outer, std::vector<Ring> holes = {});

  const Ring& outer() const { return outer_; }
  const std::vector<Ring>& holes() const { return holes_; }
  std::size_t ring_count() const { return holes_.size() + 1; }
  const Ring& ring(std::size_t r) const { return r == 0 ? outer_ : holes_.at(r - 1); }

  /// All boundary edges, outer ring first.
  std::vector<Segment> boundary_edges() const;
  std::vector<EdgeRef> boundary_refs() const;
  std::vector<Point> all_vertices() const;

  friend bool operator==(const PolygonalRegion& x, const PolygonalRegion& y);

 private:
  Ring outer_;
  std::vector<Ring> holes_;
};

enum class ViolationKind {
  too_few_vertices,
  zero_area,
  self_intersection,
  hole_outside,
  holes_overlap,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::size_t ring = 0;        // offending ring (0 = outer)
  std::size_t other_ring = 0;  // second ring for cross-ring violations
  std::size_t edge = 0;
  std::size_t other_edge = 0;
  std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_region(const PolygonalRegion& region, const Tolerance& tol = Tolerance());

/// Closed-set membership: boundary points are inside.
bool point_in_region(const Point& v, const PolygonalRegion& region,
                     const Tolerance& tol = Tolerance());

/// Parity of horizontal-ray crossings with one ring, ignoring boundary contact.
bool ray_parity(const Point& v, const Ring& ring);

// Voronoi-vertex candidates of three segments.

enum class SubSiteKind { first_endpoint, second_endpoint, supporting_line };

struct SubSite {
  std::size_t edge = 0;  // caller-supplied edge identifier
  SubSiteKind kind = SubSiteKind::supporting_line;
};

enum class CandidateCase {
  three_points,
  two_points_line,
  point_two_lines_parallel,
  point_two_lines_crossing,
  three_lines,
};

std::string to_string(CandidateCase c);

struct VoronoiCandidate {
  Point location;
  RootType tag = RootType::rational;
  std::array<SubSite, 3> sites;
  CandidateCase kind = CandidateCase::three_points;
};

/// Points equidistant from one endpoint or supporting line of each of a, b, c.
/// Combinations where one sub-site contains another are skipped; candidates
/// within 10 eps of each other are merged keeping the lowest root type.
std::vector<VoronoiCandidate> voronoi_vertex_candidates(const Segment& a, const Segment& b,
                                                        const Segment& c,
                                                        const Tolerance& tol = Tolerance());
std::vector<VoronoiCandidate> voronoi_vertex_candidates(const Segment& a, const Segment& b,
                                                        const Segment& c,
                                                        const std::array<std::size_t, 3>& ids,
                                                        const Tolerance& tol = Tolerance());

/// Distance from v to the sub-site (point or full line).
double sub_site_distance(const Point& v, const Segment& edge, SubSiteKind kind);

struct EdgeClassification {
  Segment edge;
  std::vector<double> cut_params;  // strictly increasing, inside (0, 1)
  std::vector<bool> inside_flags;  // one per sub-interval
};

EdgeClassification classify_edge_against_region(const Segment& e, const PolygonalRegion& region,
                                                const Tolerance& tol = Tolerance());

/// Voronoi vertices of a region's boundary edges with three distinct nearest
/// points, precomputed once per region. Independent of the radius.
class RelevantVertices {
 public:
  RelevantVertices(const PolygonalRegion& region, const Tolerance& tol = Tolerance());

  struct Vertex {
    VoronoiCandidate candidate;
    double clearance = 0.0;  // distance to the region boundary
    bool inside = false;     // inside the region
  };

  const std::vector<Vertex>& vertices() const { return vertices_; }

 private:
  std::vector<Vertex> vertices_;
};

/// d_H(boundary of P, Q) <= delta.
bool boundary_predicate_b(const PolygonalRegion& p, const PolygonalRegion& q, Radius delta,
                          const Tolerance& tol = Tolerance());
/// False iff a relevant Voronoi vertex of Q's boundary lies in P, outside Q,
/// and farther than delta from every boundary edge of Q.
bool interior_predicate_i(const PolygonalRegion& p, const PolygonalRegion& q, Radius delta,
                          const Tolerance& tol = Tolerance());
bool interior_predicate_i(const PolygonalRegion& p, const RelevantVertices& q_vertices,
                          Radius delta, const Tolerance& tol = Tolerance());

DecisionResult decide_directed_hausdorff_region(const PolygonalRegion& p,
                                                const PolygonalRegion& q, Radius delta,
                                                const Tolerance& tol = Tolerance());
DecisionResult decide_hausdorff_region(const PolygonalRegion& p, const PolygonalRegion& q,
                                       Radius delta, const Tolerance& tol = Tolerance());

double compute_directed_hausdorff_region(const PolygonalRegion& p, const PolygonalRegion& q,
                                         const Tolerance& tol = Tolerance());
double compute_hausdorff_region(const PolygonalRegion& p, const PolygonalRegion& q,
                                const Tolerance& tol = Tolerance());

}  // namespace elastic

#endif  // ELASTIC_REGION_HPP
