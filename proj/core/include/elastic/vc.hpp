#ifndef ELASTIC_VC_HPP
#define ELASTIC_VC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "elastic/curves.hpp"
#include "elastic/region.hpp"

namespace elastic {

using BigInt = boost::multiprecision::cpp_int;

struct BoundQuery {
  long long d = 1;  // ambient dimension
  long long k = 1;  // center complexity
  long long m = 1;  // ground complexity
};

/// 2 * param_dim * log2(12 t l) for ranges that are t-combinations of sgn(F)
/// with l polynomials. Bounds are reals; the VC-dimension is their floor at most.
double bound_sign_combination(long long param_dim, long long t, long long l);
double bound_discrete_hausdorff(const BoundQuery& q);
double bound_discrete_frechet(const BoundQuery& q);
/// Evaluated in log space: 2(dk+1)(log2 24 + min((k-1) log2 m, (m-1) log2 k)).
double bound_dtw(const BoundQuery& q);

struct WarpingPathCount {
  BigInt total;           // all monotone step paths, the Delannoy number D(m-1, k-1)
  BigInt binomial_bound;  // C(m+k-2, m-1)
};

WarpingPathCount count_warping_paths(std::size_t m, std::size_t k);

enum class Measure {
  hausdorff,
  frechet,
  weak_frechet,
  discrete_hausdorff,
  discrete_frechet,
  dtw,
  hausdorff_region,
};

std::string to_string(Measure measure);
/// Accepts both "discrete-frechet" and "discrete_frechet" spellings.
std::optional<Measure> parse_measure(const std::string& name);
bool is_region_measure(Measure measure);

using Shape = std::variant<PolygonalCurve, PolygonalRegion>;

struct GroundElement {
  std::string id;
  Shape shape;
};

/// Ball membership: measure(x, center) <= radius. DTW radii are in squared units.
/// Throws InputError when the shape kinds do not fit the measure.
DecisionResult in_range(Measure measure, const Shape& x, const Shape& center, double radius,
                        const Tolerance& tol = Tolerance());

/// Distance used to place candidate radii.
double measure_value(Measure measure, const Shape& x, const Shape& center,
                     const Tolerance& tol = Tolerance());

struct Witness {
  std::string center_id;
  Shape center;
  double radius = 0.0;
};

struct ShatterReport {
  std::vector<std::string> ground_ids;
  bool shattered = false;
  std::map<std::uint32_t, Witness> witnesses;  // bit i set = ground element i inside
  std::vector<std::uint32_t> missing_subsets;
  std::size_t evaluations = 0;  // (center, radius) pairs tried
};

inline constexpr std::size_t kMaxGroundSize = 20;

struct CenterCandidate {
  std::string id;
  Shape shape;
};

/// Tries every (center, radius) pair, centers outer. The first pair realizing
/// a subset is its witness. Memberships follow the decider verdict, boundary
/// cases included.
ShatterReport shatter_check(const std::vector<GroundElement>& ground,
                            const std::vector<CenterCandidate>& centers,
                            const std::vector<double>& radii, Measure measure,
                            const Tolerance& tol = Tolerance());

/// Seeded search over ground elements, jittered and far-away copies, with radii
/// between consecutive distances. Stops after `budget` (center, radius) pairs.
/// Pairs with a near-boundary decision are never used as witnesses.
ShatterReport random_shatter_search(const std::vector<GroundElement>& ground, Measure measure,
                                    std::size_t budget, std::uint64_t seed,
                                    const Tolerance& tol = Tolerance());

/// Recomputes the subset of every witness with fresh decider calls.
bool verify_witnesses(const ShatterReport& report, const std::vector<GroundElement>& ground,
                      Measure measure, const Tolerance& tol = Tolerance());

}  // namespace elastic

#endif  // ELASTIC_VC_HPP
