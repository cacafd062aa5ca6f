#include "elastic/vc.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace elastic {

namespace {

void require_positive(long long v, const char* name) {
  if (v < 1) throw InputError(std::string(name) + " must be >= 1, got " + std::to_string(v));
}

void require_query(const BoundQuery& q) {
  require_positive(q.d, "d");
  require_positive(q.k, "k");
  require_positive(q.m, "m");
}

const PolygonalCurve& as_curve(const Shape& s, Measure measure) {
  if (const auto* c = std::get_if<PolygonalCurve>(&s)) return *c;
  throw InputError("measure " + to_string(measure) + " needs curves, got a region");
}

const PolygonalRegion& as_region(const Shape& s, Measure measure) {
  if (const auto* r = std::get_if<PolygonalRegion>(&s)) return *r;
  throw InputError("measure " + to_string(measure) + " needs regions, got a curve");
}

std::uint32_t subset_of(const std::vector<GroundElement>& ground, Measure measure,
                        const Shape& center, double radius, const Tolerance& tol, bool& robust) {
  std::uint32_t mask = 0;
  robust = true;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    const DecisionResult r = in_range(measure, ground[i].shape, center, radius, tol);
    if (r.margin == Margin::near_boundary) robust = false;
    if (r.verdict) mask |= std::uint32_t{1} << i;
  }
  return mask;
}

void require_ground(const std::vector<GroundElement>& ground, Measure measure) {
  if (ground.empty()) throw InputError("ground set is empty");
  if (ground.size() > kMaxGroundSize) {
    throw InputError("ground set has " + std::to_string(ground.size()) + " elements; at most " +
                     std::to_string(kMaxGroundSize) + " are enumerable");
  }
  // Kind and dimension checks happen once here rather than per decision.
  for (const auto& g : ground) {
    if (is_region_measure(measure)) {
      as_region(g.shape, measure);
    } else if (as_curve(g.shape, measure).dim() != as_curve(ground[0].shape, measure).dim()) {
      throw DimensionError("ground curves have different dimensions");
    }
  }
}

ShatterReport start_report(const std::vector<GroundElement>& ground) {
  ShatterReport report;
  for (const auto& g : ground) report.ground_ids.push_back(g.id);
  return report;
}

void finish_report(ShatterReport& report, std::size_t n) {
  const std::uint32_t total = std::uint32_t{1} << n;
  report.missing_subsets.clear();
  for (std::uint32_t s = 0; s < total; ++s) {
    if (!report.witnesses.count(s)) report.missing_subsets.push_back(s);
  }
  report.shattered = report.missing_subsets.empty();
}

// Bounding box extent of all ground vertices, used to size perturbations.
double ground_spread(const std::vector<GroundElement>& ground) {
  std::vector<Point> pts;
  for (const auto& g : ground) {
    if (const auto* c = std::get_if<PolygonalCurve>(&g.shape)) {
      pts.insert(pts.end(), c->vertices().begin(), c->vertices().end());
    } else {
      const auto v = std::get<PolygonalRegion>(g.shape).all_vertices();
      pts.insert(pts.end(), v.begin(), v.end());
    }
  }
  Point lo = pts.front();
  Point hi = pts.front();
  for (const auto& p : pts) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
  return std::max((hi - lo).maxCoeff(), 1.0);
}

Shape translated(const Shape& s, const Point& shift, double scale) {
  if (const auto* c = std::get_if<PolygonalCurve>(&s)) {
    std::vector<Point> v;
    for (const auto& p : c->vertices()) v.push_back(p + shift);
    return PolygonalCurve(std::move(v));
  }
  const auto& r = std::get<PolygonalRegion>(s);
  Point centroid = Point::Zero(2);
  for (const auto& p : r.outer().vertices()) centroid += p;
  centroid /= static_cast<double>(r.outer().size());
  const auto move = [&](const Ring& ring) {
    std::vector<Point> v;
    for (const auto& p : ring.vertices()) v.push_back(centroid + scale * (p - centroid) + shift);
    return Ring(std::move(v));
  };
  std::vector<Ring> holes;
  for (const auto& h : r.holes()) holes.push_back(move(h));
  return PolygonalRegion(move(r.outer()), std::move(holes));
}

Shape jittered(const Shape& s, double sigma, std::mt19937_64& rng) {
  std::normal_distribution<double> noise(0.0, sigma);
  if (const auto* c = std::get_if<PolygonalCurve>(&s)) {
    std::vector<Point> v;
    for (const auto& p : c->vertices()) {
      Point q = p;
      for (Eigen::Index i = 0; i < q.size(); ++i) q[i] += noise(rng);
      v.push_back(q);
    }
    return PolygonalCurve(std::move(v));
  }
  // Vertex noise could break simplicity, so regions move rigidly and rescale.
  std::uniform_real_distribution<double> scale(0.7, 1.3);
  const double f = scale(rng);
  return translated(s, make_point({noise(rng), noise(rng)}), f);
}

int shape_dim(const Shape& s) {
  if (const auto* c = std::get_if<PolygonalCurve>(&s)) return c->dim();
  return 2;
}

}  // namespace

double bound_sign_combination(long long param_dim, long long t, long long l) {
  require_positive(param_dim, "param_dim");
  require_positive(t, "t");
  require_positive(l, "l");
  return 2.0 * static_cast<double>(param_dim) *
         std::log2(12.0 * static_cast<double>(t) * static_cast<double>(l));
}

double bound_discrete_hausdorff(const BoundQuery& q) {
  require_query(q);
  return 2.0 * static_cast<double>(q.d * q.k + 1) *
         std::log2(24.0 * static_cast<double>(q.m) * static_cast<double>(q.k));
}

double bound_discrete_frechet(const BoundQuery& q) { return bound_discrete_hausdorff(q); }

double bound_dtw(const BoundQuery& q) {
  require_query(q);
  const double m = static_cast<double>(q.m);
  const double k = static_cast<double>(q.k);
  const double exponent = std::min((k - 1.0) * std::log2(m), (m - 1.0) * std::log2(k));
  return 2.0 * static_cast<double>(q.d * q.k + 1) * (std::log2(24.0) + exponent);
}

WarpingPathCount count_warping_paths(std::size_t m, std::size_t k) {
  if (m < 1 || k < 1) throw InputError("curve complexities must be >= 1");
  // D(i, j) = D(i-1, j) + D(i, j-1) + D(i-1, j-1), one row at a time.
  std::vector<BigInt> row(k, 1);
  for (std::size_t i = 1; i < m; ++i) {
    BigInt diag = row[0];
    for (std::size_t j = 1; j < k; ++j) {
      BigInt up = row[j];
      row[j] = row[j] + row[j - 1] + diag;
      diag = up;
    }
  }
  BigInt binom = 1;
  const std::size_t n = m + k - 2;
  const std::size_t r = std::min(m - 1, k - 1);
  for (std::size_t i = 1; i <= r; ++i) {
    binom *= n - r + i;
    binom /= i;
  }
  return {row[k - 1], binom};
}

std::string to_string(Measure measure) {
  switch (measure) {
    case Measure::hausdorff:
      return "hausdorff";
    case Measure::frechet:
      return "frechet";
    case Measure::weak_frechet:
      return "weak-frechet";
    case Measure::discrete_hausdorff:
      return "discrete-hausdorff";
    case Measure::discrete_frechet:
      return "discrete-frechet";
    case Measure::dtw:
      return "dtw";
    case Measure::hausdorff_region:
      return "hausdorff-region";
  }
  return "unknown";
}

std::optional<Measure> parse_measure(const std::string& name) {
  std::string key = name;
  std::replace(key.begin(), key.end(), '_', '-');
  for (Measure m : {Measure::hausdorff, Measure::frechet, Measure::weak_frechet,
                    Measure::discrete_hausdorff, Measure::discrete_frechet, Measure::dtw,
                    Measure::hausdorff_region}) {
    if (to_string(m) == key) return m;
  }
  return std::nullopt;
}

bool is_region_measure(Measure measure) { return measure == Measure::hausdorff_region; }

DecisionResult in_range(Measure measure, const Shape& x, const Shape& center, double radius,
                        const Tolerance& tol) {
  const Radius delta(radius);
  switch (measure) {
    case Measure::hausdorff:
      return decide_hausdorff_curve(as_curve(x, measure), as_curve(center, measure), delta, tol);
    case Measure::frechet:
      return decide_frechet(as_curve(x, measure), as_curve(center, measure), delta, tol);
    case Measure::weak_frechet:
      return decide_weak_frechet(as_curve(x, measure), as_curve(center, measure), delta, tol);
    case Measure::hausdorff_region:
      return decide_hausdorff_region(as_region(x, measure), as_region(center, measure), delta,
                                     tol);
    default:
      break;
  }
  const double value = measure_value(measure, x, center, tol);
  const double scale = std::max({1.0, value, radius});
  return decide_with_margin(tol, [&](const Tolerance& t) { return t.leq(value, radius, scale); });
}

double measure_value(Measure measure, const Shape& x, const Shape& center, const Tolerance& tol) {
  switch (measure) {
    case Measure::hausdorff:
      return compute_distance(as_curve(x, measure), as_curve(center, measure),
                              CurveMeasure::hausdorff, tol);
    case Measure::frechet:
      return compute_distance(as_curve(x, measure), as_curve(center, measure),
                              CurveMeasure::frechet, tol);
    case Measure::weak_frechet:
      return compute_distance(as_curve(x, measure), as_curve(center, measure),
                              CurveMeasure::weak_frechet, tol);
    case Measure::discrete_hausdorff:
      return discrete_hausdorff(as_curve(x, measure), as_curve(center, measure));
    case Measure::discrete_frechet:
      return discrete_frechet(as_curve(x, measure), as_curve(center, measure));
    case Measure::dtw:
      return dtw(as_curve(x, measure), as_curve(center, measure)).value;
    case Measure::hausdorff_region:
      return compute_hausdorff_region(as_region(x, measure), as_region(center, measure), tol);
  }
  throw InputError("unknown measure");
}

ShatterReport shatter_check(const std::vector<GroundElement>& ground,
                            const std::vector<CenterCandidate>& centers,
                            const std::vector<double>& radii, Measure measure,
                            const Tolerance& tol) {
  require_ground(ground, measure);
  for (const auto& c : centers) {
    if (shape_dim(c.shape) != shape_dim(ground[0].shape)) {
      throw DimensionError("center " + c.id + " has a different dimension than the ground set");
    }
  }
  ShatterReport report = start_report(ground);
  for (const auto& c : centers) {
    for (double r : radii) {
      ++report.evaluations;
      // Caller-chosen ranges take the decider's verdict even on the boundary.
      bool robust = true;
      const std::uint32_t mask = subset_of(ground, measure, c.shape, r, tol, robust);
      if (!report.witnesses.count(mask)) report.witnesses.emplace(mask, Witness{c.id, c.shape, r});
    }
  }
  finish_report(report, ground.size());
  return report;
}

ShatterReport random_shatter_search(const std::vector<GroundElement>& ground, Measure measure,
                                    std::size_t budget, std::uint64_t seed, const Tolerance& tol) {
  require_ground(ground, measure);
  ShatterReport report = start_report(ground);
  const std::size_t n = ground.size();
  const std::size_t wanted = std::size_t{1} << n;
  const double spread = ground_spread(ground);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const int dim = shape_dim(ground[0].shape);

  // Try radii around one center until the budget runs out.
  const auto try_center = [&](const std::string& id, const Shape& center) {
    std::vector<double> values;
    for (const auto& g : ground) values.push_back(measure_value(measure, g.shape, center, tol));
    std::sort(values.begin(), values.end());
    std::vector<double> radii;
    if (values.front() > 0.0) radii.push_back(0.5 * values.front());
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double next = i + 1 < values.size() ? values[i + 1] : 2.0 * values[i] + spread;
      if (next > values[i]) radii.push_back(0.5 * (values[i] + next));
    }
    for (double r : radii) {
      if (report.evaluations >= budget || report.witnesses.size() == wanted) return;
      ++report.evaluations;
      bool robust = true;
      const std::uint32_t mask = subset_of(ground, measure, center, r, tol, robust);
      if (robust && !report.witnesses.count(mask)) report.witnesses.emplace(mask, Witness{id, center, r});
    }
  };

  const auto done = [&] { return report.evaluations >= budget || report.witnesses.size() == wanted; };

  for (std::size_t i = 0; i < n && !done(); ++i) try_center("ground:" + ground[i].id, ground[i].shape);
  if (!done()) {
    Point far = Point::Zero(dim);
    far[0] = 100.0 * spread;
    try_center("far:0", translated(ground[0].shape, far, 1.0));
  }
  std::uniform_real_distribution<double> sigma_pick(0.01, 0.5);
  for (std::size_t round = 0; !done(); ++round) {
    const std::size_t i = pick(rng);
    const double sigma = sigma_pick(rng) * spread;
    try_center("jitter:" + std::to_string(round) + ":" + ground[i].id,
               jittered(ground[i].shape, sigma, rng));
    // A degenerate loop guard: each center costs at least one evaluation.
    if (round > budget) break;
  }

  // Keep only witnesses that reproduce their subset.
  for (auto it = report.witnesses.begin(); it != report.witnesses.end();) {
    bool robust = true;
    const std::uint32_t mask = subset_of(ground, measure, it->second.center, it->second.radius, tol, robust);
    it = (robust && mask == it->first) ? std::next(it) : report.witnesses.erase(it);
  }
  finish_report(report, n);
  return report;
}

bool verify_witnesses(const ShatterReport& report, const std::vector<GroundElement>& ground,
                      Measure measure, const Tolerance& tol) {
  for (const auto& [mask, w] : report.witnesses) {
    bool robust = true;
    if (subset_of(ground, measure, w.center, w.radius, tol, robust) != mask) return false;
  }
  return true;
}

}  // namespace elastic
