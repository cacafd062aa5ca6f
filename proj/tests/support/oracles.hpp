// Independent brute-force oracles. These use plain arrays and their own
// distance code so they share no logic with the library.
#ifndef ELASTIC_TESTS_ORACLES_HPP
#define ELASTIC_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

#include "elastic/curves.hpp"
#include "elastic/region.hpp"

namespace oracle {

using V2 = std::array<double, 2>;
using Poly = std::vector<V2>;

inline V2 v2(const elastic::Point& p) { return {p[0], p[1]}; }

inline double seg_dist(const V2& v, const V2& a, const V2& b) {
  const double dx = b[0] - a[0], dy = b[1] - a[1];
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((v[0] - a[0]) * dx + (v[1] - a[1]) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(v[0] - a[0] - t * dx, v[1] - a[1] - t * dy);
}

// General dimension variant for curve oracles.
inline double seg_dist_nd(const std::vector<double>& v, const std::vector<double>& a,
                          const std::vector<double>& b) {
  double len2 = 0, dot = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    len2 += (b[i] - a[i]) * (b[i] - a[i]);
    dot += (v[i] - a[i]) * (b[i] - a[i]);
  }
  const double t = len2 > 0 ? std::clamp(dot / len2, 0.0, 1.0) : 0.0;
  double s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double c = v[i] - a[i] - t * (b[i] - a[i]);
    s += c * c;
  }
  return std::sqrt(s);
}

inline std::vector<std::vector<double>> raw(const elastic::PolygonalCurve& c) {
  std::vector<std::vector<double>> out;
  for (const auto& p : c.vertices()) out.emplace_back(p.data(), p.data() + p.size());
  return out;
}

inline double dist_to_curve(const std::vector<double>& v, const std::vector<std::vector<double>>& q) {
  if (q.size() == 1) return seg_dist_nd(v, q[0], q[0]);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j + 1 < q.size(); ++j) best = std::min(best, seg_dist_nd(v, q[j], q[j + 1]));
  return best;
}

// Directed Hausdorff estimate: max over `samples` evenly spaced points per edge of P.
inline double directed_hausdorff_sampled(const elastic::PolygonalCurve& p,
                                         const elastic::PolygonalCurve& q, int samples) {
  const auto pv = raw(p);
  const auto qv = raw(q);
  double best = 0.0;
  if (pv.size() == 1) return dist_to_curve(pv[0], qv);
  std::vector<double> x(pv[0].size());
  for (std::size_t i = 0; i + 1 < pv.size(); ++i) {
    for (int s = 0; s < samples; ++s) {
      const double t = samples == 1 ? 0.0 : static_cast<double>(s) / (samples - 1);
      for (std::size_t c = 0; c < x.size(); ++c) x[c] = pv[i][c] + t * (pv[i + 1][c] - pv[i][c]);
      best = std::max(best, dist_to_curve(x, qv));
    }
  }
  return best;
}

// Discrete Frechet by memoized recursion over all couplings.
inline double discrete_frechet_recursive(const elastic::PolygonalCurve& p,
                                         const elastic::PolygonalCurve& q) {
  const std::size_t m = p.size(), k = q.size();
  std::vector<double> memo(m * k, -1.0);
  std::function<double(std::size_t, std::size_t)> c = [&](std::size_t i, std::size_t j) {
    double& slot = memo[i * k + j];
    if (slot >= 0) return slot;
    const double d = (p.vertex(i) - q.vertex(j)).norm();
    double prev;
    if (i == 0 && j == 0) prev = 0.0;
    else if (i == 0) prev = c(0, j - 1);
    else if (j == 0) prev = c(i - 1, 0);
    else prev = std::min({c(i - 1, j), c(i, j - 1), c(i - 1, j - 1)});
    return slot = std::max(prev, d);
  };
  return c(m - 1, k - 1);
}

// Enumerates all monotone step paths (1,1) -> (m,k); calls visit with each.
inline void enumerate_warping_paths(std::size_t m, std::size_t k,
                                    const std::function<void(const elastic::WarpingPath&)>& visit) {
  elastic::WarpingPath path;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i, std::size_t j) {
    path.pairs.emplace_back(i, j);
    if (i == m && j == k) {
      visit(path);
    } else {
      if (i < m && j < k) go(i + 1, j + 1);
      if (i < m) go(i + 1, j);
      if (j < k) go(i, j + 1);
    }
    path.pairs.pop_back();
  };
  go(1, 1);
}

// Crossing-number parity with the half-open rule; no tolerance.
inline bool ring_parity(const V2& v, const Poly& ring) {
  bool odd = false;
  for (std::size_t i = 0, j = ring.size() - 1; i < ring.size(); j = i++) {
    const V2& a = ring[i];
    const V2& b = ring[j];
    if ((a[1] > v[1]) != (b[1] > v[1]) &&
        v[0] < (b[0] - a[0]) * (v[1] - a[1]) / (b[1] - a[1]) + a[0]) {
      odd = !odd;
    }
  }
  return odd;
}

struct Region {
  Poly outer;
  std::vector<Poly> holes;

  explicit Region(const elastic::PolygonalRegion& r) {
    for (const auto& p : r.outer().vertices()) outer.push_back(v2(p));
    for (const auto& h : r.holes()) {
      holes.emplace_back();
      for (const auto& p : h.vertices()) holes.back().push_back(v2(p));
    }
  }

  std::vector<const Poly*> rings() const {
    std::vector<const Poly*> out{&outer};
    for (const auto& h : holes) out.push_back(&h);
    return out;
  }

  bool contains(const V2& v) const {
    if (!ring_parity(v, outer)) return false;
    for (const auto& h : holes) {
      if (ring_parity(v, h)) return false;
    }
    return true;
  }

  double boundary_distance(const V2& v) const {
    double best = std::numeric_limits<double>::infinity();
    for (const Poly* r : rings()) {
      for (std::size_t i = 0; i < r->size(); ++i) {
        best = std::min(best, seg_dist(v, (*r)[i], (*r)[(i + 1) % r->size()]));
      }
    }
    return best;
  }

  double distance(const V2& v) const { return contains(v) ? 0.0 : boundary_distance(v); }

  std::array<double, 4> bbox() const {
    std::array<double, 4> b{1e300, 1e300, -1e300, -1e300};
    for (const auto& p : outer) {
      b[0] = std::min(b[0], p[0]);
      b[1] = std::min(b[1], p[1]);
      b[2] = std::max(b[2], p[0]);
      b[3] = std::max(b[3], p[1]);
    }
    return b;
  }
};

// Monte-Carlo directed Hausdorff from P to Q: uniform interior samples of P
// plus every vertex and `boundary_samples` points per boundary edge.
inline double directed_hausdorff_region_mc(const elastic::PolygonalRegion& p,
                                           const elastic::PolygonalRegion& q, int interior_samples,
                                           int boundary_samples, std::uint64_t seed) {
  const Region rp(p), rq(q);
  double best = 0.0;
  for (const Poly* r : rp.rings()) {
    for (std::size_t i = 0; i < r->size(); ++i) {
      const V2& a = (*r)[i];
      const V2& b = (*r)[(i + 1) % r->size()];
      for (int s = 0; s < boundary_samples; ++s) {
        const double t = static_cast<double>(s) / boundary_samples;
        best = std::max(best, rq.distance({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])}));
      }
    }
  }
  std::mt19937_64 rng(seed);
  const auto box = rp.bbox();
  std::uniform_real_distribution<double> ux(box[0], box[2]), uy(box[1], box[3]);
  std::vector<std::pair<double, V2>> top;
  for (int s = 0; s < interior_samples; ++s) {
    const V2 v{ux(rng), uy(rng)};
    if (!rp.contains(v)) continue;
    const double d = rq.distance(v);
    best = std::max(best, d);
    top.push_back({d, v});
  }
  // Compass search from the best samples sharpens interior maxima.
  const std::size_t keep = std::min<std::size_t>(top.size(), 16);
  std::partial_sort(top.begin(), top.begin() + keep, top.end(),
                    [](const auto& x, const auto& y) { return x.first > y.first; });
  const double start_step = 0.02 * std::max(box[2] - box[0], box[3] - box[1]);
  for (std::size_t i = 0; i < keep; ++i) {
    auto [d, v] = top[i];
    for (double step = start_step; step > 1e-9;) {
      bool moved = false;
      for (const V2 dir : {V2{1, 0}, V2{-1, 0}, V2{0, 1}, V2{0, -1}, V2{0.7071, 0.7071},
                           V2{-0.7071, 0.7071}, V2{0.7071, -0.7071}, V2{-0.7071, -0.7071}}) {
        const V2 w{v[0] + step * dir[0], v[1] + step * dir[1]};
        if (!rp.contains(w)) continue;
        const double dw = rq.distance(w);
        if (dw > d) {
          d = dw;
          v = w;
          moved = true;
        }
      }
      if (!moved) step *= 0.5;
    }
    best = std::max(best, d);
  }
  return best;
}

// Points equidistant from three segments, found by scanning a grid for local
// minima of |da - db| + |db - dc| and polishing them with Newton steps on
// (da - db, db - dc). Only converged points are returned.
inline std::vector<V2> equidistant_points(const std::array<std::array<V2, 2>, 3>& segs,
                                          const std::array<double, 4>& box, int grid = 200,
                                          int newton_steps = 20) {
  const auto dist = [&](const V2& v, int s) { return seg_dist(v, segs[s][0], segs[s][1]); };
  const auto f = [&](const V2& v) {
    const double a = dist(v, 0), b = dist(v, 1), c = dist(v, 2);
    return std::abs(a - b) + std::abs(b - c);
  };
  // Gradient of the distance to segment s at v.
  const auto grad = [&](const V2& v, int s) -> V2 {
    const V2& a = segs[s][0];
    const V2& b = segs[s][1];
    const double dx = b[0] - a[0], dy = b[1] - a[1];
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((v[0] - a[0]) * dx + (v[1] - a[1]) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const double ex = v[0] - a[0] - t * dx, ey = v[1] - a[1] - t * dy;
    const double n = std::hypot(ex, ey);
    if (n == 0) return {0, 0};
    return {ex / n, ey / n};
  };

  const double hx = (box[2] - box[0]) / grid, hy = (box[3] - box[1]) / grid;
  std::vector<double> values((grid + 1) * (grid + 1));
  for (int i = 0; i <= grid; ++i) {
    for (int j = 0; j <= grid; ++j) values[i * (grid + 1) + j] = f({box[0] + i * hx, box[1] + j * hy});
  }
  std::vector<V2> out;
  for (int i = 1; i < grid; ++i) {
    for (int j = 1; j < grid; ++j) {
      const double here = values[i * (grid + 1) + j];
      bool minimum = true;
      for (int di = -1; di <= 1 && minimum; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if ((di || dj) && values[(i + di) * (grid + 1) + j + dj] < here) {
            minimum = false;
            break;
          }
        }
      }
      if (!minimum) continue;
      V2 v{box[0] + i * hx, box[1] + j * hy};
      for (int it = 0; it < newton_steps; ++it) {
        const double r0 = dist(v, 0) - dist(v, 1);
        const double r1 = dist(v, 1) - dist(v, 2);
        const V2 g0 = grad(v, 0), g1 = grad(v, 1), g2 = grad(v, 2);
        const double a = g0[0] - g1[0], b = g0[1] - g1[1];
        const double c = g1[0] - g2[0], d = g1[1] - g2[1];
        const double det = a * d - b * c;
        if (std::abs(det) < 1e-14) break;
        v = {v[0] - (d * r0 - b * r1) / det, v[1] - (-c * r0 + a * r1) / det};
      }
      // Newton can run off to infinity, where all three distances agree to
      // rounding. Only points inside the scanned box count.
      if (!(v[0] >= box[0] && v[0] <= box[2] && v[1] >= box[1] && v[1] <= box[3])) continue;
      const double scale = std::max({1.0, std::abs(v[0]), std::abs(v[1])});
      if (f(v) > 1e-10 * scale) continue;
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace oracle

#endif  // ELASTIC_TESTS_ORACLES_HPP
