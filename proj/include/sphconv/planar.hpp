#pragma once

// Small planar helpers shared by the gnomonic hull and the Wulff code.

#include <Eigen/Dense>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

namespace sphconv::planar {

using Vec2d = Eigen::Vector2d;

inline double cross(const Vec2d& a, const Vec2d& b) { return a.x() * b.y() - a.y() * b.x(); }

/// Indices of the strictly convex hull in counterclockwise order (Andrew's
/// monotone chain). Points within a relative sine of `collinear_tol` of an
/// edge are dropped.
inline std::vector<std::size_t> convex_hull_indices(std::span<const Vec2d> pts, double collinear_tol = 1e-11) {
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return pts[a].x() < pts[b].x() || (pts[a].x() == pts[b].x() && pts[a].y() < pts[b].y());
  });
  idx.erase(std::unique(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
            idx.end());
  if (idx.size() < 3) return idx;

  auto turns_left = [&](std::size_t o, std::size_t a, std::size_t b) {
    const Vec2d oa = pts[a] - pts[o];
    const Vec2d ob = pts[b] - pts[o];
    return cross(oa, ob) > collinear_tol * oa.norm() * ob.norm();
  };

  std::vector<std::size_t> hull(2 * idx.size());
  std::size_t k = 0;
  for (std::size_t i : idx) {
    while (k >= 2 && !turns_left(hull[k - 2], hull[k - 1], i)) --k;
    hull[k++] = i;
  }
  for (std::size_t j = idx.size() - 1, t = k + 1; j-- > 0;) {
    const std::size_t i = idx[j];
    while (k >= t && !turns_left(hull[k - 2], hull[k - 1], i)) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

inline double signed_area(std::span<const Vec2d> poly) {
  double a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) a += cross(poly[i], poly[(i + 1) % poly.size()]);
  return 0.5 * a;
}

/// Euclidean distance from p to the closed convex polygon (0 inside).
inline double distance_to_convex_polygon(const Vec2d& p, std::span<const Vec2d> poly) {
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2d& a = poly[i];
    const Vec2d& b = poly[(i + 1) % poly.size()];
    const Vec2d ab = b - a;
    if (cross(ab, p - a) < 0) inside = false;
    const double t = std::clamp((p - a).dot(ab) / ab.squaredNorm(), 0.0, 1.0);
    best = std::min(best, (a + t * ab - p).norm());
  }
  return inside ? 0.0 : best;
}

/// Exact Hausdorff distance between convex polygons (attained at vertices).
inline double hausdorff(std::span<const Vec2d> a, std::span<const Vec2d> b) {
  double h = 0;
  for (const auto& p : a) h = std::max(h, distance_to_convex_polygon(p, b));
  for (const auto& p : b) h = std::max(h, distance_to_convex_polygon(p, a));
  return h;
}

}  // namespace sphconv::planar
