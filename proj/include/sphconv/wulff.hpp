#pragma once

// Planar Wulff shapes, their duals, and the central projection that carries
// them to convex bodies on the sphere.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sphconv/convex_body.hpp"
#include "sphconv/metrics.hpp"
#include "sphconv/planar.hpp"

namespace sphconv {

using planar::Vec2d;

/// Positive surface-energy function on the circle of directions, sampled at
/// increasing angles in [0, 2pi) and interpolated linearly with wrap-around.
class GammaFn {
 public:
  GammaFn(std::vector<double> angles, std::vector<double> values);

  /// n equispaced samples of f.
  template <typename F>
  static GammaFn sampled(F&& f, std::size_t n) {
    std::vector<double> a(n), v(n);
    for (std::size_t k = 0; k < n; ++k) {
      a[k] = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      v[k] = f(a[k]);
    }
    return GammaFn(std::move(a), std::move(v));
  }

  double operator()(double theta) const;
  const std::vector<double>& angles() const noexcept { return angles_; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<double> angles_;
  std::vector<double> values_;
};

struct WulffShape {
  /// Counterclockwise, strictly convex, origin strictly inside.
  std::vector<Vec2d> boundary;
  GammaFn gamma;
};

/// Pole N of the central projection with an orthonormal basis (u, v) of the
/// tangent plane at N; (u, v, N) is right-handed.
struct ProjectionFrame {
  UnitVec pole;
  Vec3d u;
  Vec3d v;

  static ProjectionFrame at(const UnitVec& pole);
  /// Basis from a hint direction projected into the tangent plane.
  static ProjectionFrame at(const UnitVec& pole, const Vec3d& u_hint);
};

struct DualityReport {
  bool self_dual = false;
  double hausdorff_gap = 0;
  /// constant_width_pi2, reduced_thickness_pi2, reduced_diameter_pi2, constant_diameter_pi2.
  std::map<std::string, Verdict> conditions;
  double thickness = 0;
  double diameter = 0;
  double tolerance = 0;

  bool all_agree() const;
};

/// Intersection of the half-planes x . theta <= gamma(theta) over n equispaced
/// directions and every sample angle of gamma.
WulffShape wulff_shape(const GammaFn& gamma, std::size_t n = kDefaultSamples);

/// Wulff shape of a convex polygon given directly (origin strictly inside);
/// gamma records the support values at the edge-normal angles.
WulffShape wulff_from_polygon(std::vector<Vec2d> polygon);

/// Distance from the origin to the boundary along direction theta.
double radial_w(const WulffShape& shape, double theta);

/// Wulff shape of gammabar(theta) = 1 / w(theta + pi), sampled at n equispaced
/// angles, at the sample angles of shape.gamma, and opposite every corner of
/// the shape that turns by more than two grid steps.
WulffShape dual_wulff(const WulffShape& shape, std::size_t n = kDefaultSamples);

/// (gap <= tol, gap) with gap the Hausdorff distance between shape and its dual.
std::pair<bool, double> is_self_dual(const WulffShape& shape, double tol, std::size_t n = kDefaultSamples);

Vec2d project_point(const Vec3d& p, const ProjectionFrame& frame);
UnitVec lift_point(const Vec2d& x, const ProjectionFrame& frame);

/// Central projection of n boundary samples (weighted by arc length plus
/// normal turning) followed by the planar hull.
WulffShape project_to_plane(const SphericalBody& body, const ProjectionFrame& frame, std::size_t n = kDefaultSamples);

/// Spherical hull of the lifted polygon vertices. Edges lift to great arcs, so
/// the vertices determine the body exactly.
SphericalBody induce_spherical(const WulffShape& shape, const ProjectionFrame& frame);

/// The four conditions on the induced body and the self-duality verdict,
/// evaluated at `tol`. Throws InconsistentVerdicts when one condition holds at
/// tol while another fails even at 10 tol.
DualityReport self_dual_equivalence_report(const WulffShape& shape, const ProjectionFrame& frame, double tol,
                                           std::size_t n = kDefaultSamples);

}  // namespace sphconv
