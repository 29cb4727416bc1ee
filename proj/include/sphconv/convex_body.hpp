#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sphconv/sphere_core.hpp"

namespace sphconv {

using Vec3d = Vec3<double>;

inline constexpr double kHalfPi = std::numbers::pi / 2;

/// One circular arc of a body boundary. The arc runs counterclockwise about
/// `center` (positive rotation about the axis), so the body lies on the side
/// of the center. radius == pi/2 is a great-circle edge.
class BoundarySegment {
 public:
  BoundarySegment(const UnitVec& center, double radius, const UnitVec& start, const UnitVec& end);

  /// Great-circle edge from a to b whose pole lies to the left of travel.
  static BoundarySegment great_edge(const UnitVec& a, const UnitVec& b);

  const UnitVec& center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  const UnitVec& start() const noexcept { return start_; }
  const UnitVec& end() const noexcept { return end_; }
  bool is_great() const noexcept { return radius_ >= kHalfPi - 1e-12; }

  /// Rotation angle from start to end about the center, in (0, 2pi].
  double sweep() const noexcept { return sweep_; }
  double length() const noexcept { return sweep_ * std::sin(radius_); }

  Vec3d point(double phi) const;
  /// Unit direction of travel at angle phi.
  Vec3d tangent(double phi) const;
  /// Center of the hemisphere supporting the body at point(phi).
  Vec3d normal(double phi) const;

  /// Angle in [0, sweep] of the arc point minimizing (sign = +1: maximizing) x . q.
  double extremal_angle(const Vec3d& q, int sign) const;

 private:
  UnitVec center_;
  double radius_;
  UnitVec start_;
  UnitVec end_;
  Vec3d u_;
  Vec3d w_;
  double sweep_;
};

/// Result of a support query: min over the body of x . c and where it occurs.
struct SupportPoint {
  double value;
  Vec3d point;
  std::size_t segment;
  double angle;
};

struct ExtremeSet {
  std::vector<UnitVec> isolated;
  std::vector<std::size_t> strict_arcs;
};

/// Closed convex body of S^2 bounded by a cyclic list of circular arcs.
/// Construction validates closure, arc geometry, convexity and containment in
/// an open hemisphere; the object is immutable afterwards.
class SphericalBody {
 public:
  explicit SphericalBody(std::vector<BoundarySegment> segments);

  /// Polygon from counterclockwise vertices.
  static SphericalBody polygon(std::span<const UnitVec> vertices);

  const std::vector<BoundarySegment>& segments() const noexcept { return segments_; }
  /// Interior point with the whole body strictly inside the open hemisphere around it.
  const UnitVec& enclosing_center() const noexcept { return center_; }
  double perimeter() const noexcept { return perimeter_; }
  bool is_polygon() const noexcept;
  /// Segment start points, i.e. the junctions.
  std::vector<UnitVec> vertices() const;

  /// Boundary point at arc-length parameter s (taken modulo the perimeter).
  Vec3d point_at(double s) const;
  /// Supporting-hemisphere center at arc-length parameter s; at a corner the
  /// normal of the outgoing segment.
  Vec3d normal_at(double s) const;
  double segment_offset(std::size_t i) const { return offsets_[i]; }

  /// min over the body of x . c (attained on the boundary).
  SupportPoint support(const Vec3d& c) const;
  /// Point of the body farthest from q and its distance.
  SupportPoint farthest(const Vec3d& q) const;
  /// Distance from p to the boundary curve.
  double boundary_distance(const Vec3d& p) const;

  bool contains(const Vec3d& p, double tol = 1e-9) const;
  bool contains(const UnitVec& p, double tol = 1e-9) const { return contains(p.vec(), tol); }

 private:
  void validate_and_index();

  std::vector<BoundarySegment> segments_;
  std::vector<double> offsets_;  // arc-length offset of each segment start
  double perimeter_ = 0;
  UnitVec center_;
  Vec3d frame_u_;
  Vec3d frame_v_;
  std::vector<double> bearings_;  // unwrapped bearing of each segment start about center_
};

/// Convex hull of points lying in some open hemisphere.
SphericalBody hull_from_points(std::span<const UnitVec> points);

/// Center c maximizing min_i c . p_i, and that minimum. Throws
/// NoEnclosingHemisphere when the minimum cannot exceed 1e-6.
std::pair<UnitVec, double> enclosing_hemisphere_center(std::span<const Vec3d> points);

bool contains(const SphericalBody& body, const UnitVec& p, double tol = 1e-9);

/// Whether the body lies in both hemispheres of the lune, using the exact
/// support value of each hemisphere center.
bool lune_contains(const LuneD& lune, const SphericalBody& body, double tol = 1e-10);

enum class SampleWeight {
  arc_length,
  /// Arc length plus normal turning, so both the body and its polar dual are
  /// resolved evenly (small arcs of large turning get their share).
  arc_and_normal,
};

/// n boundary points in order, including every segment junction, spread over
/// each segment proportionally to its weight and uniformly in angle within it.
std::vector<UnitVec> boundary_sample(const SphericalBody& body, std::size_t n,
                                     SampleWeight weight = SampleWeight::arc_length);
/// Arc-length parameters of the points returned by boundary_sample.
std::vector<double> boundary_sample_params(const SphericalBody& body, std::size_t n);

ExtremeSet extreme_points(const SphericalBody& body);

/// Interior angle (measured inside the body) at the start of segment i.
double junction_turn(const SphericalBody& body, std::size_t i);

/// Exact polar dual {c : x . c >= 0 for all x in body}. Arcs of radius r map to
/// arcs of radius pi/2 - r about the same center, corners map to great edges.
SphericalBody polar_dual(const SphericalBody& body);

/// n centers of supporting hemispheres, ordered along the boundary of the dual.
std::vector<UnitVec> supporting_hemisphere_centers(const SphericalBody& body, std::size_t n);

/// body intersected with the hemisphere H(c).
SphericalBody clip(const SphericalBody& body, const UnitVec& c);

/// Symmetric Hausdorff distance between the boundary curves, from n samples
/// per side measured against the exact opposite boundary.
double boundary_hausdorff(const SphericalBody& a, const SphericalBody& b, std::size_t n = 2048);

}  // namespace sphconv
