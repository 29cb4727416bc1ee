#pragma once

// Width, thickness and diameter of spherical convex bodies, and the verdicts
// built on them (constant width, constant diameter, reducedness).
//
// Supporting hemispheres of a body C are parameterized by the boundary of its
// polar dual C°: H(k) supports C exactly when k lies on bd(C°). The width
// determined by H(k) is the smallest thickness of a lune H(k) ∩ H(k') over
// the other supporting hemispheres; we evaluate it literally (lune thickness
// from the semicircle centers) and, independently, as pi minus the largest
// distance from k to C°.

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "sphconv/convex_body.hpp"

namespace sphconv {

inline constexpr std::size_t kDefaultSamples = 720;
inline constexpr double kDefaultTolerance = 1e-6;

struct WidthSample {
  UnitVec support_center;
  double width = 0;
  UnitVec opposing_center;
  /// pi - max distance from support_center to the dual body.
  double dual_form_width = 0;
};

struct ThicknessResult {
  double value = 0;
  WidthSample witness;
};

struct DiameterResult {
  double value = 0;
  UnitVec p;
  UnitVec q;
};

/// Sampled width profile over the supporting-center curve, with refined extremes.
struct WidthProfile {
  std::vector<UnitVec> centers;
  std::vector<double> widths;
  WidthSample min;
  WidthSample max;
};

enum class VerdictKind { constant_width, constant_diameter, reduced_necessary, self_dual_aux };

std::string to_string(VerdictKind kind);

struct Witness {
  std::string description;
  std::vector<UnitVec> points;
};

struct Verdict {
  VerdictKind kind = VerdictKind::constant_width;
  bool pass = false;
  double deviation = 0;
  double tolerance = kDefaultTolerance;
  /// The measured quantity: width for constant width, diameter for constant
  /// diameter, thickness for the reducedness check.
  double value = 0;
  Witness witness;
};

struct ReducedReport {
  Verdict verdict;
  /// Largest (narrowest lune through an extreme point) - thickness. Below
  /// tol/4 the search stops early, so small values are upper bounds.
  double necessary_excess = 0;
  /// Smallest thickness drop over the corner-cut probes (+inf without corners).
  /// After the first failing probe, later drops are lower bounds.
  double min_drop = std::numeric_limits<double>::infinity();
  std::size_t points_checked = 0;
  std::size_t corners_probed = 0;
};

struct TheoremCheck {
  bool applicable = false;
  bool holds = true;
};

struct Classification {
  double thickness = 0;
  double diameter = 0;
  WidthProfile profile;
  DiameterResult diameter_witness;
  Verdict constant_width;
  Verdict constant_diameter;
  ReducedReport reduced;
  std::map<std::string, TheoremCheck> checks;
};

/// Thickness of the lune H(g) ∩ H(h) evaluated from its definition.
double lune_thickness(const UnitVec& g, const UnitVec& h);

/// Width of `body` determined by the supporting hemisphere H(support_center).
/// Throws NotSupporting unless min over the body of x . center is within 1e-8 of 0.
WidthSample width_at(const SphericalBody& body, const UnitVec& support_center, std::size_t n = kDefaultSamples);

WidthProfile width_profile(const SphericalBody& body, std::size_t n = kDefaultSamples);
ThicknessResult thickness(const SphericalBody& body, std::size_t n = kDefaultSamples);
DiameterResult diameter(const SphericalBody& body, std::size_t n = kDefaultSamples);
/// Largest distance over pairs of segment junctions.
double vertex_diameter(const SphericalBody& body);

Verdict is_constant_width(const SphericalBody& body, double tol = kDefaultTolerance, std::size_t n = kDefaultSamples);
Verdict is_constant_width(const WidthProfile& profile, double tol);
Verdict is_constant_diameter(const SphericalBody& body, double tol = kDefaultTolerance,
                             std::size_t n = kDefaultSamples);

/// Heuristic reducedness test: a necessary condition (a lune of thickness
/// Delta through every extreme point, with that point as a semicircle center)
/// plus a refutation probe (shaving any corner must lower the thickness).
/// Passing does not prove the body reduced.
ReducedReport reduced_check(const SphericalBody& body, double tol = kDefaultTolerance,
                            std::size_t n = kDefaultSamples);
ReducedReport reduced_check(const SphericalBody& body, double tol, std::size_t n, double known_thickness);

/// Narrowest lune thickness among lunes containing the body that have `e` as
/// the center of one bounding semicircle; `cone` spans the supporting centers at e.
/// The search stops early once a lune no thicker than `good_enough` is found,
/// so the result is then only an upper bound.
double narrowest_lune_through(const SphericalBody& body, const Vec3d& e, const Vec3d& cone_from,
                              const Vec3d& cone_to, UnitVec* best_i = nullptr, double good_enough = -1);

Classification classify(const SphericalBody& body, double tol = kDefaultTolerance, std::size_t n = kDefaultSamples);

}  // namespace sphconv
