#include "sphconv/wulff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace sphconv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2 * kPi;

double wrap(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  return a < kTwoPi ? a : 0.0;
}

Vec2d direction(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// Support values h(theta) = max over the polygon of x . theta at its edge normals.
GammaFn edge_support(const std::vector<Vec2d>& poly) {
  std::vector<std::pair<double, double>> s;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2d e = poly[(i + 1) % poly.size()] - poly[i];
    const Vec2d nrm = Vec2d(e.y(), -e.x()).normalized();
    s.emplace_back(wrap(std::atan2(nrm.y(), nrm.x())), nrm.dot(poly[i]));
  }
  std::sort(s.begin(), s.end());
  std::vector<double> a, v;
  for (const auto& [angle, value] : s) {
    if (!a.empty() && angle - a.back() < 1e-15) continue;
    a.push_back(angle);
    v.push_back(value);
  }
  return GammaFn(std::move(a), std::move(v));
}

void require_origin_inside(const std::vector<Vec2d>& poly, ErrorKind kind, const char* what) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2d& a = poly[i];
    const Vec2d& b = poly[(i + 1) % poly.size()];
    if (planar::cross(b - a, -a) <= 1e-12 * (b - a).norm()) throw Error(kind, what);
  }
}

}  // namespace

GammaFn::GammaFn(std::vector<double> angles, std::vector<double> values)
    : angles_(std::move(angles)), values_(std::move(values)) {
  if (angles_.empty() || angles_.size() != values_.size()) {
    throw Error(ErrorKind::InvalidSpec, "gamma needs matching, nonempty angle and value lists");
  }
  for (std::size_t i = 0; i < angles_.size(); ++i) {
    if (!std::isfinite(angles_[i]) || angles_[i] < 0 || angles_[i] >= kTwoPi) {
      throw Error(ErrorKind::InvalidSpec, "gamma angles must lie in [0, 2pi)");
    }
    if (i > 0 && !(angles_[i] > angles_[i - 1])) throw Error(ErrorKind::InvalidSpec, "gamma angles must increase");
    if (!(values_[i] > 0) || !std::isfinite(values_[i])) throw Error(ErrorKind::InvalidSpec, "gamma values must be positive");
  }
}

double GammaFn::operator()(double theta) const {
  const std::size_t n = angles_.size();
  if (n == 1) return values_[0];
  theta = wrap(theta);
  auto it = std::upper_bound(angles_.begin(), angles_.end(), theta);
  const std::size_t hi = static_cast<std::size_t>(it - angles_.begin()) % n;
  const std::size_t lo = (hi + n - 1) % n;
  double span = angles_[hi] - angles_[lo];
  double off = theta - angles_[lo];
  if (span <= 0) span += kTwoPi;
  if (off < 0) off += kTwoPi;
  const double t = off / span;
  return (1 - t) * values_[lo] + t * values_[hi];
}

ProjectionFrame ProjectionFrame::at(const UnitVec& pole) {
  const auto [u, v] = tangent_basis(pole.vec());
  return {pole, u, v};
}

ProjectionFrame ProjectionFrame::at(const UnitVec& pole, const Vec3d& u_hint) {
  Vec3d u = u_hint - u_hint.dot(pole.vec()) * pole.vec();
  if (u.norm() < 1e-9) throw Error(ErrorKind::InvalidSpec, "frame hint is parallel to the pole");
  u.normalize();
  return {pole, u, pole.vec().cross(u)};
}

bool DualityReport::all_agree() const {
  for (const auto& [name, v] : conditions) {
    if (v.pass != self_dual) return false;
  }
  return true;
}

WulffShape wulff_shape(const GammaFn& gamma, std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidSpec, "a Wulff shape needs at least 3 directions");
  std::vector<double> thetas;
  for (std::size_t k = 0; k < n; ++k) thetas.push_back(kTwoPi * static_cast<double>(k) / static_cast<double>(n));
  thetas.insert(thetas.end(), gamma.angles().begin(), gamma.angles().end());
  std::sort(thetas.begin(), thetas.end());
  thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());

  // x . theta <= gamma  <=>  x . (theta / gamma) <= 1: the intersection is the
  // polar of the hull of the points theta / gamma, one vertex per hull edge.
  std::vector<Vec2d> dual;
  dual.reserve(thetas.size());
  for (double t : thetas) dual.push_back(direction(t) / gamma(t));
  const auto idx = planar::convex_hull_indices(dual);
  if (idx.size() < 3) throw Error(ErrorKind::EmptyInterior, "half-plane directions do not surround the origin");
  std::vector<Vec2d> hull;
  for (auto i : idx) hull.push_back(dual[i]);
  require_origin_inside(hull, ErrorKind::EmptyInterior, "half-plane intersection is unbounded");

  std::vector<Vec2d> boundary;
  boundary.reserve(hull.size());
  for (std::size_t i = 0; i < hull.size(); ++i) {
    Eigen::Matrix2d m;
    m.row(0) = hull[i].transpose();
    m.row(1) = hull[(i + 1) % hull.size()].transpose();
    boundary.push_back(m.partialPivLu().solve(Vec2d(1, 1)));
  }
  return {std::move(boundary), gamma};
}

WulffShape wulff_from_polygon(std::vector<Vec2d> polygon) {
  const auto idx = planar::convex_hull_indices(polygon);
  if (idx.size() < 3) throw Error(ErrorKind::EmptyInterior, "polygon has no interior");
  std::vector<Vec2d> hull;
  for (auto i : idx) hull.push_back(polygon[i]);
  require_origin_inside(hull, ErrorKind::EmptyInterior, "origin is not interior to the polygon");
  GammaFn gamma = edge_support(hull);
  return {std::move(hull), std::move(gamma)};
}

double radial_w(const WulffShape& shape, double theta) {
  const Vec2d d = direction(theta);
  const auto& p = shape.boundary;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vec2d e = p[(i + 1) % p.size()] - p[i];
    const Vec2d nrm(e.y(), -e.x());
    const double along = nrm.dot(d);
    if (along > 0) best = std::min(best, nrm.dot(p[i]) / along);
  }
  return best;
}

WulffShape dual_wulff(const WulffShape& shape, std::size_t n) {
  // Equispaced samples, plus the angles at which the shape's own gamma is
  // sampled: the dual then has facets along the shape's facets, which resolves
  // flat stretches that an equispaced grid alone cuts coarsely.
  std::vector<double> angles;
  const double step = kTwoPi / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) angles.push_back(step * static_cast<double>(k));
  angles.insert(angles.end(), shape.gamma.angles().begin(), shape.gamma.angles().end());
  // gammabar has a kink opposite every corner of the shape; corners sharper
  // than the grid would otherwise be rounded off to first order in the step.
  const auto& p = shape.boundary;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Vec2d in = p[i] - p[(i + p.size() - 1) % p.size()];
    const Vec2d out = p[(i + 1) % p.size()] - p[i];
    const double turn = std::atan2(planar::cross(in, out), in.dot(out));
    if (turn > 2 * step) angles.push_back(wrap(std::atan2(p[i].y(), p[i].x()) - kPi));
  }
  std::sort(angles.begin(), angles.end());
  std::vector<double> a, v;
  for (double t : angles) {
    if (!a.empty() && t - a.back() < 1e-14) continue;
    a.push_back(t);
    v.push_back(1.0 / radial_w(shape, t + kPi));
  }
  return wulff_shape(GammaFn(std::move(a), std::move(v)), n);
}

std::pair<bool, double> is_self_dual(const WulffShape& shape, double tol, std::size_t n) {
  const double gap = planar::hausdorff(shape.boundary, dual_wulff(shape, n).boundary);
  return {gap <= tol, gap};
}

Vec2d project_point(const Vec3d& p, const ProjectionFrame& f) {
  const double h = p.dot(f.pole.vec());
  return {p.dot(f.u) / h, p.dot(f.v) / h};
}

UnitVec lift_point(const Vec2d& x, const ProjectionFrame& f) {
  return UnitVec(f.pole.vec() + x.x() * f.u + x.y() * f.v);
}

WulffShape project_to_plane(const SphericalBody& body, const ProjectionFrame& frame, std::size_t n) {
  const double low = body.support(frame.pole.vec()).value;
  if (!(low > 1e-6)) {
    throw Error(ErrorKind::NotInHemisphere, "body is not inside the open hemisphere around the pole (min dot " +
                                                std::to_string(low) + ")");
  }
  if (!body.contains(frame.pole.vec(), 0) || body.boundary_distance(frame.pole.vec()) < 1e-9) {
    throw Error(ErrorKind::PoleNotInterior, "projection pole is not interior to the body");
  }
  std::vector<Vec2d> pts;
  for (const auto& p : boundary_sample(body, std::max(n, body.segments().size()), SampleWeight::arc_and_normal)) {
    pts.push_back(project_point(p.vec(), frame));
  }
  return wulff_from_polygon(std::move(pts));
}

SphericalBody induce_spherical(const WulffShape& shape, const ProjectionFrame& frame) {
  std::vector<UnitVec> lifted;
  lifted.reserve(shape.boundary.size());
  for (const auto& x : shape.boundary) lifted.push_back(lift_point(x, frame));
  return hull_from_points(lifted);
}

namespace {

std::map<std::string, Verdict> duality_conditions(const Classification& c, double tol) {
  const double half = kHalfPi;
  auto at_half = [&](Verdict v, bool base_pass, double base_dev, double value) {
    const double off = std::abs(value - half);
    v.pass = base_pass && off <= tol;
    v.deviation = std::max(base_dev, off);
    v.tolerance = tol;
    v.value = value;
    return v;
  };
  std::map<std::string, Verdict> out;
  out["constant_width_pi2"] =
      at_half(c.constant_width, c.constant_width.pass, c.constant_width.deviation, c.constant_width.value);
  out["reduced_thickness_pi2"] =
      at_half(c.reduced.verdict, c.reduced.verdict.pass, c.reduced.verdict.deviation, c.thickness);
  out["reduced_diameter_pi2"] =
      at_half(c.reduced.verdict, c.reduced.verdict.pass, c.reduced.verdict.deviation, c.diameter);
  out["constant_diameter_pi2"] =
      at_half(c.constant_diameter, c.constant_diameter.pass, c.constant_diameter.deviation, c.diameter);
  return out;
}

}  // namespace

DualityReport self_dual_equivalence_report(const WulffShape& shape, const ProjectionFrame& frame, double tol,
                                           std::size_t n) {
  const SphericalBody induced = induce_spherical(shape, frame);
  const Classification c = classify(induced, tol, n);

  DualityReport r;
  r.tolerance = tol;
  r.thickness = c.thickness;
  r.diameter = c.diameter;
  std::tie(r.self_dual, r.hausdorff_gap) = is_self_dual(shape, tol, n);
  r.conditions = duality_conditions(c, tol);
  if (r.all_agree()) return r;

  // A disagreement is tolerated only if every failing condition recovers at 10 tol.
  const double loose = 10 * tol;
  const auto relaxed = duality_conditions(classify(induced, loose, n), loose);
  const bool any_pass = r.self_dual || std::any_of(r.conditions.begin(), r.conditions.end(),
                                                   [](const auto& kv) { return kv.second.pass; });
  bool recovered = !any_pass || r.hausdorff_gap <= loose;
  for (const auto& [name, v] : relaxed) recovered = recovered && (!any_pass || v.pass);
  if (!recovered) {
    std::string detail = "self_dual=" + std::string(r.self_dual ? "true" : "false");
    for (const auto& [name, v] : r.conditions) detail += ", " + name + "=" + (v.pass ? "true" : "false");
    throw Error(ErrorKind::InconsistentVerdicts, "induced-body conditions disagree: " + detail);
  }
  return r;
}

}  // namespace sphconv
