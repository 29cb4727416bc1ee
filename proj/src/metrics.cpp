#include "sphconv/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "sphconv/detail/golden.hpp"

namespace sphconv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRefineTol = 1e-10;

/// Samples of the supporting-center curve bd(C°) with their arc-length parameters.
class DualScan {
 public:
  DualScan(const SphericalBody& body, std::size_t n) : dual_(polar_dual(body)) {
    const std::size_t m = std::max(n, dual_.segments().size());
    params_ = boundary_sample_params(dual_, m);
    for (const auto& p : boundary_sample(dual_, m)) points_.push_back(p.vec());
  }

  const SphericalBody& dual() const { return dual_; }
  std::size_t size() const { return points_.size(); }
  const Vec3d& point(std::size_t i) const { return points_[i]; }

  /// Bracket [params[i-1], params[i+1]] in unwrapped arc length.
  std::pair<double, double> bracket(std::size_t i) const {
    const std::size_t m = params_.size();
    const double per = dual_.perimeter();
    const double here = params_[i];
    double lo = params_[(i + m - 1) % m];
    double hi = params_[(i + 1) % m];
    if (lo >= here) lo -= per;
    if (hi <= here) hi += per;
    if (m == 1) {
      lo = here - per / 2;
      hi = here + per / 2;
    }
    return {lo, hi};
  }

  /// Width determined by H(k) straight from the definition: the thinnest lune
  /// H(k) ∩ H(k') over supporting centers k' != k. Returns (width, k').
  std::pair<double, Vec3d> width_by_definition(const Vec3d& k) const {
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t j = 0; j < points_.size(); ++j) {
      const double t = thickness_or_pi(k, points_[j]);
      if (t < best) {
        best = t;
        arg = j;
      }
    }
    const auto [lo, hi] = bracket(arg);
    const auto [s, v] = detail::golden_minimize(
        [&](double s) { return thickness_or_pi(k, dual_.point_at(s)); }, lo, hi, kRefineTol);
    if (v < best) return {v, dual_.point_at(s)};
    return {best, points_[arg]};
  }

  double width_by_dual_form(const Vec3d& k) const { return kPi - dual_.farthest(k).value; }

  WidthSample sample(const Vec3d& k) const {
    const auto [w, other] = width_by_definition(k);
    return {UnitVec(k), w, UnitVec(other), width_by_dual_form(k)};
  }

  Vec3d point_at(double s) const { return dual_.point_at(s); }

 private:
  static double thickness_or_pi(const Vec3d& g, const Vec3d& h) {
    const double angle = dist<double>(g, h);
    if (angle <= LuneD::kDegenerateAngle || angle >= kPi - LuneD::kDegenerateAngle) return kPi;
    return sphconv::lune_thickness<double>(g, h);
  }

  SphericalBody dual_;
  std::vector<double> params_;
  std::vector<Vec3d> points_;
};

int sign_with_slack(double x, double tol) { return x > tol ? 1 : (x < -tol ? -1 : 0); }

std::string describe(const Vec3d& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << p.x() << ", " << p.y() << ", " << p.z() << ")";
  return os.str();
}

/// Largest alpha in [0, pi] with body ⊂ H(cos(alpha) i + sin(alpha) e).
double max_rotation(const SphericalBody& body, const Vec3d& i, const Vec3d& e) {
  double alpha = kPi;
  // Great edges are inside a hemisphere iff their endpoints are, so junctions
  // give closed-form bounds: A cos(a) + B sin(a) >= 0 holds up to atan2(B, A) + pi/2.
  for (const auto& seg : body.segments()) {
    const Vec3d& x = seg.start().vec();
    const double root = std::atan2(x.dot(e), std::max(0.0, x.dot(i))) + kPi / 2;
    alpha = std::min(alpha, std::clamp(root, 0.0, kPi));
  }
  for (const auto& seg : body.segments()) {
    if (seg.is_great()) continue;
    auto feasible = [&](double a) {
      const Vec3d j = std::cos(a) * i + std::sin(a) * e;
      return seg.point(seg.extremal_angle(j, -1)).dot(j) >= -1e-13;
    };
    if (feasible(alpha)) continue;
    double lo = 0;
    double hi = alpha;
    for (int it = 0; it < 64 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      (feasible(mid) ? lo : hi) = mid;
    }
    alpha = lo;
  }
  return alpha;
}

}  // namespace

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::constant_width: return "constant_width";
    case VerdictKind::constant_diameter: return "constant_diameter";
    case VerdictKind::reduced_necessary: return "reduced_necessary";
    case VerdictKind::self_dual_aux: return "self_dual_aux";
  }
  return "unknown";
}

double lune_thickness(const UnitVec& g, const UnitVec& h) { return LuneD(Hemi{g}, Hemi{h}).thickness(); }

WidthSample width_at(const SphericalBody& body, const UnitVec& support_center, std::size_t n) {
  const double m = body.support(support_center.vec()).value;
  if (std::abs(m) > 1e-8) {
    throw Error(ErrorKind::NotSupporting,
                "H(" + describe(support_center.vec()) + ") does not support the body (min dot " + std::to_string(m) + ")");
  }
  return DualScan(body, n).sample(support_center.vec());
}

WidthProfile width_profile(const SphericalBody& body, std::size_t n) {
  const DualScan scan(body, n);
  WidthProfile profile;
  profile.centers.reserve(scan.size());
  profile.widths.reserve(scan.size());
  for (std::size_t i = 0; i < scan.size(); ++i) {
    profile.centers.emplace_back(UnitVec::from_normalized(scan.point(i)));
    profile.widths.push_back(scan.width_by_definition(scan.point(i)).first);
  }
  const auto lo = std::min_element(profile.widths.begin(), profile.widths.end()) - profile.widths.begin();
  const auto hi = std::max_element(profile.widths.begin(), profile.widths.end()) - profile.widths.begin();
  auto width_at_param = [&](double s) { return scan.width_by_definition(scan.point_at(s)).first; };

  {
    const auto [a, b] = scan.bracket(static_cast<std::size_t>(lo));
    const auto [s, v] = detail::golden_minimize(width_at_param, a, b, kRefineTol);
    profile.min = scan.sample(v < profile.widths[lo] ? scan.point_at(s) : scan.point(lo));
  }
  {
    const auto [a, b] = scan.bracket(static_cast<std::size_t>(hi));
    const auto [s, v] = detail::golden_maximize(width_at_param, a, b, kRefineTol);
    profile.max = scan.sample(v > profile.widths[hi] ? scan.point_at(s) : scan.point(hi));
  }
  return profile;
}

ThicknessResult thickness(const SphericalBody& body, std::size_t n) {
  const auto profile = width_profile(body, n);
  return {profile.min.width, profile.min};
}

namespace {

struct FarthestScan {
  std::vector<double> params;
  std::vector<double> reach;  // distance to the farthest body point
};

FarthestScan farthest_scan(const SphericalBody& body, std::size_t n) {
  FarthestScan scan;
  scan.params = boundary_sample_params(body, std::max(n, body.segments().size()));
  scan.reach.reserve(scan.params.size());
  for (double s : scan.params) scan.reach.push_back(body.farthest(body.point_at(s)).value);
  return scan;
}

std::pair<double, double> param_bracket(const std::vector<double>& params, double perimeter, std::size_t i) {
  const std::size_t m = params.size();
  double lo = params[(i + m - 1) % m];
  double hi = params[(i + 1) % m];
  if (lo >= params[i]) lo -= perimeter;
  if (hi <= params[i]) hi += perimeter;
  return {lo, hi};
}

}  // namespace

DiameterResult diameter(const SphericalBody& body, std::size_t n) {
  const auto scan = farthest_scan(body, n);
  const auto i = static_cast<std::size_t>(std::max_element(scan.reach.begin(), scan.reach.end()) - scan.reach.begin());
  const auto [a, b] = param_bracket(scan.params, body.perimeter(), i);
  auto reach = [&](double s) { return body.farthest(body.point_at(s)).value; };
  auto [s, v] = detail::golden_maximize(reach, a, b, kRefineTol);
  if (v < scan.reach[i]) {
    s = scan.params[i];
    v = scan.reach[i];
  }
  const Vec3d p = body.point_at(s);
  const auto far = body.farthest(p);
  return {far.value, UnitVec(p), UnitVec(far.point)};
}

double vertex_diameter(const SphericalBody& body) {
  const auto v = body.vertices();
  double best = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) best = std::max(best, dist(v[i], v[j]));
  return best;
}

Verdict is_constant_width(const WidthProfile& profile, double tol) {
  Verdict v;
  v.kind = VerdictKind::constant_width;
  v.tolerance = tol;
  v.deviation = profile.max.width - profile.min.width;
  v.pass = v.deviation <= tol;
  v.value = profile.min.width;
  std::ostringstream os;
  os.precision(17);
  os << "narrowest width " << profile.min.width << " at H" << describe(profile.min.support_center.vec())
     << ", widest " << profile.max.width << " at H" << describe(profile.max.support_center.vec());
  v.witness = {os.str(), {profile.min.support_center, profile.max.support_center}};
  return v;
}

Verdict is_constant_width(const SphericalBody& body, double tol, std::size_t n) {
  return is_constant_width(width_profile(body, n), tol);
}

Verdict is_constant_diameter(const SphericalBody& body, double tol, std::size_t n) {
  const double delta = diameter(body, n).value;
  const auto scan = farthest_scan(body, n);
  const auto i = static_cast<std::size_t>(std::min_element(scan.reach.begin(), scan.reach.end()) - scan.reach.begin());
  const auto [a, b] = param_bracket(scan.params, body.perimeter(), i);
  auto [s, worst] = detail::golden_minimize([&](double t) { return body.farthest(body.point_at(t)).value; }, a, b,
                                            kRefineTol);
  if (worst > scan.reach[i]) {
    s = scan.params[i];
    worst = scan.reach[i];
  }
  Verdict v;
  v.kind = VerdictKind::constant_diameter;
  v.tolerance = tol;
  v.value = delta;
  v.deviation = std::max(0.0, delta - worst);
  v.pass = v.deviation <= tol;
  const Vec3d p = body.point_at(s);
  const auto far = body.farthest(p);
  std::ostringstream os;
  os.precision(17);
  os << "boundary point " << describe(p) << " reaches only " << worst << " against diameter " << delta;
  v.witness = {os.str(), {UnitVec(p), UnitVec(far.point)}};
  return v;
}

double narrowest_lune_through(const SphericalBody& body, const Vec3d& e, const Vec3d& cone_from, const Vec3d& cone_to,
                              UnitVec* best_i, double good_enough) {
  const double span = dist<double>(cone_from, cone_to);
  auto normal_at = [&](double t) -> Vec3d {
    if (span < 1e-12) return cone_from;
    return (std::cos(t) * cone_from + std::sin(t) * tangent_toward<double>(cone_from, cone_to)).normalized();
  };
  auto rotation = [&](double t) { return max_rotation(body, normal_at(t), e); };

  double best_t = 0;
  double best = rotation(0);
  const double stop = kPi - good_enough;
  if (span >= 1e-12 && best < stop) {
    constexpr int kScan = 8;
    for (int k = 1; k <= kScan && best < stop; ++k) {
      const double t = span * k / kScan;
      const double r = rotation(t);
      if (r > best) {
        best = r;
        best_t = t;
      }
    }
    const double step = span / kScan;
    if (best >= stop) {
      if (best_i) *best_i = UnitVec(normal_at(best_t));
      return kPi - best;
    }
    const auto [t, r] =
        detail::golden_maximize(rotation, std::max(0.0, best_t - step), std::min(span, best_t + step), 1e-12);
    if (r > best) {
      best = r;
      best_t = t;
    }
  }
  if (best_i) *best_i = UnitVec(normal_at(best_t));
  return kPi - best;
}

ReducedReport reduced_check(const SphericalBody& body, double tol, std::size_t n) {
  return reduced_check(body, tol, n, thickness(body, n).value);
}

ReducedReport reduced_check(const SphericalBody& body, double tol, std::size_t n, double known_thickness) {
  const double delta = known_thickness;
  const auto& segs = body.segments();
  const std::size_t m = segs.size();
  ReducedReport report;
  report.necessary_excess = -std::numeric_limits<double>::infinity();
  std::string failure;
  std::vector<UnitVec> failure_points;

  auto check_point = [&](const Vec3d& e, const Vec3d& from, const Vec3d& to) {
    // past tol/4 the exact excess no longer changes the verdict
    const double through = narrowest_lune_through(body, e, from, to, nullptr, delta + tol / 4);
    ++report.points_checked;
    const double excess = through - delta;
    if (excess > report.necessary_excess) report.necessary_excess = excess;
    if (excess > tol && failure.empty()) {
      std::ostringstream os;
      os.precision(17);
      os << "no lune of thickness " << delta << " has extreme point " << describe(e)
         << " as a semicircle center (narrowest " << through << ")";
      failure = os.str();
      failure_points = {UnitVec(e)};
    }
  };

  const SphericalBody dual = polar_dual(body);
  const double depth = 10 * tol;
  double min_drop = std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i < m; ++i) {
    const auto& in = segs[(i + m - 1) % m];
    const auto& out = segs[i];
    const Vec3d e = out.start().vec();
    const Vec3d k1 = in.normal(in.sweep());
    const Vec3d k2 = out.normal(0);
    const bool corner = junction_turn(body, i) < kPi - 1e-8;
    if (corner) {
      check_point(e, k1, k2);

      // Shave the corner by a hemisphere whose boundary runs at depth `depth`
      // inside, perpendicular to the bisector of the normal cone.
      const Vec3d t = (k1 + k2).normalized();
      const UnitVec c(std::cos(depth) * t - std::sin(depth) * e);
      ++report.corners_probed;
      // H(c) supports the shaved body, so the lune H(c) ∩ H(farthest dual point)
      // bounds its thickness from above.
      const double upper = lune_thickness(c, UnitVec(dual.farthest(c.vec()).point));
      double drop = std::max(0.0, delta - upper);
      // The exact thickness of the shaved body is only needed while the
      // verdict is still open; after a failed probe the bound suffices.
      if (!(drop > tol) && min_drop > tol) drop = delta - thickness(clip(body, c), n).value;
      min_drop = std::min(min_drop, drop);
      if (!(drop > tol) && failure.empty()) {
        std::ostringstream os;
        os.precision(17);
        os << "shaving corner " << describe(e) << " by " << depth << " lowers the thickness only by " << drop;
        failure = os.str();
        failure_points = {UnitVec(e)};
      }
    } else if (!out.is_great() || !in.is_great()) {
      check_point(e, k2, k2);
    }
    if (!out.is_great()) {
      constexpr int kArcSamples = 4;
      for (int k = 0; k < kArcSamples; ++k) {
        const double phi = out.sweep() * (k + 0.5) / kArcSamples;
        const Vec3d nrm = out.normal(phi);
        check_point(out.point(phi), nrm, nrm);
      }
    }
  }

  if (report.points_checked == 0) report.necessary_excess = 0;
  report.min_drop = min_drop;
  Verdict& v = report.verdict;
  v.kind = VerdictKind::reduced_necessary;
  v.tolerance = tol;
  v.value = delta;
  v.deviation = std::isinf(min_drop) ? report.necessary_excess : std::max(report.necessary_excess, 2 * tol - min_drop);
  v.pass = report.necessary_excess <= tol && min_drop > tol;
  v.witness = {failure.empty() ? "necessary condition and corner probes satisfied (heuristic, not a proof)" : failure,
               failure_points};
  return report;
}

Classification classify(const SphericalBody& body, double tol, std::size_t n) {
  Classification c;
  c.profile = width_profile(body, n);
  c.thickness = c.profile.min.width;
  c.diameter_witness = diameter(body, n);
  c.diameter = c.diameter_witness.value;
  c.constant_width = is_constant_width(c.profile, tol);
  c.constant_diameter = is_constant_diameter(body, tol, n);
  c.reduced = reduced_check(body, tol, n, c.thickness);

  const double half = kPi / 2;
  const double d = c.thickness;
  const double D = c.diameter;
  const bool reduced = c.reduced.verdict.pass;

  c.checks["claim2_leq"] = {true, d <= D + tol};
  {
    const bool app = std::abs(d - D) <= tol && d <= half + tol;
    c.checks["claim2_constant_width"] = {app, !app || c.constant_width.pass};
  }
  {
    const bool app = reduced && d <= half + tol;
    bool holds = D <= half + tol;
    if (d < half - 0.05) holds = holds && D < half - 1e-6;
    c.checks["thm1_diameter_bound"] = {app, !app || holds};
  }
  {
    const bool app = reduced && d >= half - tol;
    c.checks["thm2_constant_width"] = {app, !app || c.constant_width.pass};
  }
  c.checks["thm3_sign_agreement"] = {reduced, !reduced || sign_with_slack(d - half, tol) == sign_with_slack(D - half, tol)};
  {
    const bool app = reduced && d >= half - tol;
    c.checks["prop1_equality"] = {app, !app || std::abs(d - D) <= tol};
  }
  {
    const bool app = reduced && D >= half - tol;
    c.checks["cor2_constant_width"] = {
        app, !app || (c.constant_width.pass && std::abs(c.constant_width.value - D) <= tol && c.constant_diameter.pass)};
  }
  return c;
}

}  // namespace sphconv
