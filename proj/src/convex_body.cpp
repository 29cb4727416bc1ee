#include "sphconv/convex_body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "sphconv/planar.hpp"

namespace sphconv {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kJoinTol = 1e-10;
constexpr double kCornerTol = 1e-8;

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0 ? a + kTwoPi : a;
}

[[noreturn]] void violation(const std::string& what) { throw Error(ErrorKind::InvariantViolation, what); }

}  // namespace

// ---------------------------------------------------------------------------
// BoundarySegment

BoundarySegment::BoundarySegment(const UnitVec& center, double radius, const UnitVec& start, const UnitVec& end)
    : center_(center), radius_(radius), start_(start), end_(end) {
  if (!(radius > 0) || radius > kHalfPi + 1e-12) violation("arc radius outside (0, pi/2]");
  const Vec3d& a = center_.vec();
  Vec3d u = start_.vec() - a.dot(start_.vec()) * a;
  if (u.norm() < 1e-15) violation("arc start coincides with its center");
  u_ = u.normalized();
  w_ = a.cross(u_);
  if ((end_.vec() - start_.vec()).norm() < 1e-12) {
    sweep_ = kTwoPi;
  } else {
    sweep_ = std::atan2(end_.vec().dot(w_), end_.vec().dot(u_));
    if (sweep_ <= 0) sweep_ += kTwoPi;
  }
}

BoundarySegment BoundarySegment::great_edge(const UnitVec& a, const UnitVec& b) {
  if (is_degenerate_pair(a, b, 1e-12)) throw Error(ErrorKind::DegenerateArc, "edge endpoints equal or antipodal");
  return BoundarySegment(UnitVec(a.vec().cross(b.vec())), kHalfPi, a, b);
}

Vec3d BoundarySegment::point(double phi) const {
  return std::cos(radius_) * center_.vec() + std::sin(radius_) * (std::cos(phi) * u_ + std::sin(phi) * w_);
}

Vec3d BoundarySegment::tangent(double phi) const { return -std::sin(phi) * u_ + std::cos(phi) * w_; }

Vec3d BoundarySegment::normal(double phi) const {
  if (is_great()) return center_.vec();
  const Vec3d rho = std::cos(phi) * u_ + std::sin(phi) * w_;
  return std::sin(radius_) * center_.vec() - std::cos(radius_) * rho;
}

double BoundarySegment::extremal_angle(const Vec3d& q, int sign) const {
  const double p = u_.dot(q);
  const double s = w_.dot(q);
  if (std::hypot(p, s) < 1e-300) return 0;
  double phi = std::atan2(s, p);
  if (sign < 0) phi += std::numbers::pi;
  phi = wrap_angle(phi);
  if (phi <= sweep_) return phi;
  auto value = [&](double a) { return sign * (std::cos(a) * p + std::sin(a) * s); };
  return value(0) >= value(sweep_) ? 0.0 : sweep_;
}

// ---------------------------------------------------------------------------
// SphericalBody

SphericalBody::SphericalBody(std::vector<BoundarySegment> segments) : segments_(std::move(segments)) {
  validate_and_index();
}

SphericalBody SphericalBody::polygon(std::span<const UnitVec> vertices) {
  if (vertices.size() < 3) throw Error(ErrorKind::DegenerateHull, "a polygon needs at least 3 vertices");
  std::vector<BoundarySegment> segs;
  segs.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    segs.push_back(BoundarySegment::great_edge(vertices[i], vertices[(i + 1) % vertices.size()]));
  }
  return SphericalBody(std::move(segs));
}

bool SphericalBody::is_polygon() const noexcept {
  return std::all_of(segments_.begin(), segments_.end(), [](const auto& s) { return s.is_great(); });
}

std::vector<UnitVec> SphericalBody::vertices() const {
  std::vector<UnitVec> out;
  out.reserve(segments_.size());
  for (const auto& s : segments_) out.push_back(s.start());
  return out;
}

void SphericalBody::validate_and_index() {
  if (segments_.empty()) violation("closed boundary: no segments");
  const std::size_t n = segments_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = segments_[i];
    if (std::abs(dist(s.center(), s.start()) - s.radius()) > kJoinTol ||
        std::abs(dist(s.center(), s.end()) - s.radius()) > kJoinTol) {
      violation("arc endpoints off their circle (segment " + std::to_string(i) + ")");
    }
    const auto& next = segments_[(i + 1) % n];
    if (dist(s.end(), next.start()) > kJoinTol) {
      violation("closed boundary: gap after segment " + std::to_string(i));
    }
  }

  offsets_.resize(n);
  perimeter_ = 0;
  Vec3d mean = Vec3d::Zero();
  constexpr int kMeanSamples = 16;
  for (std::size_t i = 0; i < n; ++i) {
    offsets_[i] = perimeter_;
    const auto& s = segments_[i];
    perimeter_ += s.length();
    for (int k = 0; k < kMeanSamples; ++k) {
      mean += (s.length() / kMeanSamples) * s.point(s.sweep() * (k + 0.5) / kMeanSamples);
    }
  }
  if (!(perimeter_ > 0) || mean.norm() < 1e-12) violation("nonempty interior");
  center_ = UnitVec(mean);
  if (support(center_.vec()).value <= 1e-6) {
    // The boundary mean can sit badly for long, nearly great arcs; fall back
    // to the widest-margin center of boundary samples.
    std::vector<Vec3d> pts;
    for (const auto& s : segments_) {
      for (int k = 0; k < kMeanSamples; ++k) pts.push_back(s.point(s.sweep() * k / kMeanSamples));
    }
    try {
      center_ = enclosing_hemisphere_center(pts).first;
    } catch (const Error&) {
      violation("open hemisphere: boundary not inside any open hemisphere");
    }
  }
  std::tie(frame_u_, frame_v_) = tangent_basis(center_.vec());

  if (support(center_.vec()).value <= 1e-6) violation("open hemisphere: body not inside the hemisphere around its center");

  // Bearings about the interior point must increase monotonically through one
  // full turn; together with left turns at every junction this certifies a
  // simple convex boundary.
  auto bearing = [&](const Vec3d& p) { return std::atan2(p.dot(frame_v_), p.dot(frame_u_)); };
  bearings_.resize(n);
  double unwrapped = bearing(segments_[0].start().vec());
  double prev = unwrapped;
  const double first = unwrapped;
  constexpr int kBearingSamples = 8;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = segments_[i];
    for (int k = 0; k <= kBearingSamples; ++k) {
      if (k == 0) {
        bearings_[i] = unwrapped;
        continue;
      }
      const double b = bearing(s.point(s.sweep() * k / kBearingSamples));
      double step = b - prev;
      step -= kTwoPi * std::floor(step / kTwoPi + 0.5);
      if (step < -1e-12) violation("convexity: boundary winds backwards around the interior");
      unwrapped += step;
      prev = b;
    }
  }
  if (std::abs(unwrapped - first - kTwoPi) > 1e-6) violation("convexity: boundary is not a simple closed curve");

  for (std::size_t i = 0; i < n; ++i) {
    const auto& in = segments_[(i + n - 1) % n];
    const auto& out = segments_[i];
    const Vec3d t_in = in.tangent(in.sweep());
    const Vec3d t_out = out.tangent(0);
    if (t_in.cross(t_out).dot(out.start().vec()) < -kCornerTol) violation("convexity: reflex junction");
  }

  if (boundary_distance(center_.vec()) < 1e-6) violation("nonempty interior");
}

Vec3d SphericalBody::point_at(double s) const {
  s = std::fmod(s, perimeter_);
  if (s < 0) s += perimeter_;
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), s);
  const std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - offsets_.begin()) - 1));
  const auto& seg = segments_[i];
  const double phi = std::clamp((s - offsets_[i]) / std::sin(seg.radius()), 0.0, seg.sweep());
  return seg.point(phi);
}

Vec3d SphericalBody::normal_at(double s) const {
  s = std::fmod(s, perimeter_);
  if (s < 0) s += perimeter_;
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), s);
  const std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - offsets_.begin()) - 1));
  const auto& seg = segments_[i];
  const double phi = std::clamp((s - offsets_[i]) / std::sin(seg.radius()), 0.0, seg.sweep());
  return seg.normal(phi);
}

SupportPoint SphericalBody::support(const Vec3d& c) const {
  SupportPoint best{std::numeric_limits<double>::infinity(), Vec3d::Zero(), 0, 0};
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const double phi = segments_[i].extremal_angle(c, -1);
    const Vec3d p = segments_[i].point(phi);
    const double v = p.dot(c);
    if (v < best.value) best = {v, p, i, phi};
  }
  return best;
}

SupportPoint SphericalBody::farthest(const Vec3d& q) const {
  SupportPoint s = support(q);
  s.value = dist<double>(q, s.point);
  return s;
}

double SphericalBody::boundary_distance(const Vec3d& p) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& seg : segments_) {
    best = std::min(best, dist<double>(p, seg.point(seg.extremal_angle(p, +1))));
  }
  return best;
}

bool SphericalBody::contains(const Vec3d& p, double tol) const {
  const Vec3d& o = center_.vec();
  if (p.dot(o) <= 0) return false;
  const double r = dist<double>(o, p);
  if (r < 1e-12) return true;

  double b = std::atan2(p.dot(frame_v_), p.dot(frame_u_));
  const double b0 = bearings_.front();
  while (b < b0) b += kTwoPi;
  while (b >= b0 + kTwoPi) b -= kTwoPi;
  const auto it = std::upper_bound(bearings_.begin(), bearings_.end(), b);
  const std::size_t i = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, (it - bearings_.begin()) - 1));
  const auto& seg = segments_[i];

  // Walk from o toward p along the great circle and find where it leaves the
  // segment's circle: (o.a) cos t + (d.a) sin t = cos(radius), larger root.
  const Vec3d d = tangent_toward<double>(o, p);
  const Vec3d& a = seg.center().vec();
  const double A = o.dot(a);
  const double B = d.dot(a);
  const double R = std::hypot(A, B);
  const double c = std::min(1.0, std::cos(seg.radius()) / R);
  const double exit = wrap_angle(std::atan2(B, A) + std::acos(std::max(-1.0, c)));
  return r <= exit + tol;
}

bool contains(const SphericalBody& body, const UnitVec& p, double tol) { return body.contains(p, tol); }

bool lune_contains(const LuneD& lune, const SphericalBody& body, double tol) {
  return body.support(lune.g().center.vec()).value >= -tol && body.support(lune.h().center.vec()).value >= -tol;
}

// ---------------------------------------------------------------------------
// Sampling

namespace {

struct SampleSpot {
  std::size_t segment;
  double angle;
};

std::vector<SampleSpot> sample_spots(const SphericalBody& body, std::size_t n, SampleWeight weight) {
  const auto& segs = body.segments();
  if (n < segs.size()) {
    throw Error(ErrorKind::InvalidSpec, "sample count " + std::to_string(n) + " below segment count " +
                                            std::to_string(segs.size()));
  }
  const std::size_t extra = n - segs.size();
  // The normal sweep of an arc is its length on the dual boundary.
  auto measure = [&](const BoundarySegment& s) {
    return weight == SampleWeight::arc_length ? s.length() : s.length() + s.sweep() * std::cos(s.radius());
  };
  double total = 0;
  for (const auto& s : segs) total += measure(s);
  std::vector<std::size_t> count(segs.size(), 1);
  std::vector<std::pair<double, std::size_t>> remainder;
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const double share = static_cast<double>(extra) * measure(segs[i]) / total;
    const auto whole = static_cast<std::size_t>(std::floor(share));
    count[i] += whole;
    assigned += whole;
    remainder.emplace_back(share - static_cast<double>(whole), i);
  }
  std::stable_sort(remainder.begin(), remainder.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < extra; ++k, ++assigned) ++count[remainder[k % remainder.size()].second];

  std::vector<SampleSpot> spots;
  spots.reserve(n);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t k = 0; k < count[i]; ++k) {
      spots.push_back({i, segs[i].sweep() * static_cast<double>(k) / static_cast<double>(count[i])});
    }
  }
  return spots;
}

}  // namespace

std::vector<UnitVec> boundary_sample(const SphericalBody& body, std::size_t n, SampleWeight weight) {
  std::vector<UnitVec> out;
  out.reserve(n);
  for (const auto& spot : sample_spots(body, n, weight)) {
    const auto& seg = body.segments()[spot.segment];
    out.push_back(spot.angle == 0 ? seg.start() : UnitVec(seg.point(spot.angle)));
  }
  return out;
}

std::vector<double> boundary_sample_params(const SphericalBody& body, std::size_t n) {
  std::vector<double> out;
  out.reserve(n);
  for (const auto& spot : sample_spots(body, n, SampleWeight::arc_length)) {
    const auto& seg = body.segments()[spot.segment];
    out.push_back(body.segment_offset(spot.segment) + spot.angle * std::sin(seg.radius()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Extreme points and duality

double junction_turn(const SphericalBody& body, std::size_t i) {
  const auto& segs = body.segments();
  const auto& in = segs[(i + segs.size() - 1) % segs.size()];
  const auto& out = segs[i];
  return std::numbers::pi - dist<double>(in.normal(in.sweep()), out.normal(0));
}

ExtremeSet extreme_points(const SphericalBody& body) {
  ExtremeSet set;
  const auto& segs = body.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (junction_turn(body, i) < std::numbers::pi - kCornerTol) set.isolated.push_back(segs[i].start());
    if (!segs[i].is_great()) set.strict_arcs.push_back(i);
  }
  return set;
}

SphericalBody polar_dual(const SphericalBody& body) {
  const auto& segs = body.segments();
  std::vector<BoundarySegment> dual;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    if (!s.is_great()) {
      const UnitVec from(s.normal(0));
      const UnitVec to = s.sweep() >= 2 * std::numbers::pi ? from : UnitVec(s.normal(s.sweep()));
      dual.emplace_back(s.center(), kHalfPi - s.radius(), from, to);
    }
    const auto& next = segs[(i + 1) % segs.size()];
    const Vec3d k1 = s.normal(s.sweep());
    const Vec3d k2 = next.normal(0);
    // signed, so that rounding noise at a smooth junction cannot produce an
    // edge that wraps almost all the way around
    const double turn = std::atan2(k1.cross(k2).dot(next.start().vec()), k1.dot(k2));
    if (turn > 1e-12) {
      dual.emplace_back(next.start(), kHalfPi, UnitVec(k1), UnitVec(k2));
    }
  }
  return SphericalBody(std::move(dual));
}

std::vector<UnitVec> supporting_hemisphere_centers(const SphericalBody& body, std::size_t n) {
  return boundary_sample(polar_dual(body), n);
}

// ---------------------------------------------------------------------------
// Clipping

SphericalBody clip(const SphericalBody& body, const UnitVec& c) {
  struct Piece {
    std::size_t seg;
    double from;
    double to;
  };
  const auto& segs = body.segments();
  std::vector<Piece> kept;
  bool any_removed = false;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const auto& s = segs[i];
    // x(phi) . c = K + P cos(phi) + Q sin(phi)
    const double K = std::cos(s.radius()) * s.center().vec().dot(c.vec());
    const Vec3d p0 = s.point(0) - std::cos(s.radius()) * s.center().vec();
    const Vec3d p1 = s.point(kHalfPi) - std::cos(s.radius()) * s.center().vec();
    const double P = p0.dot(c.vec());
    const double Q = p1.dot(c.vec());
    const double R = std::hypot(P, Q);
    std::vector<double> cuts{0.0};
    if (R > 1e-300 && std::abs(K) < R) {
      const double base = std::atan2(Q, P);
      const double off = std::acos(-K / R);
      for (double r : {base - off, base + off}) {
        const double a = wrap_angle(r);
        if (a > 1e-14 && a < s.sweep() - 1e-14) cuts.push_back(a);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(s.sweep());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
      if (s.point(mid).dot(c.vec()) >= 0) {
        if ((cuts[k + 1] - cuts[k]) * std::sin(s.radius()) > 1e-12) kept.push_back({i, cuts[k], cuts[k + 1]});
      } else {
        any_removed = true;
      }
    }
  }
  if (!any_removed) return body;
  if (kept.empty()) throw Error(ErrorKind::EmptyInterior, "clipping hemisphere misses the body");

  std::vector<BoundarySegment> out;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const auto& pc = kept[k];
    const auto& s = segs[pc.seg];
    const UnitVec a = pc.from == 0 ? s.start() : UnitVec(s.point(pc.from));
    const UnitVec b = pc.to == s.sweep() && s.sweep() < 2 * std::numbers::pi ? s.end() : UnitVec(s.point(pc.to));
    out.emplace_back(s.center(), s.radius(), a, b);
    const auto& nx = kept[(k + 1) % kept.size()];
    const auto& ns = segs[nx.seg];
    const UnitVec next_start = nx.from == 0 ? ns.start() : UnitVec(ns.point(nx.from));
    if (dist(b, next_start) > 1e-12) out.push_back(BoundarySegment(c, kHalfPi, b, next_start));
  }
  return SphericalBody(std::move(out));
}

namespace {

// Largest distance from the sample set of `from` to the boundary of `to`.
// Each arc of `to` is enclosed in a ball around its midpoint (chordal
// radius), so arcs that cannot beat the running minimum are skipped.
double directed_boundary_distance(const SphericalBody& from, const SphericalBody& to, std::size_t n) {
  const auto& segs = to.segments();
  std::vector<Vec3d> mid(segs.size());
  std::vector<double> reach(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) {
    mid[i] = segs[i].point(segs[i].sweep() / 2);
    reach[i] = 2 * std::sin(segs[i].radius()) * std::sin(std::min(segs[i].sweep() / 2, std::numbers::pi) / 2);
  }
  double h = 0;
  std::size_t hint = 0;
  for (const auto& p : boundary_sample(from, std::max(n, from.segments().size()))) {
    const Vec3d& q = p.vec();
    auto exact = [&](std::size_t i) { return dist<double>(q, segs[i].point(segs[i].extremal_angle(q, +1))); };
    double best = exact(hint);
    for (std::size_t i = 0; i < segs.size(); ++i) {
      if ((q - mid[i]).norm() - reach[i] >= 2 * std::sin(best / 2)) continue;
      const double d = exact(i);
      if (d < best) {
        best = d;
        hint = i;
      }
    }
    h = std::max(h, best);
  }
  return h;
}

}  // namespace

double boundary_hausdorff(const SphericalBody& a, const SphericalBody& b, std::size_t n) {
  return std::max(directed_boundary_distance(a, b, n), directed_boundary_distance(b, a, n));
}

// ---------------------------------------------------------------------------
// Hull

std::pair<UnitVec, double> enclosing_hemisphere_center(std::span<const Vec3d> points) {
  if (points.empty()) throw Error(ErrorKind::NoEnclosingHemisphere, "no points");
  // Gilbert's iteration for the minimum-norm point v of conv(points); by
  // minimax duality v/|v| maximizes min_i c . p_i and the optimum equals |v|.
  Vec3d v = points[0];
  auto min_dot = [&](const Vec3d& dir, std::size_t* arg) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double d = points[i].dot(dir);
      if (d < best) {
        best = d;
        if (arg) *arg = i;
      }
    }
    return best;
  };
  Vec3d best_dir = v.normalized();
  double best_lb = min_dot(best_dir, nullptr);
  for (int iter = 0; iter < 20000; ++iter) {
    const double vn = v.norm();
    if (vn <= 1e-12) break;
    std::size_t j = 0;
    const double lb = min_dot(v / vn, &j);
    if (lb > best_lb) {
      best_lb = lb;
      best_dir = v / vn;
    }
    if (vn - lb <= 1e-13) break;
    const Vec3d step = points[j] - v;
    const double lambda = std::clamp(-v.dot(step) / step.squaredNorm(), 0.0, 1.0);
    v += lambda * step;
  }
  if (best_lb <= 1e-6) throw Error(ErrorKind::NoEnclosingHemisphere, "points are not inside any open hemisphere");
  return {UnitVec(best_dir), best_lb};
}

SphericalBody hull_from_points(std::span<const UnitVec> points) {
  if (points.size() < 3) throw Error(ErrorKind::DegenerateHull, "fewer than 3 points");
  std::vector<Vec3d> raw;
  raw.reserve(points.size());
  for (const auto& p : points) raw.push_back(p.vec());
  const auto [c, margin] = enclosing_hemisphere_center(raw);
  (void)margin;
  const auto [u, v] = tangent_basis(c.vec());
  std::vector<planar::Vec2d> flat;
  flat.reserve(raw.size());
  for (const auto& p : raw) {
    const double h = p.dot(c.vec());
    flat.emplace_back(p.dot(u) / h, p.dot(v) / h);
  }
  const auto idx = planar::convex_hull_indices(flat);
  if (idx.size() < 3) throw Error(ErrorKind::DegenerateHull, "points lie on one great circle");
  std::vector<UnitVec> verts;
  verts.reserve(idx.size());
  for (auto i : idx) verts.push_back(points[i]);
  return SphericalBody::polygon(verts);
}

}  // namespace sphconv
