#include "sphconv/constructors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "sphconv/metrics.hpp"

namespace sphconv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSigmaFloor = -1e-12;
constexpr double kZeroArc = 1e-11;

double orientation(const UnitVec& a, const UnitVec& b, const UnitVec& c) {
  return a.vec().dot(b.vec().cross(c.vec()));
}

/// +1 for a counterclockwise convex polygon, -1 for a clockwise one, 0 otherwise.
int convex_orientation(std::span<const UnitVec> v) {
  const std::size_t n = v.size();
  int sign = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double o = orientation(v[i], v[(i + 1) % n], v[(i + 2) % n]);
    const int s = o > 1e-14 ? 1 : (o < -1e-14 ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign)) return 0;
    sign = s;
  }
  return sign;
}

double vertex_set_diameter(std::span<const UnitVec> v) {
  double d = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) d = std::max(d, dist(v[i], v[j]));
  return d;
}

/// Point on the prolongation of the arc from `from` through `at`, past `at` by `len`.
UnitVec prolong(const UnitVec& from, const UnitVec& at, double len) {
  const Vec3d away = -tangent_toward<double>(at.vec(), from.vec());
  return UnitVec(std::cos(len) * at.vec() + std::sin(len) * away);
}

std::vector<UnitVec> counterclockwise(std::span<const UnitVec> vertices) {
  std::vector<UnitVec> v(vertices.begin(), vertices.end());
  const int o = convex_orientation(v);
  if (o == 0) throw Error(ErrorKind::InvalidSpec, "vertices are not in strictly convex position");
  if (o < 0) std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace

SphericalBody cap(const UnitVec& center, double rho) {
  if (!(rho > 0) || rho >= kHalfPi - 1e-6) {
    throw Error(ErrorKind::BadRadius, "cap radius must lie in (0, pi/2 - 1e-6), got " + std::to_string(rho));
  }
  const auto [u, v] = tangent_basis(center.vec());
  const UnitVec start = walk<double>(center.vec(), u, rho);
  return SphericalBody({BoundarySegment(center, rho, start, start)});
}

namespace {

SphericalBody regular_polygon(int n, double circumradius) {
  std::vector<UnitVec> v;
  v.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double a = 2 * kPi * k / n;
    v.emplace_back(std::sin(circumradius) * std::cos(a), std::sin(circumradius) * std::sin(a),
                   std::cos(circumradius));
  }
  return SphericalBody::polygon(v);
}

}  // namespace

double regular_odd_gon_circumradius(int n, double target, std::size_t samples) {
  if (n < 3) throw Error(ErrorKind::InvalidSpec, "odd-gon needs n >= 3");
  if (n % 2 == 0) throw Error(ErrorKind::EvenN, "regular odd-gon needs odd n, got " + std::to_string(n));
  if (!(target > 0) || target > kHalfPi + 1e-12) {
    throw Error(ErrorKind::InvalidSpec, "regular odd-gon thickness must lie in (0, pi/2]");
  }
  if (samples == 0) samples = 16 * static_cast<std::size_t>(n);
  auto excess = [&](double r) { return thickness(regular_polygon(n, r), samples).value - target; };

  double lo = 1e-4;
  double hi = kHalfPi - 1e-4;
  double flo = excess(lo);
  const double fhi = excess(hi);
  if (!(flo <= 0 && fhi >= 0)) {
    throw Error(ErrorKind::Unreachable, "thickness " + std::to_string(target) + " is not bracketed by the circumradius range");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f = excess(mid);
    if (std::abs(f) <= 1e-13) return mid;
    if (f < 0) {
      lo = mid;
      flo = f;
    } else {
      hi = mid;
    }
  }
  const double r = 0.5 * (lo + hi);
  if (std::abs(excess(r)) > 1e-8) throw Error(ErrorKind::Unreachable, "bisection did not reach the target thickness");
  return r;
}

SphericalBody regular_odd_gon(int n, double target, std::size_t samples) {
  return regular_polygon(n, regular_odd_gon_circumradius(n, target, samples));
}

TriangleSpec triangle_spec(const UnitVec& a, const UnitVec& b, const UnitVec& c) {
  const std::array<UnitVec, 3> given{a, b, c};
  const auto v = counterclockwise(given);
  TriangleSpec s{v[0], v[1], v[2]};
  s.kappa12 = dist(s.v1, s.v2);
  s.kappa23 = dist(s.v2, s.v3);
  s.kappa31 = dist(s.v3, s.v1);
  s.sigma1 = kPi / 4 - s.kappa12 / 2 + s.kappa23 / 2 - s.kappa31 / 2;
  s.sigma2 = kPi / 4 - s.kappa23 / 2 + s.kappa31 / 2 - s.kappa12 / 2;
  s.sigma3 = kPi / 4 - s.kappa31 / 2 + s.kappa12 / 2 - s.kappa23 / 2;
  if (std::max({s.kappa12, s.kappa23, s.kappa31}) > kHalfPi + 1e-12) {
    throw Error(ErrorKind::InvalidSpec, "triangle diameter exceeds pi/2");
  }
  if (std::min({s.sigma1, s.sigma2, s.sigma3}) < kSigmaFloor) {
    throw Error(ErrorKind::InvalidSpec, "negative arc radius: the two shortest sides exceed the longest by more than pi/2");
  }
  return s;
}

OddGonSpec odd_gon_spec(std::span<const UnitVec> vertices) {
  const int n = static_cast<int>(vertices.size());
  if (n % 2 == 0) throw Error(ErrorKind::EvenN, "odd-gon needs odd n, got " + std::to_string(n));
  if (n < 3) throw Error(ErrorKind::InvalidSpec, "odd-gon needs n >= 3");
  OddGonSpec spec;
  spec.vertices = counterclockwise(vertices);
  if (vertex_set_diameter(spec.vertices) > kHalfPi + 1e-12) {
    throw Error(ErrorKind::InvalidSpec, "odd-gon diameter exceeds pi/2");
  }
  const int m = (n - 1) / 2;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd rhs(n);
  spec.kappa.resize(n);
  for (int i = 0; i < n; ++i) {
    spec.kappa[i] = dist(spec.vertices[i], spec.vertices[(i + m) % n]);
    a(i, i) = 1;
    a(i, (i + m) % n) = 1;
    rhs(i) = kHalfPi - spec.kappa[i];
  }
  const Eigen::VectorXd sigma = a.fullPivLu().solve(rhs);
  spec.sigma.assign(sigma.data(), sigma.data() + n);
  spec.residual = (a * sigma - rhs).cwiseAbs().maxCoeff();
  for (int i = 0; i < n; ++i) {
    if (spec.sigma[i] < kSigmaFloor) {
      throw Error(ErrorKind::InvalidSpec, "negative arc radius sigma_" + std::to_string(i) + " = " +
                                              std::to_string(spec.sigma[i]));
    }
  }
  return spec;
}

SphericalBody constant_diameter_body(const OddGonSpec& spec) {
  const auto& v = spec.vertices;
  const int n = static_cast<int>(v.size());
  const int m = (n - 1) / 2;
  std::vector<double> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = std::max(0.0, spec.sigma[i]);
  // Far end, past v_i, of the diagonal arriving at v_i from v_j.
  auto end_at = [&](int j, int i) { return sigma[i] <= kZeroArc ? v[i] : prolong(v[j], v[i], sigma[i]); };

  std::vector<BoundarySegment> segs;
  segs.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    const int j = (i + m + 1) % n;  // the vertex whose two diagonals reach v_i and v_{i+1}
    if (sigma[i] > kZeroArc) segs.emplace_back(v[i], sigma[i], end_at((i + m) % n, i), end_at(j, i));
    segs.emplace_back(v[j], kHalfPi - sigma[j], end_at(j, i), end_at(j, (i + 1) % n));
  }
  return SphericalBody(std::move(segs));
}

SphericalBody constant_diameter_triangle(const UnitVec& v1, const UnitVec& v2, const UnitVec& v3) {
  const TriangleSpec t = triangle_spec(v1, v2, v3);
  OddGonSpec spec;
  spec.vertices = {t.v1, t.v2, t.v3};
  spec.kappa = {t.kappa12, t.kappa23, t.kappa31};
  spec.sigma = {t.sigma1, t.sigma2, t.sigma3};
  return constant_diameter_body(spec);
}

SphericalBody constant_diameter_odd_gon(std::span<const UnitVec> vertices) {
  return constant_diameter_body(odd_gon_spec(vertices));
}

SphericalBody random_convex_polygon(std::uint64_t seed, int n, double max_diam) {
  if (n < 3) throw Error(ErrorKind::InvalidSpec, "random polygon needs n >= 3");
  if (!(max_diam > 0) || max_diam > kPi - 0.1) throw Error(ErrorKind::InvalidSpec, "max_diam must lie in (0, pi - 0.1]");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit;
  const double rho = max_diam / 2;
  for (;;) {
    const UnitVec c(Vec3d(normal(rng), normal(rng), normal(rng)));
    const auto [u, w] = tangent_basis(c.vec());
    std::vector<UnitVec> pts;
    pts.reserve(n);
    for (int k = 0; k < n; ++k) {
      // Uniform by area inside the cap.
      const double z = 1 - unit(rng) * (1 - std::cos(rho));
      const double a = 2 * kPi * unit(rng);
      const double s = std::sqrt(std::max(0.0, 1 - z * z));
      pts.emplace_back(z * c.vec() + s * (std::cos(a) * u + std::sin(a) * w));
    }
    try {
      return hull_from_points(pts);
    } catch (const Error&) {
      // Degenerate draw (too few hull vertices); draw again.
    }
  }
}

}  // namespace sphconv
