#pragma once

// Primitives of the unit sphere S^2 embedded in E^3: points, distances,
// great arcs, hemispheres and lunes. Everything here is header-only and
// templated on the scalar type; the rest of the library instantiates double.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "sphconv/error.hpp"

namespace sphconv {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

/// A point of S^2. The norm invariant is restored on every construction.
template <typename Scalar>
class UnitVector {
 public:
  UnitVector() : v_(Vec3<Scalar>::UnitZ()) {}
  UnitVector(Scalar x, Scalar y, Scalar z) : UnitVector(Vec3<Scalar>(x, y, z)) {}

  template <typename Derived>
  explicit UnitVector(const Eigen::MatrixBase<Derived>& v) : v_(v) {
    const Scalar n = v_.norm();
    if (!(n > Scalar(0)) || !std::isfinite(n)) {
      throw Error(ErrorKind::InvariantViolation, "cannot normalize a zero or non-finite vector");
    }
    v_ /= n;
  }

  const Vec3<Scalar>& vec() const noexcept { return v_; }
  Scalar x() const noexcept { return v_.x(); }
  Scalar y() const noexcept { return v_.y(); }
  Scalar z() const noexcept { return v_.z(); }

  UnitVector operator-() const { return from_normalized(-v_); }

  // Skips renormalization; only for vectors that are unit by construction.
  static UnitVector from_normalized(const Vec3<Scalar>& v) {
    UnitVector u;
    u.v_ = v;
    return u;
  }

 private:
  Vec3<Scalar> v_;
};

using UnitVec = UnitVector<double>;

template <typename Scalar>
Scalar dot(const UnitVector<Scalar>& a, const UnitVector<Scalar>& b) {
  return a.vec().dot(b.vec());
}

template <typename Scalar>
Scalar dot(const UnitVector<Scalar>& a, const Vec3<Scalar>& b) {
  return a.vec().dot(b);
}

/// Spherical distance in [0, pi]; the two-argument arctangent keeps full
/// precision near 0 and pi where acos(a.b) does not.
template <typename Scalar>
Scalar dist(const Vec3<Scalar>& a, const Vec3<Scalar>& b) {
  using std::atan2;
  return atan2(a.cross(b).norm(), a.dot(b));
}

template <typename Scalar>
Scalar dist(const UnitVector<Scalar>& a, const UnitVector<Scalar>& b) {
  return dist<Scalar>(a.vec(), b.vec());
}

template <typename Scalar>
UnitVector<Scalar> antipode(const UnitVector<Scalar>& a) {
  return -a;
}

template <typename Scalar>
bool is_degenerate_pair(const UnitVector<Scalar>& a, const UnitVector<Scalar>& b, Scalar eps = Scalar(1e-9)) {
  return (a.vec() + b.vec()).norm() <= eps || (a.vec() - b.vec()).norm() <= eps;
}

/// Unit tangent at `a` pointing along the great circle toward `b`.
template <typename Scalar>
Vec3<Scalar> tangent_toward(const Vec3<Scalar>& a, const Vec3<Scalar>& b) {
  Vec3<Scalar> t = b - a.dot(b) * a;
  // second pass: for nearly equal a, b the first leaves a component along a
  // of relative size eps / |a - b|
  t -= a.dot(t) * a;
  return t / t.norm();
}

/// Point at distance `angle` from `a` in tangent direction `t` (t orthonormal to a).
template <typename Scalar>
UnitVector<Scalar> walk(const Vec3<Scalar>& a, const Vec3<Scalar>& t, Scalar angle) {
  using std::cos;
  using std::sin;
  return UnitVector<Scalar>(cos(angle) * a + sin(angle) * t);
}

/// Any orthonormal pair (u, v) completing n to a right-handed frame (u, v, n).
template <typename Scalar>
std::pair<Vec3<Scalar>, Vec3<Scalar>> tangent_basis(const Vec3<Scalar>& n) {
  Vec3<Scalar> seed = Vec3<Scalar>::UnitX();
  const auto a = n.cwiseAbs();
  if (a.y() <= a.x() && a.y() <= a.z()) {
    seed = Vec3<Scalar>::UnitY();
  } else if (a.z() <= a.x() && a.z() <= a.y()) {
    seed = Vec3<Scalar>::UnitZ();
  }
  Vec3<Scalar> u = (seed - seed.dot(n) * n).normalized();
  Vec3<Scalar> v = n.cross(u);
  return {u, v};
}

/// Great arc ab; endpoints are neither equal nor antipodal.
template <typename Scalar>
class GreatArc {
 public:
  GreatArc(const UnitVector<Scalar>& a, const UnitVector<Scalar>& b) : a_(a), b_(b) {
    if (is_degenerate_pair(a, b)) {
      throw Error(ErrorKind::DegenerateArc, "arc endpoints are equal or antipodal");
    }
  }
  const UnitVector<Scalar>& a() const noexcept { return a_; }
  const UnitVector<Scalar>& b() const noexcept { return b_; }
  Scalar length() const { return dist(a_, b_); }

 private:
  UnitVector<Scalar> a_;
  UnitVector<Scalar> b_;
};

/// Point of arc ab at fraction t of its length.
template <typename Scalar>
UnitVector<Scalar> geodesic_point(const UnitVector<Scalar>& a, const UnitVector<Scalar>& b, Scalar t) {
  const GreatArc<Scalar> arc(a, b);
  if (t == Scalar(0)) return a;
  if (t == Scalar(1)) return b;
  const Vec3<Scalar> dir = tangent_toward(a.vec(), b.vec());
  return walk<Scalar>(a.vec(), dir, t * arc.length());
}

template <typename Scalar>
struct Hemisphere {
  UnitVector<Scalar> center;

  bool contains(const UnitVector<Scalar>& p, Scalar tol = Scalar(1e-12)) const {
    return dot(p, center) >= -tol;
  }
  Hemisphere opposite() const { return {-center}; }
};

using Hemi = Hemisphere<double>;

/// Center of the semicircle G/H: the point of bd(G) inside H farthest from bd(H).
template <typename Scalar>
Vec3<Scalar> semicircle_center(const Vec3<Scalar>& g, const Vec3<Scalar>& h) {
  Vec3<Scalar> m = h - g.dot(h) * g;
  return m / m.norm();
}

/// Lune thickness straight from its definition: the distance between the
/// centers of the two bounding semicircles. No validity checks.
template <typename Scalar>
Scalar lune_thickness(const Vec3<Scalar>& g, const Vec3<Scalar>& h) {
  return dist<Scalar>(semicircle_center<Scalar>(g, h), semicircle_center<Scalar>(h, g));
}

template <typename Scalar>
class Lune {
 public:
  static constexpr Scalar kDegenerateAngle = Scalar(1e-9);

  Lune(const Hemisphere<Scalar>& g, const Hemisphere<Scalar>& h) : g_(g), h_(h) {
    const Scalar angle = dist(g.center, h.center);
    if (!(angle > kDegenerateAngle && angle < std::numbers::pi_v<Scalar> - kDegenerateAngle)) {
      throw Error(ErrorKind::DegenerateLune, "hemispheres are equal or opposite");
    }
    const UnitVector<Scalar> c(g.center.vec().cross(h.center.vec()));
    corners_ = {c, -c};
    mg_ = UnitVector<Scalar>::from_normalized(semicircle_center<Scalar>(g.center.vec(), h.center.vec()));
    mh_ = UnitVector<Scalar>::from_normalized(semicircle_center<Scalar>(h.center.vec(), g.center.vec()));
    thickness_ = dist(mg_, mh_);
  }

  const Hemisphere<Scalar>& g() const noexcept { return g_; }
  const Hemisphere<Scalar>& h() const noexcept { return h_; }
  const std::array<UnitVector<Scalar>, 2>& corners() const noexcept { return corners_; }
  /// Center of G/H (lies on bd G).
  const UnitVector<Scalar>& mg() const noexcept { return mg_; }
  /// Center of H/G (lies on bd H).
  const UnitVector<Scalar>& mh() const noexcept { return mh_; }
  Scalar thickness() const noexcept { return thickness_; }

  bool contains(const UnitVector<Scalar>& p, Scalar tol = Scalar(1e-12)) const {
    return g_.contains(p, tol) && h_.contains(p, tol);
  }

 private:
  Hemisphere<Scalar> g_;
  Hemisphere<Scalar> h_;
  std::array<UnitVector<Scalar>, 2> corners_;
  UnitVector<Scalar> mg_;
  UnitVector<Scalar> mh_;
  Scalar thickness_ = 0;
};

template <typename Scalar>
Lune<Scalar> lune_make(const Hemisphere<Scalar>& g, const Hemisphere<Scalar>& h) {
  return Lune<Scalar>(g, h);
}

using LuneD = Lune<double>;

}  // namespace sphconv
