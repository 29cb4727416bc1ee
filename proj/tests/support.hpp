#pragma once

// Generators shared by the unit tests and the acceptance runner.

#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "sphconv/constructors.hpp"
#include "sphconv/convex_body.hpp"

namespace sphconv::testing {

inline constexpr double kPi = std::numbers::pi;

inline UnitVec random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return UnitVec(Vec3d(g(rng), g(rng), g(rng)));
}

/// Unit vector orthogonal to `c`, uniformly distributed on that great circle.
inline UnitVec random_orthogonal(std::mt19937_64& rng, const UnitVec& c) {
  const auto [u, v] = tangent_basis(c.vec());
  const double a = std::uniform_real_distribution<double>(0, 2 * kPi)(rng);
  return UnitVec(std::cos(a) * u + std::sin(a) * v);
}

/// Uniform (by area) point of the cap of radius rho about c.
inline UnitVec random_in_cap(std::mt19937_64& rng, const UnitVec& c, double rho) {
  std::uniform_real_distribution<double> unit;
  const auto [u, v] = tangent_basis(c.vec());
  const double z = 1 - unit(rng) * (1 - std::cos(rho));
  const double a = 2 * kPi * unit(rng);
  const double s = std::sqrt(std::max(0.0, 1 - z * z));
  return UnitVec(z * c.vec() + s * (std::cos(a) * u + std::sin(a) * v));
}

/// Triangle with vertices uniform in a cap of radius pi/4, rejection-sampled
/// until every arc radius of the constant-diameter construction is >= 0.
inline std::vector<UnitVec> random_valid_triangle(std::mt19937_64& rng) {
  const UnitVec c = random_unit(rng);
  for (;;) {
    std::vector<UnitVec> v{random_in_cap(rng, c, kPi / 4), random_in_cap(rng, c, kPi / 4), random_in_cap(rng, c, kPi / 4)};
    try {
      triangle_spec(v[0], v[1], v[2]);
      return v;
    } catch (const Error&) {
    }
  }
}

/// Jittered regular odd-gon accepted by odd_gon_spec (convex, diameter <= pi/2, sigma >= 0).
inline std::vector<UnitVec> random_valid_odd_gon(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> unit;
  const UnitVec c = random_unit(rng);
  const auto [u, w] = tangent_basis(c.vec());
  for (;;) {
    const double r = 0.35 + 0.3 * unit(rng);
    std::vector<UnitVec> v;
    for (int k = 0; k < n; ++k) {
      const double a = 2 * kPi * (k + 0.3 * (unit(rng) - 0.5)) / n;
      const double rk = r * (1 + 0.2 * (unit(rng) - 0.5));
      v.emplace_back(std::cos(rk) * c.vec() + std::sin(rk) * (std::cos(a) * u + std::sin(a) * w));
    }
    try {
      odd_gon_spec(v);
      return v;
    } catch (const Error&) {
    }
  }
}

}  // namespace sphconv::testing
