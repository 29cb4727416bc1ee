#pragma once

// Builders for caps, regular odd-gons and bodies of constant diameter pi/2
// assembled from circle pieces around an odd-gon.

#include <cstdint>
#include <span>
#include <vector>

#include "sphconv/convex_body.hpp"

namespace sphconv {

SphericalBody cap(const UnitVec& center, double rho);

/// Regular n-gon about the north pole whose thickness is `target` (within
/// 1e-8). `samples` is the width-scan resolution used during the search;
/// 0 picks 16 n.
SphericalBody regular_odd_gon(int n, double target_thickness, std::size_t samples = 0);

/// Circumradius of the regular n-gon found by regular_odd_gon.
double regular_odd_gon_circumradius(int n, double target_thickness, std::size_t samples = 0);

struct TriangleSpec {
  UnitVec v1, v2, v3;
  double kappa12 = 0, kappa23 = 0, kappa31 = 0;
  double sigma1 = 0, sigma2 = 0, sigma3 = 0;
};

/// Side lengths and arc radii of the triangle construction (closed form).
/// Vertices given clockwise are reordered to v1, v3, v2.
TriangleSpec triangle_spec(const UnitVec& v1, const UnitVec& v2, const UnitVec& v3);

struct OddGonSpec {
  std::vector<UnitVec> vertices;  // counterclockwise
  std::vector<double> kappa;      // kappa[i] = |v_i v_{i+m}|, m = (n-1)/2
  std::vector<double> sigma;
  /// max |sigma_i + sigma_{i+m} - (pi/2 - kappa_i)| of the solved system.
  double residual = 0;
};

/// Solves sigma_i + sigma_{i+m} = pi/2 - kappa_i. Throws EvenN or InvalidSpec.
OddGonSpec odd_gon_spec(std::span<const UnitVec> vertices);

SphericalBody constant_diameter_triangle(const UnitVec& v1, const UnitVec& v2, const UnitVec& v3);
SphericalBody constant_diameter_odd_gon(std::span<const UnitVec> vertices);
/// Body from an already solved spec; arcs with sigma_i == 0 collapse to corners.
SphericalBody constant_diameter_body(const OddGonSpec& spec);

/// Hull of n random points in a cap of radius max_diam / 2 about a random center.
SphericalBody random_convex_polygon(std::uint64_t seed, int n, double max_diam);

}  // namespace sphconv
