#pragma once

#include <cmath>
#include <utility>

namespace sphconv::detail {

/// Golden-section minimization of f on [a, b]; returns (argmin, min).
template <typename F>
std::pair<double, double> golden_minimize(F&& f, double a, double b, double tol = 1e-10) {
  constexpr double kInvPhi = 0.6180339887498949;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? std::pair{c, fc} : std::pair{d, fd};
}

template <typename F>
std::pair<double, double> golden_maximize(F&& f, double a, double b, double tol = 1e-10) {
  auto [x, v] = golden_minimize([&](double t) { return -f(t); }, a, b, tol);
  return {x, -v};
}

}  // namespace sphconv::detail
