#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace circlekit {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Wraps an angle into [0, 2*pi).
inline double wrap_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

// Angular distance on the circle, in [0, pi].
inline double angle_dist(double a, double b) {
  double d = std::fabs(wrap_angle(a) - wrap_angle(b));
  return std::min(d, kTwoPi - d);
}

// theta_j = 2*pi*j/n, j = 0..n-1.
inline std::vector<double> uniform_grid(int n) {
  std::vector<double> g(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) g[static_cast<size_t>(j)] = kTwoPi * j / n;
  return g;
}

inline Complex unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace circlekit
