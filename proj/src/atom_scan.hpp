#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "circlekit/measure.hpp"

namespace circlekit::detail {

// Fatou-trace atom scanner shared by the Clark reconstruction and the
// decomposition diagnostics. a(r, theta) = (1-r) Re H(r e^{i theta}) / 2
// tends to w (1+r)/2 at an atom of weight w but decays like (1-r) on the
// density part, so the ratio across two radii separates the two regimes.
// Near an isolated atom 1/a is an exact quadratic in theta (inverse Poisson
// profile), so a three-point inverse-parabola fit around a grid maximum
// recovers the atom angle to sub-cell accuracy at any radius; the floor and
// stabilization tests then run at the refined angle, which keeps mid-cell
// atoms detectable. Radii should be grid-resolvable (1 - r >= 1/grid) so
// that the pre-refinement floor prune below stays uniform in the grid size.
inline std::vector<Atom> scan_atoms(const std::function<double(Complex)>& re_h,
                                    int grid, double r_top, double r_prev,
                                    double floor) {
  const double h = kTwoPi / grid;
  const size_t n = static_cast<size_t>(grid);
  std::vector<double> a(n);
  for (int j = 0; j < grid; ++j)
    a[static_cast<size_t>(j)] =
        0.5 * (1.0 - r_top) * re_h(r_top * unit(h * j));

  auto a_at = [&](double r, double theta) {
    return 0.5 * (1.0 - r) * re_h(r * unit(theta));
  };

  // A mid-cell atom shows up at the flanking grid point attenuated by
  // 1/(1 + x^2) with x = (half cell)/(1 - r) <= pi for grid-resolvable
  // radii, hence the /12 slack on the candidate prune.
  const double prune = floor / 12.0;

  std::vector<Atom> out;
  for (int j = 0; j < grid; ++j) {
    const double at = a[static_cast<size_t>(j)];
    if (at <= prune) continue;
    const double left = a[static_cast<size_t>((j + grid - 1) % grid)];
    const double right = a[static_cast<size_t>((j + 1) % grid)];
    if (!(at > left && at >= right)) continue;  // one candidate per peak

    double offset = 0.0;
    if (left > 0.0 && right > 0.0) {
      const double ym = 1.0 / left, y0 = 1.0 / at, yp = 1.0 / right;
      const double curv = ym - 2.0 * y0 + yp;
      if (curv > 0.0)
        offset = std::clamp(h * (ym - yp) / (2.0 * curv), -0.55 * h, 0.55 * h);
    }
    const double alpha = std::remainder(h * j + offset, kTwoPi);

    const double a_t = a_at(r_top, alpha);
    if (a_t <= floor) continue;
    if (a_at(r_prev, alpha) / a_t >= 1.35) continue;  // still shrinking
    out.push_back(Atom{alpha < 0.0 ? alpha + kTwoPi : alpha,
                       2.0 * a_t / (1.0 + r_top)});
  }
  std::sort(out.begin(), out.end(),
            [](const Atom& x, const Atom& y) { return x.angle < y.angle; });
  return out;
}

}  // namespace circlekit::detail
