#include "circlekit/transform.hpp"

#include <algorithm>
#include <cmath>

#include "atom_scan.hpp"
#include "circlekit/errors.hpp"

namespace circlekit {

namespace {

constexpr double kLogClamp = -320.0;  // per-sample clamp for log quadrature

void require_in_disk(Complex z) {
  if (std::abs(z) >= 1.0) throw OutsideDisk("evaluation point |z| >= 1");
}

// Poisson kernel P_r(delta) = (1 - r^2) / |1 - r e^{i delta}|^2.
double poisson(double r, double delta) {
  const double denom = 1.0 - 2.0 * r * std::cos(delta) + r * r;
  return (1.0 - r * r) / denom;
}

}  // namespace

Complex herglotz(const CircleMeasure& mu, Complex z) {
  require_in_disk(z);
  Complex acc(0.0, 0.0);
  const CircleFunction& d = mu.density();
  if (d.sampled()) {
    const int M = d.grid_size();
    const auto& s = d.samples();
    for (int k = 0; k < M; ++k) {
      const Complex q = z * std::conj(unit(kTwoPi * k / M));
      acc += s[static_cast<size_t>(k)] * (1.0 + q) / (1.0 - q);
    }
    acc /= static_cast<double>(M);
  } else {
    const TrigPoly& p = d.poly();
    acc = p.coeff(0);
    Complex zp(1.0, 0.0);
    for (int n = 1; n <= p.degree(); ++n) {
      zp *= z;
      acc += 2.0 * p.coeff(n) * zp;
    }
  }
  for (const Atom& a : mu.atoms()) {
    const Complex q = z * std::conj(unit(a.angle));
    acc += a.weight * (1.0 + q) / (1.0 - q);
  }
  return acc;
}

Complex cauchy(const CircleMeasure& mu, const AnalyticPoly& h, Complex z) {
  require_in_disk(z);
  Complex acc(0.0, 0.0);
  const CircleFunction& d = mu.density();
  if (d.sampled()) {
    const int M = d.grid_size();
    const auto& s = d.samples();
    for (int k = 0; k < M; ++k) {
      const Complex zeta = unit(kTwoPi * k / M);
      acc += s[static_cast<size_t>(k)] * h.eval(zeta) / (1.0 - z * std::conj(zeta));
    }
    acc /= static_cast<double>(M);
  } else {
    // sum_l g_l z^l * (partial Laurent sum of the density) + full geometric
    // blocks; equivalently sum_j z^j sum_l g_l c_{j-l}, which terminates at
    // j = deg h + deg density and continues geometrically only for atoms.
    const TrigPoly& p = d.poly();
    const int dh = h.degree();
    const int dp = p.degree();
    for (int l = 0; l <= dh; ++l) {
      // sum over j >= 0 of z^j c_{j-l}: k = j - l ranges over [-l, dp].
      Complex inner(0.0, 0.0);
      for (int k = -std::min(l, dp); k <= dp; ++k)
        inner += std::pow(z, l + k) * p.coeff(k);
      acc += h.coeffs[static_cast<size_t>(l)] * inner;
    }
  }
  for (const Atom& a : mu.atoms()) {
    const Complex zeta = unit(a.angle);
    acc += a.weight * h.eval(zeta) / (1.0 - z * std::conj(zeta));
  }
  return acc;
}

ContractiveFunction ContractiveFunction::from_poly(std::vector<Complex> coeffs) {
  ContractiveFunction b;
  b.eval_ = [c = std::move(coeffs)](Complex z) {
    Complex acc(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
  };
  return b;
}

ContractiveFunction ContractiveFunction::cayley_of(CircleMeasure mu) {
  ContractiveFunction b;
  b.eval_ = [m = std::move(mu)](Complex z) {
    const Complex H = herglotz(m, z);
    return (H - 1.0) / (H + 1.0);  // Re H >= 0 keeps |H + 1| >= 1
  };
  return b;
}

Complex ContractiveFunction::herglotz_value(Complex z) const {
  const Complex bv = eval_(z);
  const Complex denom = 1.0 - bv;
  if (std::abs(denom) < 1e-300) return Complex(1e300, 0.0);
  return (1.0 + bv) / denom;
}

ContractiveFunction b_from_measure(const CircleMeasure& mu) {
  return ContractiveFunction::cayley_of(mu);
}

ContractiveFunction mobius_gauge(const ContractiveFunction& b, double t) {
  if (t == 0.0) return b;
  ContractiveFunction g;
  g.eval_ = [b, t](Complex z) {
    const Complex H = b.herglotz_value(z) + Complex(0.0, t);
    return (H - 1.0) / (H + 1.0);
  };
  return g;
}

std::vector<double> default_radii() {
  std::vector<double> r;
  for (int k = 4; k <= 12; ++k) r.push_back(1.0 - std::ldexp(1.0, -k));
  return r;
}

CircleMeasure clark_measure(const ContractiveFunction& b, int grid,
                            const std::vector<double>& radii) {
  if (grid < 8 || !is_power_of_two(grid))
    throw ValidationError("clark_measure needs a power-of-two grid >= 8");
  if (radii.empty() || !std::is_sorted(radii.begin(), radii.end()) ||
      radii.back() >= 1.0)
    throw ValidationError("radii must increase toward 1");

  const double r_trace = radii.back();

  // Detection radii capped at the grid scale: a finer radius narrows the
  // Poisson profile below one cell and the stabilization test loses even
  // slightly off-grid atoms. The dyadic step matches the default schedule.
  const double det_gap = std::max(1.0 - r_trace, 1.0 / grid);
  const double r_det_top = 1.0 - det_gap;
  const double r_det_prev = 1.0 - 2.0 * det_gap;

  // Mass estimate from the Herglotz value at the origin.
  const double mass = std::max(b.herglotz_value(Complex(0.0, 0.0)).real(), 0.0);
  const double atom_floor = 1e-4 * std::max(mass, 1e-12);

  std::vector<Atom> atoms = detail::scan_atoms(
      [&b](Complex z) { return b.herglotz_value(z).real(); }, grid, r_det_top,
      r_det_prev, atom_floor);
  // Sharpen each atom at the trace radius, where the profile is narrowest:
  // 1/a stays an exact quadratic around the atom, so a few inverse-parabola
  // passes at step 1 - r pin the angle, after which the weight bias is
  // (1 - r)/(1 + r) times the local density and the Poisson subtraction
  // below leaves exactly that density behind.
  auto a_at = [&b](double r, double th) {
    return 0.5 * (1.0 - r) * b.herglotz_value(r * unit(th)).real();
  };
  const double hp = 1.0 - r_trace;
  for (Atom& a : atoms) {
    double alpha = a.angle;
    for (int pass = 0; pass < 3; ++pass) {
      const double am = a_at(r_trace, alpha - hp);
      const double a0 = a_at(r_trace, alpha);
      const double ap = a_at(r_trace, alpha + hp);
      if (!(am > 0.0 && a0 > 0.0 && ap > 0.0)) break;
      const double ym = 1.0 / am, y0 = 1.0 / a0, yp = 1.0 / ap;
      const double curv = ym - 2.0 * y0 + yp;
      if (!(curv > 0.0)) break;
      const double step =
          std::clamp(hp * (ym - yp) / (2.0 * curv), -kTwoPi / grid, kTwoPi / grid);
      alpha += step;
      if (std::abs(step) < 1e-6 * hp) break;
    }
    alpha = std::remainder(alpha, kTwoPi);
    a.angle = alpha < 0.0 ? alpha + kTwoPi : alpha;
    a.weight = 2.0 * a_at(r_trace, a.angle) / (1.0 + r_trace);
  }

  std::vector<double> density(static_cast<size_t>(grid));
  for (int j = 0; j < grid; ++j) {
    const double theta = kTwoPi * j / grid;
    const Complex bv = b(r_trace * unit(theta));
    if (std::abs(bv) > 1.0 + 1e-8)
      throw NonContractive("|b| = " + std::to_string(std::abs(bv)) +
                           " sampled at radius " + std::to_string(r_trace));
    const double d2 = std::norm(1.0 - bv);
    double v = d2 < 1e-300 ? 0.0 : (1.0 - std::norm(bv)) / d2;
    for (const Atom& a : atoms)
      v -= a.weight * poisson(r_trace, theta - a.angle);
    density[static_cast<size_t>(j)] = std::max(v, 0.0);
  }
  return CircleMeasure::from_samples(std::move(density), std::move(atoms));
}

double szego_distance(const CircleMeasure& mu, double log_floor) {
  const CircleFunction& d = mu.density();
  if (!d.sampled()) {
    if (d.poly().is_zero()) return 0.0;
    const AnalyticPoly g = fejer_riesz_factor(d.poly());
    const double g0 = std::abs(g.coeffs[0]);
    const double logint = 2.0 * std::log(std::max(g0, 1e-300));
    return logint <= log_floor ? 0.0 : g0 * g0;
  }
  const auto& s = d.samples();
  double acc = 0.0;
  for (double v : s) acc += std::max(std::log(std::max(v, 0.0)), kLogClamp);
  acc /= static_cast<double>(s.size());
  return acc <= log_floor ? 0.0 : std::exp(acc);
}

Extremeness is_extreme(const CircleMeasure& mu, double extreme_floor) {
  const double mass = mu.total_mass();
  if (mass <= 0.0) return Extremeness::Extreme;
  return szego_distance(mu) <= extreme_floor * mass ? Extremeness::Extreme
                                                    : Extremeness::NonExtreme;
}

}  // namespace circlekit
