#include "circlekit/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "atom_scan.hpp"
#include "circlekit/errors.hpp"
#include "circlekit/forms.hpp"
#include "circlekit/kernel.hpp"
#include "circlekit/linalg.hpp"
#include "circlekit/spaces.hpp"
#include "circlekit/transform.hpp"

namespace circlekit {

namespace {

constexpr double kSupportEps = 1e-4;  // relative reference-density support cut

double poisson(double r, double x) {
  return (1.0 - r * r) / (1.0 - 2.0 * r * std::cos(x) + r * r);
}

// Re H on the N-grid at radius r with the Poisson profiles of the
// representation's atoms removed: the density's Fatou estimate.
std::vector<double> density_trace(const CircleMeasure& mu, int N, double r) {
  std::vector<double> g(static_cast<size_t>(N));
  for (int j = 0; j < N; ++j) {
    const double th = kTwoPi * j / N;
    g[static_cast<size_t>(j)] = herglotz(mu, r * unit(th)).real();
  }
  for (const Atom& a : mu.atoms())
    for (int j = 0; j < N; ++j)
      g[static_cast<size_t>(j)] -= a.weight * poisson(r, kTwoPi * j / N - a.angle);
  for (double& v : g) v = std::max(v, 0.0);
  return g;
}

struct Parts {
  std::vector<double> ac_density;  // on the assembly grid
  std::vector<double> s_density;
  std::vector<Atom> ac_atoms;
  std::vector<Atom> s_atoms;
};

// Grid on which the split densities are stored: fine enough that sampling
// mu's density loses no moment below the working order (sampled densities
// keep their native grid).
int assembly_grid(const CircleMeasure& mu, int N) {
  const CircleFunction& d = mu.density();
  if (d.sampled()) return std::max(d.grid_size(), N);
  int M = 4 * N;
  const int need = 2 * N + 2 * d.poly().degree();
  while (M < need) M *= 2;
  return M;
}

bool colocated(double a, double b, double tol) { return angle_dist(a, b) <= tol; }

// One direct pass: Fatou support of ref gates mu's density estimate; the
// actual density samples are then split exactly (s = positive part of the
// shortfall), and mu's atoms are routed by co-location with ref's atoms.
Parts direct_parts(const CircleMeasure& mu, const CircleMeasure& ref, int N, int M) {
  // Richardson in the radius: 2 P_r - P_{r^2} cancels the first-order Fatou
  // deficit, so the split boundary sits O((1-r)^2) from the boundary density
  // instead of O(1-r). Traced on the assembly grid itself; holding a coarse
  // estimate constant across fine samples leaks the within-cell variation
  // into the singular part.
  const double r = 1.0 - 1.0 / N;
  const std::vector<double> g1 = density_trace(mu, M, r);
  const std::vector<double> g2 = density_trace(mu, M, r * r);
  const std::vector<double> f1 = density_trace(ref, M, r);
  const std::vector<double> f2 = density_trace(ref, M, r * r);
  std::vector<double> est(static_cast<size_t>(M)), f(static_cast<size_t>(M));
  for (int J = 0; J < M; ++J) {
    est[static_cast<size_t>(J)] =
        std::max(2.0 * g1[static_cast<size_t>(J)] - g2[static_cast<size_t>(J)], 0.0);
    f[static_cast<size_t>(J)] =
        std::max(2.0 * f1[static_cast<size_t>(J)] - f2[static_cast<size_t>(J)], 0.0);
  }
  const double fmax = *std::max_element(f.begin(), f.end());
  const double cut = kSupportEps * fmax;

  Parts p;
  const std::vector<double> d = mu.density().on_grid(M);
  p.ac_density.resize(static_cast<size_t>(M));
  p.s_density.resize(static_cast<size_t>(M));
  for (int J = 0; J < M; ++J) {
    const double e = f[static_cast<size_t>(J)] > cut ? est[static_cast<size_t>(J)] : 0.0;
    const double s = std::max(d[static_cast<size_t>(J)] - e, 0.0);
    p.s_density[static_cast<size_t>(J)] = s;
    p.ac_density[static_cast<size_t>(J)] = d[static_cast<size_t>(J)] - s;
  }

  const double tol = kTwoPi / N;
  for (const Atom& a : mu.atoms()) {
    bool ac = false;
    for (const Atom& b : ref.atoms())
      if (colocated(a.angle, b.angle, tol)) { ac = true; break; }
    (ac ? p.ac_atoms : p.s_atoms).push_back(a);
  }
  return p;
}

Parts parts_for(const CircleMeasure& mu, const CircleMeasure& lam, Strategy strategy,
                int N, int M) {
  if (strategy == Strategy::DirectNonExtreme) return direct_parts(mu, lam, N, M);

  // Extreme reference: decompose against lam + m and against m alone, then
  // subtract. The ac part that survives is what lam contributes beyond
  // Lebesgue measure (its atoms, in the representable class).
  const CircleMeasure m = CircleMeasure::lebesgue();
  const Parts p1 = direct_parts(mu, combine(1.0, lam, 1.0, m), N, M);
  const Parts p2 = direct_parts(mu, m, N, M);

  Parts p;
  const std::vector<double> d = mu.density().on_grid(M);
  p.ac_density.resize(static_cast<size_t>(M));
  p.s_density.resize(static_cast<size_t>(M));
  for (int J = 0; J < M; ++J) {
    const double a = std::max(
        p1.ac_density[static_cast<size_t>(J)] - p2.ac_density[static_cast<size_t>(J)], 0.0);
    p.ac_density[static_cast<size_t>(J)] = a;
    p.s_density[static_cast<size_t>(J)] = d[static_cast<size_t>(J)] - a;
  }
  for (const Atom& a : mu.atoms()) {
    bool in1 = false, in2 = false;
    for (const Atom& b : p1.ac_atoms)
      if (b.angle == a.angle) { in1 = true; break; }
    for (const Atom& b : p2.ac_atoms)
      if (b.angle == a.angle) { in2 = true; break; }
    (in1 && !in2 ? p.ac_atoms : p.s_atoms).push_back(a);
  }
  return p;
}

int intersection_rank(const CircleMeasure& mu, const CircleMeasure& lam) {
  const std::vector<Complex> pts = default_disk_grid(16);
  SpacePair sp{gram(mu, pts), gram(lam, pts)};
  return numerical_rank(lattice_split(sp).G_wedge.entries);
}

}  // namespace

Invariance invariance_classifier(const CircleMeasure& mu, const CircleMeasure& lam) {
  if (is_extreme(lam) == Extremeness::NonExtreme) return Invariance::Reducing;
  if (is_extreme(mu) == Extremeness::NonExtreme) return Invariance::Unknown;
  const Extremeness sum = is_extreme(combine(1.0, mu, 1.0, lam));
  return sum == Extremeness::Extreme ? Invariance::Reducing : Invariance::NotReducing;
}

std::vector<Atom> fatou_atom_scan(const CircleMeasure& mu, int N) {
  if (N < 16 || !is_power_of_two(N))
    throw ValidationError("atom scan needs a power-of-two grid >= 16");
  const double mass = herglotz(mu, Complex(0.0, 0.0)).real();
  return detail::scan_atoms([&mu](Complex z) { return herglotz(mu, z).real(); },
                            N, 1.0 - 1.0 / N, 1.0 - 2.0 / N,
                            1e-4 * std::max(mass, 1e-12));
}

DecompositionReport lebesgue_decompose(const CircleMeasure& mu, const CircleMeasure& lam,
                                       int N) {
  if (N < 64 || !is_power_of_two(N))
    throw ValidationError("decomposition needs a power-of-two grid >= 64");

  DecompositionReport rep;
  rep.strategy = is_extreme(lam) == Extremeness::NonExtreme ? Strategy::DirectNonExtreme
                                                            : Strategy::AddLebesgue;
  rep.invariance = invariance_classifier(mu, lam);
  rep.detected_mu_atoms = fatou_atom_scan(mu, N);
  rep.detected_lam_atoms = fatou_atom_scan(lam, N);

  int rank = -1;
  try {
    rank = intersection_rank(mu, lam);
  } catch (const NumericalError&) {
    rank = -1;
  }

  Parts last;
  for (const int n : {N / 4, N / 2, N}) {
    const int M = assembly_grid(mu, n);
    Parts p = parts_for(mu, lam, rep.strategy, n, M);
    TraceEntry t;
    t.N = n;
    double acc = 0.0;
    for (double v : p.ac_density) acc += v;
    t.ac_mass = acc / M;
    for (const Atom& a : p.ac_atoms) t.ac_mass += a.weight;
    t.intersection_rank = rank;
    try {
      double res = 0.0;
      rn_extract(mu, lam, n, std::min(4, n / 2), &res);
      t.rn_residual = res;
    } catch (const NumericalError&) {
      t.rn_residual = std::numeric_limits<double>::quiet_NaN();
    }
    rep.traces.push_back(t);
    if (n == N) last = std::move(p);
  }

  rep.mu_ac = CircleMeasure::from_samples(std::move(last.ac_density), std::move(last.ac_atoms));
  rep.mu_s = CircleMeasure::from_samples(std::move(last.s_density), std::move(last.s_atoms));
  return rep;
}

HalfCircleReport halfcircle_example(int order) {
  if (order < 8) throw ValidationError("half-circle report needs order >= 8");
  HalfCircleReport rep;
  rep.order = order;

  rep.coeffs_moment.resize(static_cast<size_t>(order + 1));
  rep.coeffs_moment[0] = Complex(0.5, 0.0);
  for (int j = 1; j <= order; ++j)
    rep.coeffs_moment[static_cast<size_t>(j)] =
        j % 2 == 1 ? Complex(0.0, -1.0 / (kPi * j)) : Complex(0.0, 0.0);

  // Closed form (2 pi i)^{-1} log((z+1)/(z-1)) sampled on |z| = rho; the
  // branch-stable split log(1+z) - log(1-z) + i pi stays in the right half
  // plane. Coefficients by discrete orthogonality; the wrap error is
  // rho^M and roundoff grows like rho^{-order}.
  const double rho = 0.9;
  const int Msamp = 4096;
  auto k_plus = [](Complex z) {
    return 0.5 + (std::log(1.0 + z) - std::log(1.0 - z)) / Complex(0.0, kTwoPi);
  };
  std::vector<Complex> vals(static_cast<size_t>(Msamp));
  for (int l = 0; l < Msamp; ++l)
    vals[static_cast<size_t>(l)] = k_plus(rho * unit(kTwoPi * l / Msamp));
  rep.coeffs_series.resize(static_cast<size_t>(order + 1));
  for (int j = 0; j <= order; ++j) {
    Complex acc(0.0, 0.0);
    for (int l = 0; l < Msamp; ++l)
      acc += vals[static_cast<size_t>(l)] *
             unit(-kTwoPi * static_cast<double>(j) * l / Msamp);
    rep.coeffs_series[static_cast<size_t>(j)] =
        acc / (static_cast<double>(Msamp) * std::pow(rho, j));
  }

  rep.coeff_discrepancy = 0.0;
  for (int j = 0; j <= order; ++j)
    rep.coeff_discrepancy =
        std::max(rep.coeff_discrepancy,
                 std::abs(rep.coeffs_moment[static_cast<size_t>(j)] -
                          rep.coeffs_series[static_cast<size_t>(j)]));
  rep.value_at_zero = k_plus(Complex(0.0, 0.0));

  // Lower-half column from its own moment formula; the two columns sum to
  // the constant kernel column and their shifted tails negate exactly.
  std::vector<Complex> lower(static_cast<size_t>(order + 1));
  lower[0] = Complex(0.5, 0.0);
  for (int j = 1; j <= order; ++j)
    lower[static_cast<size_t>(j)] =
        j % 2 == 1 ? Complex(0.0, 1.0 / (kPi * j)) : Complex(0.0, 0.0);

  rep.complement_residual = 0.0;
  for (int j = 0; j <= order; ++j) {
    const Complex sum =
        rep.coeffs_moment[static_cast<size_t>(j)] + lower[static_cast<size_t>(j)];
    const Complex target = j == 0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    rep.complement_residual = std::max(rep.complement_residual, std::abs(sum - target));
  }

  const std::vector<Complex> up_shift = backward_shift_coeffs(rep.coeffs_moment);
  const std::vector<Complex> lo_shift = backward_shift_coeffs(lower);
  rep.antisymmetry_residual = 0.0;
  for (size_t j = 0; j < up_shift.size(); ++j)
    rep.antisymmetry_residual =
        std::max(rep.antisymmetry_residual, std::abs(up_shift[j] + lo_shift[j]));
  return rep;
}

std::vector<TraceEntry> ac_mass_trace(const CircleMeasure& mu, const CircleMeasure& lam,
                                      const std::vector<int>& N_list) {
  for (size_t i = 0; i < N_list.size(); ++i) {
    if (!is_power_of_two(N_list[i]) || N_list[i] < 64)
      throw ValidationError("trace resolutions must be powers of two >= 64");
    if (i > 0 && N_list[i] <= N_list[i - 1])
      throw ValidationError("trace resolutions must increase");
  }
  std::vector<TraceEntry> out;
  for (const int N : N_list) {
    const DecompositionReport rep = lebesgue_decompose(mu, lam, N);
    TraceEntry t = rep.traces.back();
    t.ac_mass = rep.mu_ac.total_mass();
    out.push_back(t);
  }
  return out;
}

}  // namespace circlekit
