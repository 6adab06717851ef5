#pragma once

#include <functional>
#include <vector>

#include "circlekit/measure.hpp"

namespace circlekit {

// Herglotz-Riesz transform H_mu(z) = integral of (1 + z*conj(zeta)) /
// (1 - z*conj(zeta)) d mu(zeta). Exact (finite moment sum plus geometric atom
// terms) for trig-poly densities; periodic trapezoid quadrature for sampled
// densities. Throws OutsideDisk for |z| >= 1.
Complex herglotz(const CircleMeasure& mu, Complex z);

// mu-Cauchy transform of an analytic polynomial h at z:
// sum_j z^j <zeta^j, h>_{L^2(mu)}.
Complex cauchy(const CircleMeasure& mu, const AnalyticPoly& h, Complex z);

// Contractive analytic function on the disk, |b| <= 1: a polynomial
// coefficient list, the Cayley transform of a stored measure, or a gauge
// shift of another contractive function.
class ContractiveFunction {
 public:
  static ContractiveFunction from_poly(std::vector<Complex> coeffs);
  static ContractiveFunction cayley_of(CircleMeasure mu);

  Complex operator()(Complex z) const { return eval_(z); }
  // H_b(z) = (1 + b(z)) / (1 - b(z)); Re H_b >= 0.
  Complex herglotz_value(Complex z) const;

  friend ContractiveFunction mobius_gauge(const ContractiveFunction& b, double t);

 private:
  std::function<Complex(Complex)> eval_;
};

ContractiveFunction b_from_measure(const CircleMeasure& mu);

// r_k = 1 - 2^{-k} for k = 4..12.
std::vector<double> default_radii();

// Reconstructs the Clark measure of b on an n-point grid: density from the
// Fatou quotient (1-|b|^2)/|1-b|^2 at the largest radius, atoms where
// (1-r) Re H_b(r zeta)/2 stabilizes above atom_floor (relative to the mass
// estimate H_b(0)). Detected atoms have their Poisson profile removed from
// the density trace. Throws NonContractive when |b| > 1 + 1e-8 is sampled.
CircleMeasure clark_measure(const ContractiveFunction& b, int grid,
                            const std::vector<double>& radii = default_radii());

// Gauge transform fixing the Clark measure: the Cayley transform of
// H_b + i t. Equals a rotated Moebius reparametrization of b; t = 0 returns
// an evaluator identical to b.
ContractiveFunction mobius_gauge(const ContractiveFunction& b, double t);

// Szego distance exp of integral of log(d mu_ac/dm) dm. Trig-poly densities
// evaluate exactly through the outer spectral factor g (the integral is
// 2 log g(0)); sampled densities use clamped quadrature with divergence
// cutoff log_floor. Atoms contribute nothing.
double szego_distance(const CircleMeasure& mu, double log_floor = -40.0);

enum class Extremeness { Extreme, NonExtreme };

// Extreme iff the Szego distance falls to extreme_floor relative to mass.
Extremeness is_extreme(const CircleMeasure& mu, double extreme_floor = 1e-8);

}  // namespace circlekit
