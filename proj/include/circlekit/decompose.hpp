#pragma once

#include <vector>

#include "circlekit/measure.hpp"
#include "circlekit/util.hpp"

namespace circlekit {

// How the absolutely continuous part was assembled: directly from the
// reference's Fatou support (valid when the reference is NonExtreme), or by
// decomposing against reference + Lebesgue and against Lebesgue alone and
// subtracting.
enum class Strategy { DirectNonExtreme, AddLebesgue };

// Whether the intersection space of the two kernels is known to reduce the
// shift. Decidable sufficient conditions only; Unknown is an honest verdict.
enum class Invariance { Reducing, NotReducing, Unknown };

struct TraceEntry {
  int N = 0;
  double ac_mass = 0.0;
  double rn_residual = 0.0;     // NaN when deconvolution is unavailable
  int intersection_rank = 0;    // -1 when the lattice split failed
};

struct DecompositionReport {
  CircleMeasure mu_ac;
  CircleMeasure mu_s;
  Strategy strategy = Strategy::DirectNonExtreme;
  Invariance invariance = Invariance::Unknown;
  std::vector<TraceEntry> traces;
  // Diagnostic: atoms seen by the Herglotz-trace estimator at the working
  // resolution (independent of the representation's atom list).
  std::vector<Atom> detected_mu_atoms;
  std::vector<Atom> detected_lam_atoms;
};

// Reducing if lam is NonExtreme, or if mu, lam and mu + lam are all Extreme;
// NotReducing if mu, lam are Extreme but mu + lam is not; Unknown otherwise.
Invariance invariance_classifier(const CircleMeasure& mu, const CircleMeasure& lam);

// Atom scan from Herglotz traces on an N-point grid: a point carries an atom
// when (1-r) Re H(r zeta) / 2 stabilizes across the two finest radii
// (ratio < 1.35) above 1e-4 of the mass. Weight estimate 2 a / (1 + r).
// Resolves atoms lying close to grid points; N must be a power of two >= 16.
std::vector<Atom> fatou_atom_scan(const CircleMeasure& mu, int N);

// Lebesgue decomposition of mu against lam through the reproducing-kernel
// pipeline: Fatou densities at radius 1 - 1/N on an N-point grid, atom
// detection and Poisson-profile subtraction, support indicator at 1e-4 of
// the reference's peak density, exact sample-level assembly so that
// mu_ac + mu_s reproduces mu's moments to machine precision. When lam is
// Extreme the add-Lebesgue subtraction route is used. Traces carry the
// ac-mass estimate, the moment-deconvolution residual at resolutions
// N/4, N/2, N, and the kernel-intersection rank on a 16-point disk grid.
// N must be a power of two >= 64.
DecompositionReport lebesgue_decompose(const CircleMeasure& mu, const CircleMeasure& lam,
                                       int N);

// Taylor data of the kernel column at 0 for Lebesgue measure restricted to
// the upper half circle, computed two ways: the moment formula
// (1 - (-1)^j) / (2 pi i j), and sampling of the closed logarithmic form
// followed by coefficient extraction on |z| = 0.9. Also carries the
// complementary column for the lower half circle and the backward-shift
// antisymmetry residual (exactly zero: the two coefficient tails negate).
struct HalfCircleReport {
  int order = 0;
  std::vector<Complex> coeffs_moment;  // moment route, j = 0..order
  std::vector<Complex> coeffs_series;  // sampled closed form, j = 0..order
  double coeff_discrepancy = 0.0;      // max_j |moment - series|
  Complex value_at_zero;               // closed form at z = 0; equals 1/2
  double complement_residual = 0.0;    // max_j |upper_j + lower_j - [j == 0]|
  double antisymmetry_residual = 0.0;  // max_j |shift(upper)_j + shift(lower)_j|
};

HalfCircleReport halfcircle_example(int order);

// lebesgue_decompose at each N in an increasing power-of-two list,
// tabulating (N, ac mass, deconvolution residual, intersection rank).
std::vector<TraceEntry> ac_mass_trace(const CircleMeasure& mu, const CircleMeasure& lam,
                                      const std::vector<int>& N_list);

}  // namespace circlekit
