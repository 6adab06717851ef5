#pragma once

#include <Eigen/Dense>
#include <vector>

#include "circlekit/trigpoly.hpp"
#include "circlekit/util.hpp"

namespace circlekit {

struct Atom {
  double angle;   // in [0, 2*pi)
  double weight;  // > 0
};

// A real-valued function on the circle, either a trig polynomial or samples
// on a uniform power-of-two grid theta_j = 2*pi*j/M.
class CircleFunction {
 public:
  CircleFunction() : poly_(TrigPoly::constant(0.0)) {}
  static CircleFunction from_poly(TrigPoly p);
  static CircleFunction from_samples(std::vector<double> samples);

  bool sampled() const { return sampled_; }
  const TrigPoly& poly() const { return poly_; }
  const std::vector<double>& samples() const { return samples_; }
  int grid_size() const { return static_cast<int>(samples_.size()); }

  double at(double theta) const;  // nearest-sample lookup in sampled mode
  // Values on theta_j = 2*pi*j/n; for sampled mode n must divide or be
  // divided by the native grid (power-of-two alignment).
  std::vector<double> on_grid(int n) const;
  double mean() const;  // integral against normalized Lebesgue measure

 private:
  bool sampled_ = false;
  TrigPoly poly_;
  std::vector<double> samples_;
};

// Positive finite Borel measure on the unit circle: an absolutely continuous
// part given by a nonnegative density with respect to normalized Lebesgue
// measure, plus finitely many atoms. Atom angles are pairwise separated by
// more than 1e-9; coincident atoms merge on construction.
class CircleMeasure {
 public:
  CircleMeasure();  // zero measure

  static CircleMeasure from_density(TrigPoly density, std::vector<Atom> atoms = {});
  static CircleMeasure from_samples(std::vector<double> samples,
                                    std::vector<Atom> atoms = {});
  static CircleMeasure from_function(const CircleFunction& density,
                                     std::vector<Atom> atoms = {});

  static CircleMeasure lebesgue();                      // m
  static CircleMeasure lebesgue_upper(int grid = 4096); // m restricted to (0, pi)
  static CircleMeasure lebesgue_lower(int grid = 4096); // m restricted to (pi, 2*pi)
  static CircleMeasure point_mass(double angle, double weight);

  const CircleFunction& density() const { return density_; }
  const std::vector<Atom>& atoms() const { return atoms_; }

  double density_mass() const { return density_.mean(); }
  double atom_mass() const;
  double total_mass() const { return density_mass() + atom_mass(); }
  bool is_zero() const;

 private:
  CircleFunction density_;
  std::vector<Atom> atoms_;
};

// Moments mu_hat(n) = integral of conj(zeta)^n d mu for 0 <= n <= N;
// mu_hat(-n) = conj(mu_hat(n)).
struct MomentSequence {
  int N = 0;
  std::vector<Complex> vals;  // index n = 0..N

  Complex at(long n) const;
  double mass() const { return vals.empty() ? 0.0 : vals[0].real(); }
  // Toeplitz moment matrix, entry (i, j) = mu_hat(j - i), size (N+1)^2.
  Eigen::MatrixXcd toeplitz() const;
};

MomentSequence moments(const CircleMeasure& mu, int N);
// mu_hat(n) for a single n of either sign.
Complex moment_at(const CircleMeasure& mu, long n);

// a*mu + b*nu for a, b >= 0. Mixed density representations are resampled on
// the finer of the two grids (default 4096 when a trig polynomial meets
// samples it cannot join exactly).
CircleMeasure combine(double a, const CircleMeasure& mu, double b, const CircleMeasure& nu);

struct ClassicalDecomposition {
  CircleMeasure ac;
  CircleMeasure s;
};

// Representation-level Lebesgue decomposition of mu with respect to lam:
// ac density = density of mu where lam's density exceeds eps_supp (relative
// to its maximum), ac atoms = atoms of mu co-located with atoms of lam.
// ac + s = mu exactly, sample-wise and atom-wise.
ClassicalDecomposition classical_decompose_oracle(const CircleMeasure& mu,
                                                  const CircleMeasure& lam,
                                                  double eps_supp = 1e-9);

// Radon-Nikodym derivative f = d mu / d lam for mu absolutely continuous with
// respect to lam (verified through classical_decompose_oracle; throws
// NotAbsolutelyContinuous otherwise). Atom pairs contribute weight ratios at
// their angles; the density quotient is returned on lam's support.
CircleFunction rn_derivative_oracle(const CircleMeasure& mu, const CircleMeasure& lam,
                                    double eps_supp = 1e-9);

}  // namespace circlekit
