#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "circlekit/measure.hpp"

namespace circlekit {

// Default seed for the pseudo-random disk grid; CIRCLEKIT_SEED overrides it
// in the CLI.
inline constexpr std::uint64_t kDefaultSeed = 0xC12C;

enum class KernelMethod { Integral, Herglotz };

// Reproducing kernel of the Cauchy-transform space of mu:
//   Integral: integral of (1 - z conj(zeta))^{-1} (1 - conj(w) zeta)^{-1} dmu
//   Herglotz: (H_mu(z) + conj(H_mu(w))) / (2 (1 - z conj(w)))
// The two routes agree within 1e-8 relative. Throws OutsideDisk.
Complex kernel_eval(const CircleMeasure& mu, Complex z, Complex w,
                    KernelMethod method = KernelMethod::Integral);

struct KernelGram {
  std::vector<Complex> points;
  Eigen::MatrixXcd entries;

  int dim() const { return static_cast<int>(entries.rows()); }
};

// Gram matrix [k^mu(z_i, z_j)] on disk points. threads > 1 splits rows.
KernelGram gram(const CircleMeasure& mu, const std::vector<Complex>& points,
                KernelMethod method = KernelMethod::Integral, int threads = 1);

// Coefficient (Toeplitz) kernel, entry (i, j) = mu_hat(j - i), size (N+1)^2.
// The points field carries the coefficient indices 0..N on the real axis.
KernelGram coeff_kernel(const CircleMeasure& mu, int N);

struct PsdVerdict {
  bool psd;
  double min_eig;
};

// Verdict by the smallest eigenvalue against -tol * trace/dim. Throws
// NotHermitian when G is not Hermitian to 1e-12 relative.
PsdVerdict psd_check(const Eigen::MatrixXcd& G, double tol = 1e-10);

struct DominationVerdict {
  bool dominated;
  double min_eig;
  Eigen::VectorXcd witness;  // eigenvector of the most negative direction
};

// Reproducing-kernel domination test: Dominated iff t^2 gram(lam) - gram(mu)
// is PSD on the grid. Sound for mu <= t^2 lam; a finite grid cannot prove
// the converse, only exhibit witnesses.
DominationVerdict dominates_rk(const CircleMeasure& mu, const CircleMeasure& lam,
                               double t, const std::vector<Complex>& points);

// Fixed-seed pseudo-random grid of n points with |z| <= radius.
std::vector<Complex> default_disk_grid(int n = 64, std::uint64_t seed = kDefaultSeed,
                                       double radius = 0.95);

}  // namespace circlekit
