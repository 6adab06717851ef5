#pragma once

#include <Eigen/Dense>

namespace circlekit {

// Positive kernel on a finite set, stored as its Hermitian PSD matrix of
// values k(x_i, x_j).
struct FiniteKernel {
  Eigen::MatrixXcd entries;

  int set_size() const { return static_cast<int>(entries.rows()); }
  // Validates Hermitian symmetry and positive semidefiniteness.
  static FiniteKernel checked(Eigen::MatrixXcd entries);
};

struct KernelDecomposition {
  FiniteKernel k_ac;
  FiniteKernel k_s;
  int iterations = 0;
  bool converged = false;
  // Frobenius residual of k_ac outside the range of the reference kernel,
  // relative to ||k||; small means H(k_ac) embeds in H(K).
  double range_residual = 0.0;
};

// Lebesgue decomposition of k against the reference K: k_ac is the largest
// positive kernel below k whose columns live in the range of K (the
// parallel-sum limit), k_s the remainder. k = k_ac + k_s and both are PSD.
KernelDecomposition kernel_lebesgue(const FiniteKernel& k, const FiniteKernel& K);

struct OrthogonalSplitReport {
  int rank_k = 0;
  int rank_ac = 0;
  int rank_s = 0;
  bool rank_additive = false;
  double cross_norm = 0.0;  // Gram angle between the two ranges inside H(k)
  bool pass = false;
};

// Checks that H(k) splits orthogonally: rank(k_ac) + rank(k_s) = rank(k) at
// eigenvalue cutoff 1e-10 ||k||, and the ranges are Gram-orthogonal,
// ||(k^+)^{1/2} k_ac k^+ k_s (k^+)^{1/2}||_F <= 1e-8. Requires
// k = k_ac + k_s to 1e-10 relative.
OrthogonalSplitReport orthogonal_split_check(const FiniteKernel& k,
                                             const FiniteKernel& k_ac,
                                             const FiniteKernel& k_s);

}  // namespace circlekit
