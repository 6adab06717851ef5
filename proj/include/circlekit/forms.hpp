#pragma once

#include <Eigen/Dense>

#include "circlekit/measure.hpp"
#include "circlekit/trigpoly.hpp"

namespace circlekit {

// A pair of Hermitian PSD forms on the same truncated polynomial basis:
// A the form under study, B the reference form.
struct FormPair {
  Eigen::MatrixXcd A;
  Eigen::MatrixXcd B;

  // Validates Hermitian symmetry, equal dimensions, and positive
  // semidefiniteness. Throws NotHermitian / DimensionMismatch /
  // NotNonnegative.
  static FormPair checked(Eigen::MatrixXcd A, Eigen::MatrixXcd B);
};

// Splitting of A into a part dominated by B and a residual supported away
// from B's range.
struct FormDecomposition {
  Eigen::MatrixXcd A_ac;
  Eigen::MatrixXcd A_s;
  int iterations = 0;
  bool converged = false;
};

// Ando parallel sum A : B = A (A+B)^+ B. Symmetric in its arguments,
// Hermitian PSD, and below both A and B in the PSD order.
Eigen::MatrixXcd parallel_sum(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B);

// Absolutely-continuous / singular splitting of A relative to B via the
// monotone limit A_ac = lim_k  A : (2^k B). Stops when consecutive iterates
// agree to stop_rel * ||A||_F; throws NotConverged if kmax passes first. The
// stopping delta is also the size of the convergence tail left in the parts,
// so callers comparing the split against a rank cutoff should stop below it.
FormDecomposition simon_decompose(const FormPair& fp, int kmax = 60,
                                  double stop_rel = 1e-10);

// Frobenius residual (scaled by dimension) of the identity
// (I + T)^{-1} = B^{1/2} (A+B)^{-1} B^{1/2}  with  T = B^{-1/2} A B^{-1/2}.
// Requires B positive definite; throws SingularReference otherwise.
double resolvent_identity_residual(const FormPair& fp);

// Recovers a degree-d real density f with mu ~ f * lam by least squares on
// the moment convolution mu_hat(n) = sum_j f_hat(j) lam_hat(n-j), |n| <= N.
// Softly projects to the nonnegative cone (clamped Cesaro means) when the
// solution dips below -1e-6 on a 1024-point grid. Throws IllPosed when the
// design matrix condition number exceeds 1e12. residual_out, if non-null,
// receives the l2 moment mismatch of the returned polynomial.
TrigPoly rn_extract(const CircleMeasure& mu, const CircleMeasure& lam, int N, int d,
                    double* residual_out = nullptr);

}  // namespace circlekit
