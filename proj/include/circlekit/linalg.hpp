#pragma once

#include <Eigen/Dense>

namespace circlekit {

// Moore-Penrose inverse of a Hermitian PSD matrix through its
// eigendecomposition; eigenvalues below rel_cutoff * max are treated as zero.
inline Eigen::MatrixXcd pseudo_inverse_psd(const Eigen::MatrixXcd& A,
                                           double rel_cutoff = 1e-12) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A);
  const auto& d = es.eigenvalues();
  const double cutoff = rel_cutoff * std::max(d.cwiseAbs().maxCoeff(), 1e-300);
  Eigen::VectorXcd inv = Eigen::VectorXcd::Zero(d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (d(i) > cutoff) inv(i) = 1.0 / d(i);
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint();
}

// Hermitian square root with the same eigenvalue cutoff.
inline Eigen::MatrixXcd sqrt_psd(const Eigen::MatrixXcd& A) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A);
  const Eigen::VectorXcd r =
      es.eigenvalues().cwiseMax(0.0).cwiseSqrt().cast<std::complex<double>>();
  return es.eigenvectors() * r.asDiagonal() * es.eigenvectors().adjoint();
}

inline Eigen::MatrixXcd hermitize(const Eigen::MatrixXcd& A) {
  return 0.5 * (A + A.adjoint());
}

inline double operator_norm(const Eigen::MatrixXcd& A) {
  if (A.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(A).singularValues()(0);
}

// Count of eigenvalues above rel_cutoff * largest (Hermitian input).
inline int numerical_rank(const Eigen::MatrixXcd& A, double rel_cutoff = 1e-6) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A, Eigen::EigenvaluesOnly);
  const double top = es.eigenvalues().cwiseAbs().maxCoeff();
  if (top <= 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > rel_cutoff * top) ++r;
  return r;
}

}  // namespace circlekit
