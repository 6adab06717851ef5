#include "circlekit/kernelpair.hpp"

#include <cmath>
#include <string>

#include "circlekit/errors.hpp"
#include "circlekit/forms.hpp"
#include "circlekit/kernel.hpp"
#include "circlekit/linalg.hpp"

namespace circlekit {

FiniteKernel FiniteKernel::checked(Eigen::MatrixXcd entries) {
  if (entries.rows() != entries.cols())
    throw DimensionMismatch("kernel matrix must be square");
  const double scale = std::max(entries.cwiseAbs().maxCoeff(), 1e-300);
  if ((entries - entries.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw NotHermitian("kernel matrix is not Hermitian");
  const PsdVerdict v = psd_check(hermitize(entries));
  if (!v.psd)
    throw NotNonnegative("kernel matrix has eigenvalue " + std::to_string(v.min_eig));
  return FiniteKernel{std::move(entries)};
}

KernelDecomposition kernel_lebesgue(const FiniteKernel& k, const FiniteKernel& K) {
  if (k.set_size() != K.set_size())
    throw DimensionMismatch("kernels live on sets of different size");
  // The split feeds rank counts at cutoff 1e-10 ||k||, so the ladder must
  // stop well below that or its tail shows up as a spurious rank.
  const FormDecomposition fd =
      simon_decompose(FormPair{k.entries, K.entries}, 60, 1e-13);

  KernelDecomposition out;
  out.k_ac.entries = fd.A_ac;
  out.k_s.entries = fd.A_s;
  out.iterations = fd.iterations;
  out.converged = fd.converged;

  // Range-inclusion residual: project k_ac against the orthocomplement of
  // ran(K).
  const int n = K.set_size();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitize(K.entries));
  const double cutoff = 1e-10 * std::max(es.eigenvalues().cwiseAbs().maxCoeff(), 1e-300);
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    if (es.eigenvalues()(i) > cutoff)
      P += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  const Eigen::MatrixXcd Q = Eigen::MatrixXcd::Identity(n, n) - P;
  out.range_residual = (Q * out.k_ac.entries * Q).norm() / std::max(k.entries.norm(), 1e-300);
  return out;
}

namespace {

int rank_at(const Eigen::MatrixXcd& A, double cutoff) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitize(A), Eigen::EigenvaluesOnly);
  int r = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > cutoff) ++r;
  return r;
}

}  // namespace

OrthogonalSplitReport orthogonal_split_check(const FiniteKernel& k,
                                             const FiniteKernel& k_ac,
                                             const FiniteKernel& k_s) {
  const int n = k.set_size();
  if (k_ac.set_size() != n || k_s.set_size() != n)
    throw DimensionMismatch("kernels live on sets of different size");
  const double scale = std::max(k.entries.norm(), 1e-300);
  if ((k.entries - k_ac.entries - k_s.entries).norm() > 1e-10 * scale)
    throw ValidationError("parts do not sum to the kernel");

  OrthogonalSplitReport rep;
  const double cutoff = 1e-10 * operator_norm(k.entries);
  rep.rank_k = rank_at(k.entries, cutoff);
  rep.rank_ac = rank_at(k_ac.entries, cutoff);
  rep.rank_s = rank_at(k_s.entries, cutoff);
  rep.rank_additive = rep.rank_ac + rep.rank_s == rep.rank_k;

  const Eigen::MatrixXcd kp = pseudo_inverse_psd(hermitize(k.entries), 1e-10);
  const Eigen::MatrixXcd kph = sqrt_psd(kp);
  rep.cross_norm = (kph * k_ac.entries * kp * k_s.entries * kph).norm();
  rep.pass = rep.rank_additive && rep.cross_norm <= 1e-8;
  return rep;
}

}  // namespace circlekit
