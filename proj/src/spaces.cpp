#include "circlekit/spaces.hpp"

#include <cmath>

#include "circlekit/errors.hpp"
#include "circlekit/linalg.hpp"

namespace circlekit {

TruncatedOperator TruncatedOperator::coeff(Eigen::MatrixXcd m) {
  TruncatedOperator op;
  op.size = static_cast<int>(m.rows());
  op.matrix = std::move(m);
  op.basis = Basis::Coeff;
  return op;
}

TruncatedOperator TruncatedOperator::grid(Eigen::MatrixXcd m) {
  TruncatedOperator op;
  op.size = static_cast<int>(m.rows());
  op.matrix = std::move(m);
  op.basis = Basis::Grid;
  return op;
}

TruncatedOperator TruncatedOperator::coeff_shift(int n) {
  Eigen::MatrixXcd V = Eigen::MatrixXcd::Zero(n, n);
  for (int j = 1; j < n; ++j) V(j, j - 1) = 1.0;
  return coeff(std::move(V));
}

std::vector<Complex> backward_shift_coeffs(const std::vector<Complex>& h) {
  if (h.size() <= 1) return {};
  return std::vector<Complex>(h.begin() + 1, h.end());
}

double shift_action_check(const CircleMeasure& mu, Complex z, int N) {
  if (std::abs(z) >= 1.0) throw OutsideDisk("shift_action_check needs |z| < 1");
  if (N < 1) throw ValidationError("shift_action_check needs N >= 1");

  // Taylor coefficients of k_z: a_j = sum_{k=0..N} conj(z)^k mu_hat(j-k),
  // kept through order N+1 so the shifted vector stays in range.
  const int J = N + 1;
  std::vector<Complex> mom(static_cast<size_t>(2 * N + 2));
  for (int n = 0; n <= 2 * N + 1; ++n) mom[static_cast<size_t>(n)] = moment_at(mu, n);
  auto mhat = [&](long n) {
    const long a = std::labs(n);
    return n >= 0 ? mom[static_cast<size_t>(a)] : std::conj(mom[static_cast<size_t>(a)]);
  };

  // a(i) holds a_{i-1}: the identity conj(z) a_{j-1} = a_j - mu_hat(j)
  // holds at j = 0 too (a_{-1} collects the negative moments), so the
  // difference below is purely the order-N truncation tail.
  const Complex zb = std::conj(z);
  Eigen::VectorXcd a(J + 2);
  for (int j = -1; j <= J; ++j) {
    Complex acc(0.0, 0.0);
    Complex zp(1.0, 0.0);
    for (int k = 0; k <= N; ++k) {
      acc += zp * mhat(j - k);
      zp *= zb;
    }
    a(j + 1) = acc;
  }

  Eigen::VectorXcd lhs(J + 1), rhs(J + 1);
  for (int j = 0; j <= J; ++j) {
    lhs(j) = zb * a(j);
    rhs(j) = a(j + 1) - mhat(j);
  }

  const Eigen::VectorXcd d = lhs - rhs;
  // mu-norm through the moment metric: Taylor vectors t = G c with
  // G(i,j) = mu_hat(i-j), so ||t||^2 = t* G^+ t.
  Eigen::MatrixXcd G(J + 1, J + 1);
  for (int i = 0; i <= J; ++i)
    for (int j = 0; j <= J; ++j) G(i, j) = mhat(i - j);
  const Complex q = d.adjoint() * pseudo_inverse_psd(hermitize(G)) * d;
  return std::sqrt(std::max(q.real(), 0.0));
}

double toeplitz_residual(const TruncatedOperator& T, const TruncatedOperator& V) {
  if (T.basis != V.basis || T.size != V.size)
    throw DimensionMismatch("operator bases differ");
  const int n = T.size;
  if (n < 2) throw DimensionMismatch("need dimension >= 2 for a leading block");
  const Eigen::MatrixXcd R = V.matrix.adjoint() * T.matrix * V.matrix - T.matrix;
  const double num = R.topLeftCorner(n - 1, n - 1).norm();
  const double den = T.matrix.topLeftCorner(n - 1, n - 1).norm();
  return den > 0.0 ? num / den : num;
}

LatticeSplit lattice_split(const SpacePair& sp) {
  const int n = sp.G_mu.dim();
  if (sp.G_lam.dim() != n) throw DimensionMismatch("kernel grids differ in size");

  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  M.topLeftCorner(n, n) = sp.G_mu.entries;
  M.bottomRightCorner(n, n) = sp.G_lam.entries;

  Eigen::MatrixXcd G_sum = sp.G_mu.entries + sp.G_lam.entries;
  const double ridge =
      1e-10 * std::abs(G_sum.trace().real()) / static_cast<double>(std::max(n, 1));
  G_sum += ridge * Eigen::MatrixXcd::Identity(n, n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitize(G_sum));
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (lo <= 0.0 || hi / lo > 1e12)
    throw SingularMetric("sum metric condition " + std::to_string(hi / std::max(lo, 1e-300)));
  const Eigen::VectorXcd inv_eigs = es.eigenvalues().cwiseInverse().cast<Complex>();
  const Eigen::MatrixXcd G_sum_inv =
      es.eigenvectors() * inv_eigs.asDiagonal() * es.eigenvectors().adjoint();

  Eigen::MatrixXcd S = Eigen::MatrixXcd::Zero(2 * n, n);
  S.topRows(n) = Eigen::MatrixXcd::Identity(n, n);
  S.bottomRows(n) = Eigen::MatrixXcd::Identity(n, n);

  // Spread the ridge over the block metric so that S* M_r S is exactly the
  // ridged sum that was inverted; the projection is then idempotent instead of
  // drifting by ridge / sigma_min^2 on ill-conditioned grids.
  const Eigen::MatrixXcd M_r =
      M + (0.5 * ridge) * Eigen::MatrixXcd::Identity(2 * n, 2 * n);

  LatticeSplit out;
  out.P_vee = S * G_sum_inv * S.adjoint() * M_r;
  out.P_wedge = Eigen::MatrixXcd::Identity(2 * n, 2 * n) - out.P_vee;

  // Intersection Gram: wedge-project the first-slot kernel columns and read
  // inner products in the block metric.
  Eigen::MatrixXcd E = out.P_wedge.leftCols(n);
  out.G_wedge.points = sp.G_mu.points;
  out.G_wedge.entries = hermitize(E.adjoint() * M * E);
  return out;
}

KernelGram complementary_kernel(const KernelGram& G_big, const KernelGram& G_small) {
  if (G_big.dim() != G_small.dim())
    throw DimensionMismatch("kernel grids differ in size");
  KernelGram out;
  out.points = G_big.points;
  out.entries = G_big.entries - G_small.entries;
  const PsdVerdict v = psd_check(hermitize(out.entries));
  if (!v.psd)
    throw NotContractivelyContained("difference has eigenvalue " +
                                    std::to_string(v.min_eig));
  return out;
}

PythagorasResult pythagoras_check(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& x) {
  if (A.rows() != A.cols() || A.rows() != x.size())
    throw DimensionMismatch("square A matching x required");
  if (operator_norm(A) > 1.0 + 1e-12)
    throw NotContraction("operator norm exceeds 1");

  const Eigen::MatrixXcd P = hermitize(A * A.adjoint());
  const Eigen::MatrixXcd Q =
      hermitize(Eigen::MatrixXcd::Identity(A.rows(), A.cols()) - P);

  PythagorasResult r;
  r.y = P * x;
  r.z = x - r.y;
  const Complex ny = r.y.adjoint() * pseudo_inverse_psd(P) * r.y;
  const Complex nz = r.z.adjoint() * pseudo_inverse_psd(Q) * r.z;
  r.normsq_y = std::max(ny.real(), 0.0);
  r.normsq_z = std::max(nz.real(), 0.0);
  r.defect = std::fabs(x.squaredNorm() - (r.normsq_y + r.normsq_z));
  return r;
}

}  // namespace circlekit
