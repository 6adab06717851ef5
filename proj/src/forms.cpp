#include "circlekit/forms.hpp"

#include <cmath>
#include <string>

#include "circlekit/errors.hpp"
#include "circlekit/kernel.hpp"
#include "circlekit/linalg.hpp"

namespace circlekit {

FormPair FormPair::checked(Eigen::MatrixXcd A, Eigen::MatrixXcd B) {
  if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
    throw DimensionMismatch("form pair needs equal square dimensions");
  for (const auto* m : {&A, &B}) {
    const double scale = std::max(m->cwiseAbs().maxCoeff(), 1e-300);
    if ((*m - m->adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
      throw NotHermitian("form matrix is not Hermitian");
    const PsdVerdict v = psd_check(hermitize(*m));
    if (!v.psd)
      throw NotNonnegative("form matrix has eigenvalue " + std::to_string(v.min_eig));
  }
  return FormPair{std::move(A), std::move(B)};
}

Eigen::MatrixXcd parallel_sum(const Eigen::MatrixXcd& A, const Eigen::MatrixXcd& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols() || A.rows() != A.cols())
    throw DimensionMismatch("parallel sum needs equal square dimensions");
  const int n = static_cast<int>(A.rows());
  if (n == 0) return A;

  // Evaluate A : B = S - S (S + L)^+ S with S the smaller and L the larger
  // argument, block-triangularizing S + L against the eigenbasis of L. A
  // single pseudo-inverse of A + B with a relative cutoff erases the smaller
  // summand once the scales separate; the decomposition ladder drives one
  // argument up by 2^k, which then collapses the rung onto ran(B) and loses
  // positivity. Splitting L's range from its null space keeps every block at
  // its own scale, uniformly in the ratio.
  const bool a_small = A.norm() <= B.norm();
  const Eigen::MatrixXcd& S = a_small ? A : B;
  const Eigen::MatrixXcd& L = a_small ? B : A;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitize(L));
  const double lmax = es.eigenvalues().maxCoeff();
  if (lmax <= 0.0) return Eigen::MatrixXcd::Zero(n, n);
  const double cut = 1e-12 * lmax;

  Eigen::MatrixXcd Q(n, n);
  Eigen::VectorXd kept(n);
  int r = 0;
  for (int j = 0; j < n; ++j)
    if (es.eigenvalues()(j) > cut) {
      kept(r) = es.eigenvalues()(j);
      Q.col(r++) = es.eigenvectors().col(j);
    }
  int w = r;
  for (int j = 0; j < n; ++j)
    if (es.eigenvalues()(j) <= cut) Q.col(w++) = es.eigenvectors().col(j);

  const Eigen::MatrixXcd St = Q.adjoint() * S * Q;
  Eigen::MatrixXcd M11 = St.topLeftCorner(r, r);
  M11.diagonal() += kept.head(r).cast<Complex>();
  const Eigen::MatrixXcd X = M11.llt().solve(Eigen::MatrixXcd::Identity(r, r));

  const Eigen::MatrixXcd Ztop = St.topRows(r);
  Eigen::MatrixXcd rung = St - Ztop.adjoint() * (X * Ztop);
  const int m = n - r;
  if (m > 0) {
    const Eigen::MatrixXcd S21 = St.bottomLeftCorner(m, r);
    const Eigen::MatrixXcd Zbot = St.bottomRows(m) - S21 * (X * Ztop);
    // Schur complement of the range block; PSD, sitting at S's own scale.
    const Eigen::MatrixXcd Y =
        pseudo_inverse_psd(hermitize(Zbot.rightCols(m)), 1e-12);
    rung -= Zbot.adjoint() * (Y * Zbot);
  }
  return hermitize(Q * rung * Q.adjoint());
}

FormDecomposition simon_decompose(const FormPair& fp, int kmax, double stop_rel) {
  const double scale = std::max(fp.A.norm(), 1e-300);
  FormDecomposition out;
  Eigen::MatrixXcd prev = parallel_sum(fp.A, fp.B);
  out.iterations = 1;
  double t = 2.0;
  for (int k = 1; k <= kmax; ++k) {
    Eigen::MatrixXcd cur = parallel_sum(fp.A, t * fp.B);
    ++out.iterations;
    const double delta = (cur - prev).norm();
    prev = std::move(cur);
    if (delta <= stop_rel * scale) {
      out.converged = true;
      break;
    }
    t *= 2.0;
  }
  if (!out.converged)
    throw NotConverged("parallel-sum ladder did not stabilize within " +
                       std::to_string(kmax) + " doublings");
  out.A_ac = std::move(prev);
  out.A_s = hermitize(fp.A - out.A_ac);
  return out;
}

double resolvent_identity_residual(const FormPair& fp) {
  const int n = static_cast<int>(fp.B.rows());
  if (fp.A.rows() != n || fp.A.cols() != n || fp.B.cols() != n)
    throw DimensionMismatch("form pair needs equal square dimensions");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitize(fp.B));
  const double floor = 1e-12 * std::abs(fp.B.trace().real()) / std::max(n, 1);
  if (es.eigenvalues().minCoeff() <= floor)
    throw SingularReference("reference form has eigenvalue " +
                            std::to_string(es.eigenvalues().minCoeff()));

  const Eigen::VectorXcd rt = es.eigenvalues().cwiseSqrt().cast<Complex>();
  const Eigen::VectorXcd irt = es.eigenvalues().cwiseSqrt().cwiseInverse().cast<Complex>();
  const Eigen::MatrixXcd U = es.eigenvectors();
  const Eigen::MatrixXcd B_half = U * rt.asDiagonal() * U.adjoint();
  const Eigen::MatrixXcd B_ihalf = U * irt.asDiagonal() * U.adjoint();

  const Eigen::MatrixXcd T = hermitize(B_ihalf * fp.A * B_ihalf);
  const Eigen::MatrixXcd lhs =
      (Eigen::MatrixXcd::Identity(n, n) + T).inverse();
  const Eigen::MatrixXcd rhs =
      B_half * hermitize(fp.A + fp.B).inverse() * B_half;
  return (lhs - rhs).norm() / n;
}

TrigPoly rn_extract(const CircleMeasure& mu, const CircleMeasure& lam, int N, int d,
                    double* residual_out) {
  if (N < 1 || d < 0) throw ValidationError("rn_extract needs N >= 1, d >= 0");
  if (2 * d > N) throw ValidationError("rn_extract needs d <= N/2");

  std::vector<Complex> mu_mom(static_cast<size_t>(N + 1));
  std::vector<Complex> lam_mom(static_cast<size_t>(N + d + 1));
  for (int n = 0; n <= N; ++n) mu_mom[static_cast<size_t>(n)] = moment_at(mu, n);
  for (int n = 0; n <= N + d; ++n) lam_mom[static_cast<size_t>(n)] = moment_at(lam, n);
  auto lhat = [&](long n) {
    const long a = std::labs(n);
    return n >= 0 ? lam_mom[static_cast<size_t>(a)]
                  : std::conj(lam_mom[static_cast<size_t>(a)]);
  };
  auto muhat = [&](long n) {
    const long a = std::labs(n);
    return n >= 0 ? mu_mom[static_cast<size_t>(a)]
                  : std::conj(mu_mom[static_cast<size_t>(a)]);
  };

  // Real unknowns x = [f0, Re f1, Im f1, ..., Re fd, Im fd]; the Hermitian
  // mirror f_{-j} = conj(f_j) folds both sidebands into each column.
  const int rows_c = 2 * N + 1;
  const int cols = 2 * d + 1;
  Eigen::MatrixXcd Mc(rows_c, cols);
  Eigen::VectorXcd bc(rows_c);
  for (int r = 0; r < rows_c; ++r) {
    const long n = static_cast<long>(r) - N;
    bc(r) = muhat(n);
    Mc(r, 0) = lhat(n);
    for (int j = 1; j <= d; ++j) {
      Mc(r, 2 * j - 1) = lhat(n - j) + lhat(n + j);
      Mc(r, 2 * j) = Complex(0.0, 1.0) * (lhat(n - j) - lhat(n + j));
    }
  }
  Eigen::MatrixXd Mr(2 * rows_c, cols);
  Mr.topRows(rows_c) = Mc.real();
  Mr.bottomRows(rows_c) = Mc.imag();
  Eigen::VectorXd br(2 * rows_c);
  br.head(rows_c) = bc.real();
  br.tail(rows_c) = bc.imag();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(Mr, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double smax = svd.singularValues()(0);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  if (smin <= 0.0 || smax / smin > 1e12)
    throw IllPosed("deconvolution condition " +
                   std::to_string(smax / std::max(smin, 1e-300)));
  const Eigen::VectorXd x = svd.solve(br);

  std::vector<Complex> cpos(static_cast<size_t>(d + 1));
  cpos[0] = Complex(x(0), 0.0);
  for (int j = 1; j <= d; ++j) cpos[static_cast<size_t>(j)] = Complex(x(2 * j - 1), x(2 * j));
  TrigPoly f = TrigPoly::real_from_pos(std::move(cpos));

  std::vector<double> vals = f.sample(1024);
  double mn = vals[0];
  for (double v : vals) mn = std::min(mn, v);
  if (mn < -1e-6) {
    for (double& v : vals) v = std::max(v, 0.0);
    f = cesaro_nonneg_approx(vals, d);
  }

  if (residual_out != nullptr) {
    double s = 0.0;
    for (long n = -N; n <= N; ++n) {
      Complex conv(0.0, 0.0);
      for (int j = -d; j <= d; ++j) conv += f.coeff(j) * lhat(n - j);
      s += std::norm(muhat(n) - conv);
    }
    *residual_out = std::sqrt(s);
  }
  return f;
}

}  // namespace circlekit
