#include "circlekit/kernel.hpp"

#include <cmath>
#include <future>
#include <random>

#include "circlekit/errors.hpp"
#include "circlekit/transform.hpp"

namespace circlekit {

namespace {

void require_in_disk(Complex z) {
  if (std::abs(z) >= 1.0) throw OutsideDisk("evaluation point |z| >= 1");
}

Complex kernel_integral(const CircleMeasure& mu, Complex z, Complex w) {
  Complex acc(0.0, 0.0);
  const Complex zw = 1.0 - z * std::conj(w);
  const CircleFunction& d = mu.density();
  if (d.sampled()) {
    const int M = d.grid_size();
    const auto& s = d.samples();
    for (int k = 0; k < M; ++k) {
      const Complex zeta = unit(kTwoPi * k / M);
      acc += s[static_cast<size_t>(k)] /
             ((1.0 - z * std::conj(zeta)) * (1.0 - std::conj(w) * zeta));
    }
    acc /= static_cast<double>(M);
  } else {
    // sum_{j,k} z^j conj(w)^k mu_hat(j-k) collapses along diagonals:
    // (c_0 + sum_{n>=1} c_n z^n + conj(c_n) conj(w)^n) / (1 - z conj(w)).
    const TrigPoly& p = d.poly();
    Complex num = p.coeff(0);
    Complex zp(1.0, 0.0), wp(1.0, 0.0);
    for (int n = 1; n <= p.degree(); ++n) {
      zp *= z;
      wp *= std::conj(w);
      num += p.coeff(n) * zp + p.coeff(-n) * wp;
    }
    acc = num / zw;
  }
  for (const Atom& a : mu.atoms()) {
    const Complex zeta = unit(a.angle);
    acc += a.weight / ((1.0 - z * std::conj(zeta)) * (1.0 - std::conj(w) * zeta));
  }
  return acc;
}

}  // namespace

Complex kernel_eval(const CircleMeasure& mu, Complex z, Complex w, KernelMethod method) {
  require_in_disk(z);
  require_in_disk(w);
  if (method == KernelMethod::Integral) return kernel_integral(mu, z, w);
  return (herglotz(mu, z) + std::conj(herglotz(mu, w))) /
         (2.0 * (1.0 - z * std::conj(w)));
}

KernelGram gram(const CircleMeasure& mu, const std::vector<Complex>& points,
                KernelMethod method, int threads) {
  const int n = static_cast<int>(points.size());
  KernelGram G;
  G.points = points;
  G.entries.resize(n, n);
  auto fill_rows = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      for (int j = i; j < n; ++j) {
        const Complex v = kernel_eval(mu, points[static_cast<size_t>(i)],
                                      points[static_cast<size_t>(j)], method);
        G.entries(i, j) = v;
        G.entries(j, i) = std::conj(v);
      }
    }
  };
  if (threads <= 1 || n < 2 * threads) {
    fill_rows(0, n);
  } else {
    std::vector<std::future<void>> jobs;
    const int chunk = (n + threads - 1) / threads;
    for (int lo = 0; lo < n; lo += chunk)
      jobs.push_back(std::async(std::launch::async, fill_rows, lo,
                                std::min(lo + chunk, n)));
    for (auto& j : jobs) j.get();
  }
  // Exact Hermitian diagonal.
  for (int i = 0; i < n; ++i)
    G.entries(i, i) = Complex(G.entries(i, i).real(), 0.0);
  return G;
}

KernelGram coeff_kernel(const CircleMeasure& mu, int N) {
  if (N < 0) throw ValidationError("coeff_kernel needs N >= 0");
  const MomentSequence ms = moments(mu, N);
  KernelGram G;
  G.points.resize(static_cast<size_t>(N + 1));
  for (int j = 0; j <= N; ++j)
    G.points[static_cast<size_t>(j)] = Complex(static_cast<double>(j), 0.0);
  G.entries = ms.toeplitz();
  return G;
}

PsdVerdict psd_check(const Eigen::MatrixXcd& G, double tol) {
  if (G.rows() != G.cols()) throw NotHermitian("matrix is not square");
  const double scale = G.cwiseAbs().maxCoeff() + 1e-300;
  if ((G - G.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw NotHermitian("matrix is not Hermitian within 1e-12");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  const double floor =
      tol * std::abs(G.trace().real()) / static_cast<double>(G.rows());
  return {min_eig >= -floor, min_eig};
}

DominationVerdict dominates_rk(const CircleMeasure& mu, const CircleMeasure& lam,
                               double t, const std::vector<Complex>& points) {
  if (t <= 0.0) throw ValidationError("dominates_rk needs t > 0");
  const KernelGram Gm = gram(mu, points);
  const KernelGram Gl = gram(lam, points);
  const Eigen::MatrixXcd D = t * t * Gl.entries - Gm.entries;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(D);
  const double min_eig = es.eigenvalues().minCoeff();
  const double floor = 1e-10 * std::abs(D.trace().real()) /
                       static_cast<double>(std::max<Eigen::Index>(D.rows(), 1));
  DominationVerdict v;
  v.min_eig = min_eig;
  v.dominated = min_eig >= -floor;
  if (!v.dominated) {
    int idx = 0;
    es.eigenvalues().minCoeff(&idx);
    v.witness = es.eigenvectors().col(idx);
  }
  return v;
}

std::vector<Complex> default_disk_grid(int n, std::uint64_t seed, double radius) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Complex> pts;
  pts.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double r = radius * std::sqrt(u(rng));
    const double theta = kTwoPi * u(rng);
    pts.push_back(r * unit(theta));
  }
  return pts;
}

}  // namespace circlekit
