#include "circlekit/trigpoly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "circlekit/errors.hpp"

namespace circlekit {

namespace {

constexpr double kCircleRootTol = 1e-7;  // |1 - |r|| below this means "on the circle"

}  // namespace

TrigPoly TrigPoly::constant(double c) {
  TrigPoly p;
  p.cpos_ = {Complex(c, 0.0)};
  return p;
}

TrigPoly TrigPoly::real_from_pos(std::vector<Complex> cpos) {
  if (cpos.empty()) cpos.push_back(Complex(0.0, 0.0));
  if (std::abs(cpos[0].imag()) > 1e-14 * (1.0 + std::abs(cpos[0].real())))
    throw ValidationError("real-flagged TrigPoly needs real c_0");
  cpos[0] = Complex(cpos[0].real(), 0.0);
  TrigPoly p;
  p.degree_ = static_cast<int>(cpos.size()) - 1;
  p.real_ = true;
  p.cpos_ = std::move(cpos);
  return p;
}

TrigPoly TrigPoly::from_full(const std::vector<Complex>& full) {
  if (full.size() % 2 == 0 || full.empty())
    throw ValidationError("full coefficient row must have odd length 2n+1");
  const int n = static_cast<int>(full.size() / 2);
  double scale = 0.0;
  for (const Complex& c : full) scale += std::abs(c);
  bool herm = true;
  for (int j = 0; j <= n && herm; ++j) {
    if (std::abs(full[static_cast<size_t>(n - j)] -
                 std::conj(full[static_cast<size_t>(n + j)])) >
        1e-14 * (1.0 + scale))
      herm = false;
  }
  TrigPoly p;
  p.degree_ = n;
  p.cpos_.assign(full.begin() + n, full.end());
  if (herm) {
    p.real_ = true;
    p.cpos_[0] = Complex(p.cpos_[0].real(), 0.0);
  } else {
    p.real_ = false;
    p.cneg_.resize(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j)
      p.cneg_[static_cast<size_t>(j - 1)] = full[static_cast<size_t>(n - j)];
  }
  return p;
}

Complex TrigPoly::coeff(int j) const {
  if (std::abs(j) > degree_) return {0.0, 0.0};
  if (j >= 0) return cpos_[static_cast<size_t>(j)];
  if (real_) return std::conj(cpos_[static_cast<size_t>(-j)]);
  return cneg_[static_cast<size_t>(-j - 1)];
}

Complex TrigPoly::eval(double theta) const {
  const Complex w = unit(theta);
  Complex acc = cpos_[0];
  Complex wp(1.0, 0.0);
  for (int j = 1; j <= degree_; ++j) {
    wp *= w;
    acc += cpos_[static_cast<size_t>(j)] * wp + coeff(-j) * std::conj(wp);
  }
  return acc;
}

std::vector<double> TrigPoly::sample(int n) const {
  std::vector<double> out(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    out[static_cast<size_t>(j)] = eval(kTwoPi * j / n).real();
  return out;
}

double TrigPoly::coeff_abs_sum() const {
  double s = 0.0;
  for (int j = -degree_; j <= degree_; ++j) s += std::abs(coeff(j));
  return s;
}

bool TrigPoly::is_zero() const { return coeff_abs_sum() == 0.0; }

TrigPoly TrigPoly::scaled(double a) const {
  TrigPoly p = *this;
  for (Complex& c : p.cpos_) c *= a;
  for (Complex& c : p.cneg_) c *= a;
  return p;
}

TrigPoly TrigPoly::plus(const TrigPoly& other) const {
  const int n = std::max(degree_, other.degree_);
  std::vector<Complex> full(static_cast<size_t>(2 * n + 1));
  for (int j = -n; j <= n; ++j)
    full[static_cast<size_t>(j + n)] = coeff(j) + other.coeff(j);
  return from_full(full);
}

TrigPoly TrigPoly::product(const TrigPoly& other) const {
  const int n = degree_ + other.degree_;
  std::vector<Complex> full(static_cast<size_t>(2 * n + 1), Complex(0.0, 0.0));
  for (int j = -degree_; j <= degree_; ++j)
    for (int k = -other.degree_; k <= other.degree_; ++k)
      full[static_cast<size_t>(j + k + n)] += coeff(j) * other.coeff(k);
  return from_full(full);
}

Complex AnalyticPoly::eval(Complex z) const {
  Complex acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

TrigPoly AnalyticPoly::squared_modulus() const {
  const int n = degree();
  std::vector<Complex> cpos(static_cast<size_t>(n + 1), Complex(0.0, 0.0));
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j + k <= n; ++j)
      cpos[static_cast<size_t>(k)] +=
          std::conj(coeffs[static_cast<size_t>(j)]) * coeffs[static_cast<size_t>(j + k)];
  return TrigPoly::real_from_pos(std::move(cpos));
}

AnalyticPoly fejer_riesz_factor(const TrigPoly& p, double tol_psd) {
  if (!p.is_real()) throw ValidationError("fejer_riesz_factor needs a real-flagged polynomial");
  const double scale = p.coeff_abs_sum();
  if (scale == 0.0) return AnalyticPoly{{Complex(0.0, 0.0)}};

  int n = p.degree();
  while (n > 0 && std::abs(p.coeff(n)) <= 1e-15 * scale) --n;

  const int grid = 8 * (n + 1);
  double minval = 0.0;
  for (int j = 0; j < grid; ++j)
    minval = std::min(minval, p.eval(kTwoPi * j / grid).real());
  if (minval < -tol_psd * scale)
    throw NotNonnegative("polynomial attains " + std::to_string(minval) +
                         " on the verification grid");

  if (n == 0) {
    const double c0 = std::max(p.coeff(0).real(), 0.0);
    return AnalyticPoly{{Complex(std::sqrt(c0), 0.0)}};
  }

  // Roots of P(z) = z^n p(z), a degree-2n polynomial with Hermitian
  // coefficients: roots pair as (r, 1/conj(r)); circle roots have even
  // multiplicity. The outer factor takes the member of each pair with
  // |r| >= 1 and one of each circle pair.
  Eigen::VectorXcd poly(2 * n + 1);
  for (int j = 0; j <= 2 * n; ++j) poly(j) = p.coeff(j - n);
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int j = 0; j < 2 * n; ++j) companion(j, 2 * n - 1) = -poly(j) / poly(2 * n);
  for (int j = 1; j < 2 * n; ++j) companion(j, j - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
  if (es.info() != Eigen::Success)
    throw IllConditioned("companion eigensolver failed");

  std::vector<Complex> outside, circle;
  for (int j = 0; j < 2 * n; ++j) {
    const Complex r = es.eigenvalues()(j);
    const double ar = std::abs(r);
    if (std::abs(ar - 1.0) <= kCircleRootTol)
      circle.push_back(r);
    else if (ar > 1.0)
      outside.push_back(r);
  }
  // Circle roots come in even clusters; sort by angle and keep alternates.
  std::sort(circle.begin(), circle.end(), [](Complex a, Complex b) {
    return std::arg(a) < std::arg(b);
  });
  std::vector<Complex> kept = outside;
  for (size_t j = 0; j < circle.size(); j += 2)
    kept.push_back(circle[j] / std::abs(circle[j]));
  if (static_cast<int>(kept.size()) != n)
    throw IllConditioned("root pairing failed: kept " + std::to_string(kept.size()) +
                         " roots for degree " + std::to_string(n));

  // p(theta) = beta * prod |e^{i theta} - s_i|^2 with
  // beta = c_n * prod(-1/conj(s_i)) real nonnegative.
  Complex beta = p.coeff(n);
  for (const Complex& s : kept) beta *= -1.0 / std::conj(s);
  if (beta.real() < 0.0 || std::abs(beta.imag()) > 1e-6 * std::abs(beta))
    throw IllConditioned("leading normalization is not nonnegative real");

  std::vector<Complex> g = {Complex(std::sqrt(std::max(beta.real(), 0.0)), 0.0)};
  for (const Complex& s : kept) {
    std::vector<Complex> next(g.size() + 1, Complex(0.0, 0.0));
    for (size_t j = 0; j < g.size(); ++j) {
      next[j] += g[j] * (-s);
      next[j + 1] += g[j];
    }
    g = std::move(next);
  }
  // Phase so that g(0) is real nonnegative.
  const Complex g0 = g[0];
  if (std::abs(g0) > 0.0) {
    const Complex phase = std::conj(g0) / std::abs(g0);
    for (Complex& c : g) c *= phase;
  }
  AnalyticPoly out{g};

  double resid = 0.0;
  const TrigPoly check = out.squared_modulus();
  for (int j = 0; j < grid; ++j) {
    const double theta = kTwoPi * j / grid;
    resid = std::max(resid, std::abs(check.eval(theta).real() - p.eval(theta).real()));
  }
  if (resid > 1e-8 * scale)
    throw IllConditioned("factor residual " + std::to_string(resid));
  return out;
}

TrigPoly cesaro_nonneg_approx(const std::vector<double>& samples, int N) {
  const int M = static_cast<int>(samples.size());
  if (M <= 0) throw ValidationError("cesaro_nonneg_approx needs samples");
  if (N < 0) throw ValidationError("cesaro_nonneg_approx needs N >= 0");
  for (double s : samples)
    if (s < 0.0) throw NotNonnegative("cesaro_nonneg_approx needs nonnegative samples");
  std::vector<Complex> cpos(static_cast<size_t>(N + 1), Complex(0.0, 0.0));
  for (int j = 0; j <= N; ++j) {
    Complex acc(0.0, 0.0);
    for (int k = 0; k < M; ++k)
      acc += samples[static_cast<size_t>(k)] * std::conj(unit(kTwoPi * j * k / M));
    cpos[static_cast<size_t>(j)] = acc / static_cast<double>(M) *
                                   (1.0 - static_cast<double>(j) / (N + 1));
  }
  return TrigPoly::real_from_pos(std::move(cpos));
}

}  // namespace circlekit
