#pragma once

#include <vector>

#include "circlekit/util.hpp"

namespace circlekit {

// Laurent trigonometric polynomial p(theta) = sum_{|j|<=n} c_j e^{i j theta}.
// A real-flagged polynomial has c_{-j} = conj(c_j) and stores only j >= 0;
// negative coefficients are mirrored on access.
class TrigPoly {
 public:
  TrigPoly() = default;  // zero polynomial, degree 0

  static TrigPoly constant(double c);
  // Real-flagged from c_0..c_n; c_0 must have zero imaginary part.
  static TrigPoly real_from_pos(std::vector<Complex> cpos);
  // General from the full row c_{-n}..c_n (size 2n+1). Detects the
  // Hermitian-symmetric case and stores it real-flagged.
  static TrigPoly from_full(const std::vector<Complex>& full);

  int degree() const { return degree_; }
  bool is_real() const { return real_; }

  // c_j for any j; zero outside |j| <= degree.
  Complex coeff(int j) const;

  Complex eval(double theta) const;
  // Values on theta_j = 2*pi*j/n. Real part only; for real-flagged input the
  // imaginary part vanishes up to roundoff.
  std::vector<double> sample(int n) const;

  double coeff_abs_sum() const;
  bool is_zero() const;

  TrigPoly scaled(double a) const;
  TrigPoly plus(const TrigPoly& other) const;
  // Pointwise product; degrees add. Preserves the real flag.
  TrigPoly product(const TrigPoly& other) const;

 private:
  int degree_ = 0;
  bool real_ = true;
  std::vector<Complex> cpos_ = {Complex(0.0, 0.0)};  // c_0..c_n
  std::vector<Complex> cneg_;                        // c_{-1}..c_{-n} if !real_
};

// Analytic polynomial g(z) = sum_{j=0..n} g_j z^j.
struct AnalyticPoly {
  std::vector<Complex> coeffs = {Complex(0.0, 0.0)};

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Complex eval(Complex z) const;
  // |g|^2 on the circle as a real-flagged TrigPoly:
  // c_k = sum_j conj(g_j) g_{j+k}.
  TrigPoly squared_modulus() const;
};

// Spectral (Fejer-Riesz) factor of a nonnegative real-flagged polynomial:
// p(theta) = |g(e^{i theta})|^2 with g outer (no roots inside the open disk,
// circle roots split evenly) and g(0) real nonnegative.
// Throws NotNonnegative when p dips below -tol_psd * sum|c_j| on the
// verification grid of 8*(degree+1) points, IllConditioned when the
// reconstruction residual exceeds the tolerance.
AnalyticPoly fejer_riesz_factor(const TrigPoly& p, double tol_psd = 1e-10);

// Degree-N Cesaro (Fejer) mean of the sample DFT. Nonnegative samples give a
// polynomial nonnegative on the whole circle.
TrigPoly cesaro_nonneg_approx(const std::vector<double>& samples, int N);

}  // namespace circlekit
