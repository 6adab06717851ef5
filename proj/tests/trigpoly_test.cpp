#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "circlekit/errors.hpp"
#include "circlekit/trigpoly.hpp"

using namespace circlekit;

namespace {

TrigPoly random_real_poly(std::mt19937_64& rng, int degree, double floor = 0.0) {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<Complex> cpos(static_cast<size_t>(degree + 1));
  cpos[0] = Complex(2.0 + floor + U(rng), 0.0);
  for (int j = 1; j <= degree; ++j)
    cpos[static_cast<size_t>(j)] = Complex(U(rng), U(rng)) / (2.0 * degree);
  return TrigPoly::real_from_pos(std::move(cpos));
}

AnalyticPoly random_outer(std::mt19937_64& rng, int degree) {
  // Roots placed outside the closed disk, so the factor is already outer.
  std::uniform_real_distribution<double> R(1.2, 3.0), T(0.0, kTwoPi);
  std::vector<Complex> g = {Complex(1.0, 0.0)};
  for (int k = 0; k < degree; ++k) {
    const Complex root = R(rng) * unit(T(rng));
    std::vector<Complex> next(g.size() + 1, Complex(0.0, 0.0));
    for (size_t j = 0; j < g.size(); ++j) {
      next[j] += g[j] * (-root);
      next[j + 1] += g[j];
    }
    g = std::move(next);
  }
  return AnalyticPoly{g};
}

}  // namespace

TEST_CASE("coefficients mirror conjugately for real-flagged polynomials") {
  const TrigPoly p = TrigPoly::real_from_pos({Complex(2.0, 0.0), Complex(0.5, -0.25)});
  CHECK(p.degree() == 1);
  CHECK(p.is_real());
  CHECK(p.coeff(1) == Complex(0.5, -0.25));
  CHECK(p.coeff(-1) == Complex(0.5, 0.25));
  CHECK(p.coeff(7) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(TrigPoly::real_from_pos({Complex(1.0, 0.5)}), ValidationError);
}

TEST_CASE("from_full keeps general rows and detects Hermitian ones") {
  const std::vector<Complex> herm = {Complex(1.0, -0.5), Complex(3.0, 0.0),
                                     Complex(1.0, 0.5)};
  CHECK(TrigPoly::from_full(herm).is_real());

  const std::vector<Complex> skew = {Complex(0.0, 0.0), Complex(0.0, 0.0),
                                     Complex(1.0, 0.0)};
  const TrigPoly q = TrigPoly::from_full(skew);
  CHECK_FALSE(q.is_real());
  CHECK(q.coeff(1) == Complex(1.0, 0.0));
  CHECK(q.coeff(-1) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(TrigPoly::from_full({Complex(1.0, 0.0), Complex(0.0, 0.0)}),
                  ValidationError);
}

TEST_CASE("eval equals direct Laurent summation") {
  const TrigPoly c1 = TrigPoly::constant(1.0);
  CHECK(std::abs(c1.eval(0.7) - Complex(1.0, 0.0)) < 1e-15);

  const TrigPoly cos2 =
      TrigPoly::real_from_pos({Complex(2.0, 0.0), Complex(1.0, 0.0)});
  CHECK(std::abs(cos2.eval(0.0) - Complex(4.0, 0.0)) < 1e-14);

  const TrigPoly zpow = TrigPoly::from_full(
      {Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)});
  CHECK(std::abs(zpow.eval(kPi / 2.0) - Complex(0.0, 1.0)) < 1e-14);

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<Complex> full(9);
  for (Complex& c : full) c = Complex(U(rng), U(rng));
  const TrigPoly p = TrigPoly::from_full(full);
  for (const double theta : {0.0, 0.31, 2.4, 5.9}) {
    Complex direct(0.0, 0.0);
    for (int j = -4; j <= 4; ++j)
      direct += full[static_cast<size_t>(j + 4)] * unit(j * theta);
    CHECK(std::abs(p.eval(theta) - direct) < 1e-13);
  }
}

TEST_CASE("real-flagged eval has negligible imaginary part on the circle") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 8; ++rep) {
    const TrigPoly p = random_real_poly(rng, 6);
    const double budget = 1e-12 * p.coeff_abs_sum();
    for (int j = 0; j < 64; ++j)
      CHECK(std::abs(p.eval(kTwoPi * j / 64).imag()) <= budget);
  }
}

TEST_CASE("sample returns grid values of eval") {
  std::mt19937_64 rng(13);
  const TrigPoly p = random_real_poly(rng, 4);
  const std::vector<double> s = p.sample(32);
  REQUIRE(s.size() == 32);
  for (int j = 0; j < 32; ++j)
    CHECK(s[static_cast<size_t>(j)] ==
          doctest::Approx(p.eval(kTwoPi * j / 32).real()).epsilon(1e-14));
}

TEST_CASE("product multiplies values and adds degrees") {
  std::mt19937_64 rng(17);
  const TrigPoly p = random_real_poly(rng, 3);
  const TrigPoly q = random_real_poly(rng, 2);
  const TrigPoly pq = p.product(q);
  CHECK(pq.degree() == 5);
  CHECK(pq.is_real());
  for (const double theta : {0.1, 1.7, 4.4})
    CHECK(std::abs(pq.eval(theta) - p.eval(theta) * q.eval(theta)) < 1e-12);
}

TEST_CASE("squared modulus of an analytic polynomial matches |g|^2 on the circle") {
  std::mt19937_64 rng(19);
  const AnalyticPoly g = random_outer(rng, 3);
  const TrigPoly p = g.squared_modulus();
  CHECK(p.is_real());
  for (const double theta : {0.0, 0.9, 2.2, 5.1}) {
    const double want = std::norm(g.eval(unit(theta)));
    CHECK(p.eval(theta).real() == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("spectral factor of simple polynomials") {
  const AnalyticPoly one = fejer_riesz_factor(TrigPoly::constant(1.0));
  REQUIRE(one.coeffs.size() == 1);
  CHECK(one.coeffs[0] == Complex(1.0, 0.0));

  // 2 + 2 cos(theta) = |1 + z|^2; the root sits on the circle.
  const TrigPoly p =
      TrigPoly::real_from_pos({Complex(2.0, 0.0), Complex(1.0, 0.0)});
  const AnalyticPoly g = fejer_riesz_factor(p);
  REQUIRE(g.coeffs.size() == 2);
  CHECK(std::abs(g.coeffs[0] - Complex(1.0, 0.0)) < 1e-7);
  CHECK(std::abs(g.coeffs[1] - Complex(1.0, 0.0)) < 1e-7);
}

TEST_CASE("spectral factorization round trip recovers the outer factor up to phase") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 6; ++rep) {
    const AnalyticPoly g1 = random_outer(rng, 4);
    const AnalyticPoly g2 = fejer_riesz_factor(g1.squared_modulus());
    REQUIRE(g2.coeffs.size() == g1.coeffs.size());
    // Align phases through the leading coefficients before comparing.
    const Complex phase =
        (g1.coeffs[0] / std::abs(g1.coeffs[0])) *
        std::conj(g2.coeffs[0] / std::abs(g2.coeffs[0]));
    double err = 0.0;
    for (size_t j = 0; j < g1.coeffs.size(); ++j)
      err = std::max(err, std::abs(g1.coeffs[j] - phase * g2.coeffs[j]));
    CHECK(err <= 1e-8);
  }
}

TEST_CASE("spectral factor reproduces the polynomial on a fine grid") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 4; ++rep) {
    const TrigPoly p = random_outer(rng, 3 + rep).squared_modulus();
    const TrigPoly back = fejer_riesz_factor(p).squared_modulus();
    const double budget = 1e-8 * p.coeff_abs_sum();
    for (int j = 0; j < 1024; ++j) {
      const double theta = kTwoPi * j / 1024;
      CHECK(std::abs(back.eval(theta).real() - p.eval(theta).real()) <= budget);
    }
  }
}

TEST_CASE("spectral factor rejects sign-changing polynomials") {
  const TrigPoly dips =
      TrigPoly::real_from_pos({Complex(0.0, 0.0), Complex(1.0, 0.0)});
  CHECK_THROWS_AS(fejer_riesz_factor(dips), NotNonnegative);
  const TrigPoly complex_row = TrigPoly::from_full(
      {Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(1.0, 0.0)});
  CHECK_THROWS_AS(fejer_riesz_factor(complex_row), ValidationError);
}

TEST_CASE("Cesaro approximation keeps constants and tapers the top coefficient") {
  const std::vector<double> ones(256, 1.0);
  const TrigPoly c = cesaro_nonneg_approx(ones, 4);
  CHECK(c.coeff(0).real() == doctest::Approx(1.0).epsilon(1e-12));
  for (int j = 1; j <= 4; ++j) CHECK(std::abs(c.coeff(j)) < 1e-12);

  // 2 + 2cos(theta): the |j| = 1 coefficient carries the taper N/(N+1).
  std::vector<double> cosdata(256);
  for (int k = 0; k < 256; ++k)
    cosdata[static_cast<size_t>(k)] = 2.0 + 2.0 * std::cos(kTwoPi * k / 256);
  const TrigPoly f = cesaro_nonneg_approx(cosdata, 2);
  CHECK(f.coeff(0).real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(f.coeff(1).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("Cesaro approximation of an indicator is nonnegative and L1-close") {
  std::vector<double> ind(4096, 0.0);
  for (int k = 0; k < 2048; ++k) ind[static_cast<size_t>(k)] = 1.0;
  const TrigPoly f = cesaro_nonneg_approx(ind, 64);
  double minval = 0.0, l1 = 0.0;
  for (int j = 0; j < 4096; ++j) {
    const double v = f.eval(kTwoPi * j / 4096).real();
    minval = std::min(minval, v);
    l1 += std::abs(v - ind[static_cast<size_t>(j)]);
  }
  CHECK(minval >= -1e-12);
  CHECK(l1 / 4096.0 <= 0.05);
}

TEST_CASE("Cesaro approximation rejects negative samples") {
  CHECK_THROWS_AS(cesaro_nonneg_approx({1.0, -0.5}, 1), NotNonnegative);
}
