// Acceptance gate: one line per criterion, nonzero exit iff any fails.
// Everything here goes through the public headers only; oracles that the
// library could bias (quadrature, closed forms) are reimplemented locally.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "circlekit/decompose.hpp"
#include "circlekit/forms.hpp"
#include "circlekit/kernel.hpp"
#include "circlekit/kernelpair.hpp"
#include "circlekit/measure.hpp"
#include "circlekit/transform.hpp"
#include "circlekit/trigpoly.hpp"
#include "circlekit/util.hpp"

namespace {

using namespace circlekit;

std::string note(const char* fmt, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, ap);
  va_end(ap);
  return buf;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

CircleMeasure random_trig_measure(std::mt19937_64& rng, int degree, bool with_atom) {
  std::uniform_real_distribution<double> U(-1.0, 1.0), W(0.1, 0.8), T(0.0, kTwoPi);
  std::vector<Complex> cpos = {Complex(2.0 + U(rng), 0.0)};
  for (int j = 1; j <= degree; ++j)
    cpos.push_back(Complex(U(rng), U(rng)) / (4.0 * degree));
  std::vector<Atom> atoms;
  if (with_atom) atoms.push_back(Atom{T(rng), W(rng)});
  return CircleMeasure::from_density(TrigPoly::real_from_pos(std::move(cpos)),
                                     std::move(atoms));
}

Eigen::MatrixXcd random_psd(std::mt19937_64& rng, int n, int rank) {
  std::normal_distribution<double> N(0.0, 1.0);
  Eigen::MatrixXcd F(n, rank);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < rank; ++j) F(i, j) = Complex(N(rng), N(rng));
  return F * F.adjoint();
}

double min_eig(const Eigen::MatrixXcd& M) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((M + M.adjoint()) / 2.0);
  return es.eigenvalues().minCoeff();
}

double max_abs(const Eigen::MatrixXcd& M) { return M.cwiseAbs().maxCoeff(); }

// 1. The two kernel formulas (direct integral vs Herglotz quotient) agree.
Outcome c_two_routes() {
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> R(0.0, 0.95), T(0.0, kTwoPi);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const CircleMeasure mu = random_trig_measure(rng, 4, i % 3 == 0);
    for (int p = 0; p < 20; ++p) {
      const Complex z = R(rng) * unit(T(rng));
      const Complex w = R(rng) * unit(T(rng));
      const Complex a = kernel_eval(mu, z, w, KernelMethod::Integral);
      const Complex b = kernel_eval(mu, z, w, KernelMethod::Herglotz);
      worst = std::max(worst, std::abs(a - b) / (1.0 + std::abs(a)));
    }
  }
  return {worst <= 1e-8, note("max rel gap %.2e (tol 1e-8), 100 measures x 20 pairs", worst)};
}

// 2. Lebesgue measure gives the Hardy space: H_m = 1, Gram = Szego kernel.
Outcome c_hardy() {
  const CircleMeasure m = CircleMeasure::lebesgue();
  std::mt19937_64 rng(1002);
  std::uniform_real_distribution<double> R(0.0, 0.95), T(0.0, kTwoPi);
  double h_err = 0.0;
  for (int i = 0; i < 50; ++i)
    h_err = std::max(h_err, std::abs(herglotz(m, R(rng) * unit(T(rng))) - 1.0));

  const std::vector<Complex> pts = default_disk_grid(12);
  const KernelGram G = gram(m, pts);
  double g_err = 0.0;
  for (int i = 0; i < G.dim(); ++i)
    for (int j = 0; j < G.dim(); ++j)
      g_err = std::max(g_err, std::abs(G.entries(i, j) -
                                       1.0 / (1.0 - pts[static_cast<size_t>(i)] *
                                                        std::conj(pts[static_cast<size_t>(j)]))));
  return {h_err <= 1e-12 && g_err <= 1e-10,
          note("H err %.2e (tol 1e-12), Gram err %.2e (tol 1e-10)", h_err, g_err)};
}

// 3. Domination verdicts: mu <= t^2 lam must pass, scale excess >= 0.1 must fail.
Outcome c_domination() {
  std::mt19937_64 rng(1003);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  const std::vector<Complex> pts = default_disk_grid(16, kDefaultSeed, 0.85);
  int bad = 0;
  for (int i = 0; i < 50; ++i) {
    const CircleMeasure lam = random_trig_measure(rng, 3, false);
    const double t = 0.6 + 1.6 * U(rng);
    CircleMeasure mu = lam;
    if (i % 2 == 0) {
      mu = combine((0.05 + 0.9 * U(rng)) * t * t, lam, 0.0, lam);
    } else {
      // A genuinely varying density f with sup f <= 0.8 t^2.
      AnalyticPoly g;
      g.coeffs = {Complex(1.0 + U(rng), 0.0), Complex(U(rng) - 0.5, U(rng) - 0.5)};
      TrigPoly f = g.squared_modulus();
      double fmax = 0.0;
      for (double v : f.sample(512)) fmax = std::max(fmax, v);
      f = f.scaled(0.8 * t * t / fmax);
      mu = CircleMeasure::from_density(lam.density().poly().product(f));
    }
    if (!dominates_rk(mu, lam, t, pts).dominated) ++bad;
  }
  for (int i = 0; i < 50; ++i) {
    const CircleMeasure lam = random_trig_measure(rng, 3, false);
    const double t = 0.6 + 1.6 * U(rng);
    const double excess = 0.1 + 0.6 * U(rng);
    const CircleMeasure mu = combine(t * t + excess, lam, 0.0, lam);
    if (dominates_rk(mu, lam, t, pts).dominated) ++bad;
  }
  return {bad == 0, note("%d misclassified of 100 (50 dominated, 50 excess >= 0.1)", bad)};
}

// 4. Moment deconvolution recovers a degree-4 density factor coefficient-exactly.
Outcome c_rn_recovery() {
  std::mt19937_64 rng(1004);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const CircleMeasure lam = random_trig_measure(rng, 3, false);
    AnalyticPoly g;
    g.coeffs = {Complex(1.0 + 0.5 * std::abs(U(rng)), 0.0),
                Complex(0.4 * U(rng), 0.4 * U(rng)),
                Complex(0.3 * U(rng), 0.3 * U(rng))};
    const TrigPoly f = g.squared_modulus();
    const CircleMeasure mu =
        CircleMeasure::from_density(lam.density().poly().product(f));
    const TrigPoly rec = rn_extract(mu, lam, 32, 4);
    for (int j = -4; j <= 4; ++j)
      worst = std::max(worst, std::abs(rec.coeff(j) - f.coeff(j)));
  }
  return {worst <= 1e-8, note("max coefficient err %.2e (tol 1e-8), 10 pairs at N=32", worst)};
}

// 5. Resolvent identity residual for positive pairs with invertible reference.
Outcome c_resolvent() {
  std::mt19937_64 rng(1005);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const int n = 8 + 8 * (rep % 8);
    const Eigen::MatrixXcd A = random_psd(rng, n, std::max(1, n - rep % 3));
    const Eigen::MatrixXcd B =
        random_psd(rng, n, n) + (0.5 + U(rng)) * Eigen::MatrixXcd::Identity(n, n);
    worst = std::max(worst, resolvent_identity_residual(FormPair::checked(A, B)));
  }
  return {worst <= 1e-9, note("max residual %.2e (tol 1e-9), 50 pairs, dims 8-64", worst)};
}

// 6. Form decomposition: the three closed-form examples, then invariants on
// random pairs (sum, positivity, reference-kernel vanishing, and the ladder
// rungs staying below the limit as a maximality surrogate).
Outcome c_form_split() {
  double ex_err = 0.0;
  {
    std::mt19937_64 rng(1006);
    const Eigen::MatrixXcd A = random_psd(rng, 4, 4);
    const Eigen::MatrixXcd B =
        random_psd(rng, 4, 4) + Eigen::MatrixXcd::Identity(4, 4);
    const FormDecomposition d = simon_decompose(FormPair::checked(A, B));
    ex_err = std::max({ex_err, max_abs(d.A_ac - A), max_abs(d.A_s)});
  }
  {
    const Eigen::MatrixXcd I2 = Eigen::MatrixXcd::Identity(2, 2);
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(2, 2);
    B(0, 0) = 1.0;
    const FormDecomposition d = simon_decompose(FormPair::checked(I2, B));
    Eigen::MatrixXcd wantS = I2 - B;
    ex_err = std::max({ex_err, max_abs(d.A_ac - B), max_abs(d.A_s - wantS)});
  }
  {
    const Eigen::MatrixXcd ones = Eigen::MatrixXcd::Ones(2, 2);
    Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(2, 2);
    B(0, 0) = 1.0;
    const FormDecomposition d = simon_decompose(FormPair::checked(ones, B));
    ex_err = std::max({ex_err, max_abs(d.A_ac), max_abs(d.A_s - ones)});
  }

  std::mt19937_64 rng(1016);
  int bad = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + rep % 6;
    const Eigen::MatrixXcd A = random_psd(rng, n, n);
    const Eigen::MatrixXcd B = random_psd(rng, n, 1 + rep % n);
    const FormDecomposition d = simon_decompose(FormPair::checked(A, B));
    const double scale = 1.0 + A.norm();
    bool ok = d.converged && max_abs(d.A_ac + d.A_s - A) <= 1e-8 * scale &&
              min_eig(d.A_ac) >= -1e-8 * scale && min_eig(d.A_s) >= -1e-8 * scale;
    // Vanishing on the reference's kernel directions.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es((B + B.adjoint()) / 2.0);
    for (int j = 0; j < n && ok; ++j)
      if (es.eigenvalues()(j) <= 1e-9 * B.norm()) {
        const Eigen::VectorXcd v = es.eigenvectors().col(j);
        ok = std::abs((v.adjoint() * d.A_ac * v)(0, 0)) <= 1e-6 * scale;
      }
    // Rungs never exceed the limit.
    for (const double t : {1.0, 8.0, 64.0})
      ok = ok && min_eig(d.A_ac - parallel_sum(A, t * B)) >= -1e-7 * scale;
    if (!ok) ++bad;
  }
  return {ex_err <= 1e-8 && bad == 0,
          note("examples err %.2e (tol 1e-8); %d of 100 random pairs broke an invariant",
               ex_err, bad)};
}

// 7. Half-circle kernel column: closed-form series vs moment formula.
Outcome c_halfcircle() {
  const HalfCircleReport rep = halfcircle_example(32);
  const double v_err = std::abs(rep.value_at_zero - Complex(0.5, 0.0));
  const bool pass = rep.coeff_discrepancy <= 1e-10 && v_err <= 1e-12 &&
                    rep.antisymmetry_residual == 0.0;
  return {pass, note("coeff gap %.2e (tol 1e-10), k(0) err %.2e (tol 1e-12), antisym %.1e (== 0)",
                     rep.coeff_discrepancy, v_err, rep.antisymmetry_residual)};
}

// 8. End-to-end decomposition against the classical split on the two
// reference pairs: atom on smooth background, and mutually singular halves.
Outcome c_end_to_end() {
  const CircleMeasure m = CircleMeasure::lebesgue();
  const CircleMeasure mu =
      combine(0.5, m, 1.0, CircleMeasure::point_mass(kPi / 2.0, 0.7));
  const DecompositionReport r1 = lebesgue_decompose(mu, m, 256);
  const double ac_err = std::abs(r1.mu_ac.total_mass() - 0.5);
  double w_err = 1.0;
  if (r1.mu_s.atoms().size() == 1)
    w_err = std::abs(r1.mu_s.atoms()[0].weight - 0.7);

  const DecompositionReport r2 = lebesgue_decompose(
      CircleMeasure::lebesgue_upper(), CircleMeasure::lebesgue_lower(), 512);
  const double leak = r2.mu_ac.total_mass();
  const int rank = r2.traces.empty() ? -1 : r2.traces.back().intersection_rank;

  const bool pass = ac_err <= 1e-3 && w_err <= 1e-3 && leak <= 1e-3 && rank >= 1;
  return {pass, note("ac err %.2e, atom err %.2e (tol 1e-3); singular-pair ac %.2e, rank %d (>= 1)",
                     ac_err, w_err, leak, rank)};
}

// 9. Finite kernel pairs decompose with orthogonal, rank-additive parts.
Outcome c_kernel_pairs() {
  std::mt19937_64 rng(1009);
  int bad = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 3 + rep % 8;
    const FiniteKernel k = FiniteKernel::checked(random_psd(rng, n, 1 + rep % n));
    const FiniteKernel K =
        FiniteKernel::checked(random_psd(rng, n, 1 + (rep / 2) % n));
    bool ok = false;
    try {
      const KernelDecomposition d = kernel_lebesgue(k, K);
      const double scale = 1.0 + k.entries.norm();
      ok = max_abs(d.k_ac.entries + d.k_s.entries - k.entries) <= 1e-8 * scale &&
           min_eig(d.k_ac.entries) >= -1e-8 * scale &&
           min_eig(d.k_s.entries) >= -1e-8 * scale &&
           orthogonal_split_check(k, d.k_ac, d.k_s).pass;
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) ++bad;
  }
  return {bad == 0, note("%d of 100 random pairs broke sum/PSD/rank/orthogonality at 1e-8", bad)};
}

// Endpoint-singular quadrature for the logarithmic mean, independent of the
// library's circle quadrature: tanh-sinh nodes on [0, pi], stable next to pi.
double log_one_plus_cos_mean() {
  const double h = 1.0 / 64.0;
  double acc = 0.0;
  for (int k = -256; k <= 256; ++k) {
    const double t = h * k;
    const double u = 0.5 * kPi * std::sinh(t);
    const double w = 0.5 * kPi * std::cosh(t) / std::pow(std::cosh(u), 2);
    if (w < 1e-40) continue;
    const double one_minus_x = 2.0 / (std::exp(2.0 * u) + 1.0);  // 1 - tanh(u)
    const double gap = 0.25 * kPi * one_minus_x;                 // pi/2 - theta/2
    const double c = std::sin(gap);                              // cos(theta/2)
    if (c <= 0.0) continue;
    // log(1 + cos th) = log 2 + 2 log cos(th/2), stable at the endpoint.
    acc += w * (std::numbers::ln2 + 2.0 * std::log(c));
  }
  return acc * h * 0.5;  // x-sum times step, times d theta/dx = pi/2, over pi
}

// 10. Extremeness classifier plus an independent oracle for the distance.
Outcome c_extremeness() {
  int bad = 0;
  if (is_extreme(CircleMeasure::lebesgue()) != Extremeness::NonExtreme) ++bad;
  if (is_extreme(CircleMeasure::lebesgue_upper()) != Extremeness::Extreme) ++bad;
  if (is_extreme(CircleMeasure::lebesgue_lower()) != Extremeness::Extreme) ++bad;
  const CircleMeasure atomic = combine(1.0, CircleMeasure::point_mass(1.0, 0.4),
                                       1.0, CircleMeasure::point_mass(2.5, 0.6));
  if (is_extreme(atomic) != Extremeness::Extreme) ++bad;
  const CircleMeasure one_cos = CircleMeasure::from_density(
      TrigPoly::real_from_pos({Complex(1.0, 0.0), Complex(0.5, 0.0)}));
  if (is_extreme(one_cos) != Extremeness::NonExtreme) ++bad;

  const double oracle = std::exp(log_one_plus_cos_mean());
  const double dist = szego_distance(one_cos);
  const double gap = std::abs(dist - oracle);
  return {bad == 0 && gap <= 1e-6,
          note("%d verdict errors; distance %.9f vs oracle %.9f, gap %.2e (tol 1e-6)",
               bad, dist, oracle, gap)};
}

}  // namespace

int main() {
  struct Row {
    const char* name;
    Outcome (*fn)();
  };
  const Row rows[] = {
      {"kernel agrees across both formulas", c_two_routes},
      {"Hardy baseline (H_m = 1, Szego Gram)", c_hardy},
      {"domination classifier, zero errors", c_domination},
      {"density recovery by deconvolution", c_rn_recovery},
      {"resolvent identity residual", c_resolvent},
      {"form decomposition invariants", c_form_split},
      {"half-circle closed form", c_halfcircle},
      {"end-to-end decomposition vs oracle", c_end_to_end},
      {"finite kernel pair decomposition", c_kernel_pairs},
      {"extremeness classifier + oracle", c_extremeness},
  };
  int failures = 0;
  int idx = 0;
  for (const Row& row : rows) {
    ++idx;
    Outcome o;
    try {
      o = row.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %-40s %s\n", o.pass ? "PASS" : "FAIL", idx, row.name,
                o.detail.c_str());
  }
  if (failures > 0) std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
