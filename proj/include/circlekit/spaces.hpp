#pragma once

#include <Eigen/Dense>
#include <vector>

#include "circlekit/kernel.hpp"
#include "circlekit/measure.hpp"

namespace circlekit {

// Finite realization of an operator, tagged by the coordinate system it acts
// on. Coefficient-basis operators act on Taylor coefficients 0..N; grid-basis
// operators act on kernel-column coordinates over a point list. Mixing tags
// is a type error.
struct TruncatedOperator {
  enum class Basis { Coeff, Grid };

  Eigen::MatrixXcd matrix;
  Basis basis = Basis::Coeff;
  int size = 0;

  static TruncatedOperator coeff(Eigen::MatrixXcd m);
  static TruncatedOperator grid(Eigen::MatrixXcd m);
  // The forward shift on coefficient space (z-multiplication truncated).
  static TruncatedOperator coeff_shift(int n);
};

// output_j = h_{j+1}: Taylor coefficients of (h(z) - h(0)) / z.
std::vector<Complex> backward_shift_coeffs(const std::vector<Complex>& h);

// Verifies V_mu k_z conj(z) = k_z - k_0 in the Taylor-coefficient
// realization: both sides are built independently from moment sums truncated
// at order N and the difference is measured in the mu-norm (pseudo-inverse
// moment metric). The truncation leaves a geometric tail, so the residual is
// bounded by |z|^N k(z, z).
double shift_action_check(const CircleMeasure& mu, Complex z, int N);

// Frobenius norm of the leading (n-1)-square block of V*TV - T, normalized
// by the same block of T. Zero for Toeplitz T under the coefficient shift.
double toeplitz_residual(const TruncatedOperator& T, const TruncatedOperator& V);

struct SpacePair {
  KernelGram G_mu;
  KernelGram G_lam;
};

struct LatticeSplit {
  Eigen::MatrixXcd P_vee;    // projection onto span{k_{z_i} + K_{z_i}}
  Eigen::MatrixXcd P_wedge;  // complementary projection
  KernelGram G_wedge;        // Gram of the intersection kernel columns
};

// Lattice operations on a pair of kernels over a shared grid, realized in
// the 2n-dimensional coordinate span of {k_{z_i} oplus 0, 0 oplus K_{z_i}}
// with the block Gram metric. P_vee projects onto the sum diagonal (range of
// U_vee), P_wedge onto its orthocomplement (range of U_wedge), and G_wedge
// is the induced Gram of the intersection kernel at the grid points.
// Throws SingularMetric when G_mu + G_lam stays condition > 1e12 after the
// 1e-10 relative ridge.
LatticeSplit lattice_split(const SpacePair& sp);

// G_big - G_small when the difference passes psd_check (contractive
// containment); throws NotContractivelyContained otherwise.
KernelGram complementary_kernel(const KernelGram& G_big, const KernelGram& G_small);

struct PythagorasResult {
  Eigen::VectorXcd y;  // AA* x
  Eigen::VectorXcd z;  // (I - AA*) x
  double normsq_y;     // squared norm in the operator-range metric of A
  double normsq_z;     // squared norm in the complementary range metric
  double defect;       // | ||x||^2 - (normsq_y + normsq_z) |
};

// Pythagorean decomposition along the operator range of a contraction A:
// x = AA* x + (I - AA*) x with range norms through pseudo-inverse metrics.
// Throws NotContraction when ||A|| > 1 + 1e-12.
PythagorasResult pythagoras_check(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& x);

}  // namespace circlekit
