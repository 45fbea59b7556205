#pragma once

// Chebyshev-Gauss-Lobatto grids, forward/backward Chebyshev transforms,
// spectral differentiation, and convolution (profile-multiplication)
// matrices.
//
// Conventions used throughout:
//  * A grid of order N has N+1 points x_j = cos(j*pi/N), j = 0..N,
//    descending from +1 to -1.
//  * A spectrum of order N is the coefficient vector (u_0..u_N) of
//    u(x) = sum_k u_k T_k(x); it always has length N+1.
//  * Transforms are dense O(N^2) matrix applications (N stays in the
//    hundreds here; determinism and simplicity beat an FFT), and T_k at the
//    nodes is evaluated in closed form, T_k(x_j) = cos(k*j*pi/N), with the
//    angle reduced by integer arithmetic so large k*j loses no accuracy.
//  * Everything is defined for complex-valued grid functions; real input is
//    a special case.
//
// All functions are pure and safe to call concurrently.

#include <complex>

#include <Eigen/Dense>

namespace chebpe {

using Complex = std::complex<double>;

// Chebyshev expansion coefficients (length N+1, possibly complex).
using SpectrumVector = Eigen::VectorXcd;

// Spectral differentiation matrix: coefficients of u' from coefficients
// of u, strictly upper triangular.
using DerivativeMap = Eigen::MatrixXd;

// Spectral pointwise-multiplication matrix built from a multiplier's
// spectrum: C_v * u_hat ~ spectrum of v*u (truncated at order N).
using ConvolutionMap = Eigen::MatrixXcd;

// Chebyshev-Gauss-Lobatto grid of order N: points[j] = cos(j*pi/N).
// points[0] = 1 and points[N] = -1 exactly; the grid is exactly
// antisymmetric (points[j] = -points[N-j]).
struct CglGrid {
  int order = 0;           // N; the grid has N+1 points
  Eigen::VectorXd points;  // descending, in [-1, 1]
};

// Build the CGL grid of order N. Throws InvalidOrderError for N < 2.
CglGrid cgl_points(int N);

// Forward transform: values at the CGL nodes (ordered j = 0..N) to
// expansion coefficients, via Gauss-Chebyshev-Lobatto quadrature of the
// projection integrals. Throws DimensionError if values has fewer than
// 3 entries (order below 2).
SpectrumVector forward_transform(const Eigen::VectorXcd& values);

// Backward transform: coefficients to values at the CGL nodes,
// values[j] = sum_k u_k T_k(x_j). Inverse of forward_transform to
// round-off. Throws DimensionError on order mismatch.
Eigen::VectorXcd backward_transform(const SpectrumVector& spectrum, const CglGrid& grid);

// Differentiation matrix of order N: D[k][p] = 2p/c_k for p > k with p+k
// odd (c_0 = 2, c_k = 1 otherwise), zero elsewhere. D*u_hat approximates
// the spectrum of u'. Throws InvalidOrderError for N < 2.
DerivativeMap derivative_map(int N);

// Convolution matrix of the multiplier profile with spectrum v: the matrix
// C_v such that C_v*u_hat is the truncated spectrum of the pointwise
// product v*u. Exactly symmetric in (u,v): C_v*u == C_u*v up to the shared
// truncation tail. Throws DimensionError for spectra shorter than 3.
ConvolutionMap convolution_map(const SpectrumVector& v_spectrum);

// Evaluate the expansion sum_k c_k T_k(x) at one point x in [-1,1] by the
// Clenshaw recurrence (used for off-grid depth evaluation). Throws
// DomainError for |x| > 1.
Complex clenshaw_eval(const SpectrumVector& spectrum, double x);

// Rows of T_k(x_p) for a set of evaluation points: the dense backward
// evaluation matrix mapping a spectrum to values at arbitrary points
// (each |x| <= 1, enforced with DomainError).
Eigen::MatrixXd evaluation_matrix(const Eigen::VectorXd& x, int order);

}  // namespace chebpe
