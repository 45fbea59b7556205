#pragma once

// Cylinder functions needed by the analytic modal oracle: J0, Y0, the
// outgoing Hankel function H0 = J0 + i*Y0 for propagating modes, and K0
// for the decaying (evanescent) branch, via H0(i*y) = -(2i/pi) K0(y).
//
// Implementation: ascending power series for small argument, large-argument
// asymptotic expansions beyond x = 8, truncated at their smallest term.
// Absolute accuracy is a few 1e-8 at the x = 8 switchover (the asymptotic
// tail's floor) and near round-off elsewhere; the target over (0, 1e4] is
// 1e-7 absolute. No external special-function dependency, so the values
// are cross-checked in-repo against independently tabulated references.

#include <complex>

namespace chebpe {

// Bessel functions of the first/second kind, order zero. J0 accepts any
// finite x (even symmetry); Y0 requires x > 0 (DomainError otherwise).
double bessel_j0(double x);
double bessel_y0(double x);

// Modified Bessel function of the second kind, order zero; x > 0.
double bessel_k0(double x);

// Outgoing cylindrical wave H0(x) = J0(x) + i*Y0(x); x > 0.
std::complex<double> hankel0_first_kind(double x);

}  // namespace chebpe
