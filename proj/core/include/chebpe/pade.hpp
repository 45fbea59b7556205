#pragma once

// Rational approximation of the one-way propagator.
//
// The range step applies exp(i*k0*dr*sqrt(1+X)). Pulling the reference
// phase out front leaves f(t) = exp(i*sigma*(sqrt(1+t)-1)) with
// sigma = k0*dr, and f is replaced by its diagonal [n/n] Pade approximant
// factored into first-order terms:
//
//   f(t) ~ prod_{j=1..n} (1 + alpha_j t) / (1 + beta_j t),
//
// so alpha_j = -1/(j-th numerator root), beta_j = -1/(j-th denominator
// root). Synthesis path: 2n+1 Maclaurin coefficients of f computed
// analytically in 50-digit complex arithmetic (the coefficient system is
// badly conditioned from n ~ 6), the n x n denominator system solved by
// elimination at the same precision, polynomial roots extracted, then
// inverted and sorted by ascending magnitude for deterministic output.
// Plain (unrotated, unconstrained) Pade only.

#include <complex>
#include <vector>

namespace chebpe {

// The n coefficient pairs plus the common phase of one range step.
struct PadeSeries {
  int n = 0;                               // number of rational terms
  std::complex<double> sigma;              // k0 * delta_r
  std::vector<std::complex<double>> alpha; // numerator coefficients
  std::vector<std::complex<double>> beta;  // denominator coefficients
  std::complex<double> phase;              // exp(i * k0 * delta_r)
};

// Synthesize the n-term series for reference wavenumber k0 (rad/m) and
// range step delta_r (m). Throws InvalidOrderError for n outside [1, 12],
// DomainError for non-positive k0/delta_r, SynthesisError when the
// coefficient system is singular or root finding fails to converge.
PadeSeries compute_pade_series(double k0, double delta_r, int n);

// Scalar evaluation phase * prod_j (1+alpha_j t)/(1+beta_j t), used for
// testing and spectrum safety checks. Throws SingularityError (with the
// offending term index) when t hits a pole.
std::complex<double> evaluate_propagator(const PadeSeries& series, std::complex<double> t);

}  // namespace chebpe
