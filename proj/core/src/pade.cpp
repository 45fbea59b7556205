#include "chebpe/pade.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_complex.hpp>

#include "chebpe/errors.hpp"

namespace chebpe {

namespace {

// 50 significant digits; the denominator coefficient system is a Hankel
// matrix whose conditioning deteriorates quickly with n, so synthesis runs
// far above double precision and rounds only the final coefficients.
using HpComplex = boost::multiprecision::cpp_complex_50;
using HpReal = HpComplex::value_type;

// Maclaurin coefficients c_0..c_order of f(t) = exp(i*sigma*(sqrt(1+t)-1)).
// With g(t) = sqrt(1+t)-1 = sum_{m>=1} g_m t^m (binomial series) and
// f' = i*sigma*g'*f, the coefficients obey
//   (m+1) c_{m+1} = i*sigma * sum_{j=0..m} (j+1) g_{j+1} c_{m-j}.
std::vector<HpComplex> propagator_series(const HpComplex& i_sigma, int order) {
  std::vector<HpReal> g(order + 2);
  g[0] = 0;
  HpReal binom = 1;  // C(1/2, m), built by recurrence
  for (int m = 1; m <= order + 1; ++m) {
    binom *= (HpReal(0.5) - (m - 1)) / m;
    g[m] = binom;
  }
  std::vector<HpComplex> c(order + 1);
  c[0] = 1;
  for (int m = 0; m < order; ++m) {
    HpComplex acc = 0;
    for (int j = 0; j <= m; ++j) acc += HpReal(j + 1) * g[j + 1] * c[m - j];
    c[m + 1] = i_sigma * acc / HpReal(m + 1);
  }
  return c;
}

// Solve the dense n x n system A q = b in place by Gaussian elimination
// with partial pivoting. Throws SynthesisError on a (numerically) zero
// pivot. n <= 12, so no library machinery is warranted at this type.
std::vector<HpComplex> solve_dense(std::vector<std::vector<HpComplex>> A,
                                   std::vector<HpComplex> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    HpReal best = abs(A[col][col]);
    for (int row = col + 1; row < n; ++row) {
      const HpReal mag = abs(A[row][col]);
      if (mag > best) {
        best = mag;
        pivot = row;
      }
    }
    if (best == 0) {
      throw SynthesisError("pade synthesis: singular coefficient system at column " +
                           std::to_string(col));
    }
    std::swap(A[col], A[pivot]);
    std::swap(b[col], b[pivot]);
    for (int row = col + 1; row < n; ++row) {
      const HpComplex factor = A[row][col] / A[col][col];
      for (int k = col; k < n; ++k) A[row][k] -= factor * A[col][k];
      b[row] -= factor * b[col];
    }
  }
  std::vector<HpComplex> x(n);
  for (int row = n - 1; row >= 0; --row) {
    HpComplex acc = b[row];
    for (int k = row + 1; k < n; ++k) acc -= A[row][k] * x[k];
    x[row] = acc / A[row][row];
  }
  return x;
}

// Roots of the monic polynomial s^n + a_{n-1} s^{n-1} + ... + a_0 by the
// Durand-Kerner simultaneous iteration. coeff[k] multiplies s^k
// (coeff.size() == n, leading 1 implicit). Converges comfortably at this
// precision for the n <= 12 polynomials met here; failure to converge is a
// synthesis error, per the module contract.
std::vector<HpComplex> monic_roots(const std::vector<HpComplex>& coeff) {
  const int n = static_cast<int>(coeff.size());
  auto eval = [&](const HpComplex& s) {
    HpComplex v = 1;
    for (int k = n - 1; k >= 0; --k) v = v * s + coeff[k];
    return v;
  };
  // Initial guesses on a circle of radius ~ geometric mean root magnitude,
  // with an offset angle so no guess starts on a symmetry axis.
  const HpReal radius = pow(abs(coeff[0]) + HpReal("1e-40"), HpReal(1) / n);
  const HpReal two_pi = 8 * atan(HpReal(1));
  std::vector<HpComplex> z(n);
  for (int k = 0; k < n; ++k) {
    const HpReal angle = two_pi * (HpReal(k) + HpReal("0.3718")) / n;
    z[k] = radius * HpComplex(cos(angle), sin(angle));
  }
  const HpReal tol("1e-42");
  for (int iter = 0; iter < 300; ++iter) {
    HpReal worst = 0;
    for (int k = 0; k < n; ++k) {
      HpComplex denom = 1;
      for (int j = 0; j < n; ++j) {
        if (j != k) denom *= z[k] - z[j];
      }
      const HpComplex delta = eval(z[k]) / denom;
      z[k] -= delta;
      const HpReal step = abs(delta);
      if (step > worst) worst = step;
    }
    if (worst < tol * (1 + abs(z[0]))) return z;
  }
  throw SynthesisError("pade synthesis: root finding did not converge for degree " +
                       std::to_string(n) + " polynomial");
}

std::complex<double> to_double(const HpComplex& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// Deterministic coefficient order: ascending magnitude, ties broken by
// real then imaginary part.
void sort_coefficients(std::vector<std::complex<double>>& v) {
  std::sort(v.begin(), v.end(), [](const std::complex<double>& a, const std::complex<double>& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace

PadeSeries compute_pade_series(double k0, double delta_r, int n) {
  if (n < 1 || n > 12) {
    throw InvalidOrderError("compute_pade_series: term count must be in [1, 12], got " +
                            std::to_string(n));
  }
  if (!(k0 > 0.0) || !(delta_r > 0.0)) {
    throw DomainError("compute_pade_series: k0 and delta_r must be positive");
  }

  const double sigma = k0 * delta_r;
  const HpComplex i_sigma(0, HpReal(sigma));
  const std::vector<HpComplex> c = propagator_series(i_sigma, 2 * n);

  // Denominator Q(t) = 1 + q_1 t + ... + q_n t^n from the order-matching
  // conditions sum_{j=1..n} c_{n+i-j} q_j = -c_{n+i}, i = 1..n.
  std::vector<std::vector<HpComplex>> A(n, std::vector<HpComplex>(n));
  std::vector<HpComplex> rhs(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int idx = n + i - j;
      A[i - 1][j - 1] = (idx >= 0) ? c[idx] : HpComplex(0);
    }
    rhs[i - 1] = -c[n + i];
  }
  const std::vector<HpComplex> q = solve_dense(std::move(A), std::move(rhs));

  // Numerator P(t) = 1 + p_1 t + ... + p_n t^n from p_m = c_m + sum q_j c_{m-j}.
  std::vector<HpComplex> p(n);
  for (int m = 1; m <= n; ++m) {
    HpComplex acc = c[m];
    for (int j = 1; j <= std::min(m, n); ++j) acc += q[j - 1] * c[m - j];
    p[m - 1] = acc;
  }

  // P(t) = prod (1 + alpha_j t) means the reversed monic polynomial
  // s^n P(1/s) = s^n + p_1 s^{n-1} + ... + p_n has roots exactly -alpha_j;
  // likewise for Q and -beta_j. Build coeff[k] of s^k for the root finder.
  auto reversed_monic = [n](const std::vector<HpComplex>& poly) {
    std::vector<HpComplex> coeff(n);
    for (int k = 0; k < n; ++k) coeff[k] = poly[n - 1 - k];
    return coeff;
  };

  PadeSeries series;
  series.n = n;
  series.sigma = sigma;
  series.phase = std::exp(std::complex<double>(0.0, sigma));
  series.alpha.reserve(n);
  series.beta.reserve(n);
  for (const HpComplex& root : monic_roots(reversed_monic(p))) {
    series.alpha.push_back(to_double(-root));
  }
  for (const HpComplex& root : monic_roots(reversed_monic(q))) {
    series.beta.push_back(to_double(-root));
  }
  sort_coefficients(series.alpha);
  sort_coefficients(series.beta);
  return series;
}

std::complex<double> evaluate_propagator(const PadeSeries& series, std::complex<double> t) {
  std::complex<double> result = series.phase;
  for (int j = 0; j < series.n; ++j) {
    const std::complex<double> denom = 1.0 + series.beta[j] * t;
    if (std::abs(denom) < 1e-300) {
      throw SingularityError("evaluate_propagator: pole of rational term " + std::to_string(j + 1),
                             j + 1);
    }
    result *= (1.0 + series.alpha[j] * t) / denom;
  }
  return result;
}

}  // namespace chebpe
