#include "chebpe/bessel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "chebpe/errors.hpp"

namespace chebpe {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.5772156649015328606;
// Series/asymptotic switchover. At x = 8 the ascending series still holds
// ~13 digits (its largest term is ~1e2) and the asymptotic tail bottoms out
// near 2e-8 relative, which the √(2/πx) prefactor pulls below 1e-8 absolute.
constexpr double kSwitch = 8.0;

// Ascending series J0(x) = sum (-1)^m (x^2/4)^m / (m!)^2.
double j0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0, sum = 1.0;
  for (int m = 1; m <= 60; ++m) {
    term *= -q / (static_cast<double>(m) * m);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum) + 1e-300) break;
  }
  return sum;
}

// Companion series Y0(x) = (2/pi)[(ln(x/2)+gamma) J0(x)
//                                 + sum (-1)^{m+1} h_m (x^2/4)^m/(m!)^2],
// with harmonic numbers h_m.
double y0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0, harmonic = 0.0, sum = 0.0;
  for (int m = 1; m <= 60; ++m) {
    term *= q / (static_cast<double>(m) * m);
    harmonic += 1.0 / m;
    const double contrib = (m % 2 == 1 ? 1.0 : -1.0) * harmonic * term;
    sum += contrib;
    if (std::abs(contrib) < 1e-18 * (std::abs(sum) + 1.0)) break;
  }
  return (2.0 / kPi) * ((std::log(0.5 * x) + kEulerGamma) * j0_series(x) + sum);
}

// Large-argument form H0(x) ~ sqrt(2/(pi x)) e^{i(x - pi/4)} sum_k i^k a_k / x^k
// with a_k = (-1)^k [1^2 3^2 ... (2k-1)^2] / (k! 8^k). The sum is truncated
// at its smallest term (an asymptotic, not convergent, series).
std::complex<double> h0_asymptotic(double x) {
  std::complex<double> sum = 1.0;
  double a = 1.0;  // |a_k| / x^k running magnitude
  std::complex<double> ik = 1.0;
  double prev = 1.0;
  for (int k = 1; k <= 30; ++k) {
    const double odd = 2.0 * k - 1.0;
    a *= odd * odd / (8.0 * k * x);
    if (a >= prev) break;  // smallest term reached
    prev = a;
    ik *= std::complex<double>(0.0, 1.0);
    sum += ik * ((k % 2 == 0) ? a : -a);
    if (a < 1e-18) break;
  }
  const double amp = std::sqrt(2.0 / (kPi * x));
  const std::complex<double> osc = std::polar(1.0, x - 0.25 * kPi);
  return amp * osc * sum;
}

// Ascending series I0 and the matching K0 companion series.
double i0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0, sum = 1.0;
  for (int m = 1; m <= 80; ++m) {
    term *= q / (static_cast<double>(m) * m);
    sum += term;
    if (term < 1e-18 * sum) break;
  }
  return sum;
}

double k0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0, harmonic = 0.0, sum = 0.0;
  for (int m = 1; m <= 80; ++m) {
    term *= q / (static_cast<double>(m) * m);
    harmonic += 1.0 / m;
    sum += harmonic * term;
    if (harmonic * term < 1e-18 * (sum + 1.0)) break;
  }
  return -(std::log(0.5 * x) + kEulerGamma) * i0_series(x) + sum;
}

// K0(x) ~ sqrt(pi/(2x)) e^{-x} sum_k a_k / x^k with the same a_k as above,
// truncated at the smallest term.
double k0_asymptotic(double x) {
  double sum = 1.0, a = 1.0, prev = 1.0;
  for (int k = 1; k <= 30; ++k) {
    const double odd = 2.0 * k - 1.0;
    a *= odd * odd / (8.0 * k * x);
    if (a >= prev) break;
    prev = a;
    sum += (k % 2 == 0 ? a : -a);
    if (a < 1e-18) break;
  }
  return std::sqrt(kPi / (2.0 * x)) * std::exp(-x) * sum;
}

}  // namespace

double bessel_j0(double x) {
  x = std::abs(x);  // J0 is even
  if (x <= kSwitch) return j0_series(x);
  return h0_asymptotic(x).real();
}

double bessel_y0(double x) {
  if (!(x > 0.0)) {
    throw DomainError("bessel_y0: argument must be positive, got " + std::to_string(x));
  }
  if (x <= kSwitch) return y0_series(x);
  return h0_asymptotic(x).imag();
}

double bessel_k0(double x) {
  if (!(x > 0.0)) {
    throw DomainError("bessel_k0: argument must be positive, got " + std::to_string(x));
  }
  return (x <= kSwitch) ? k0_series(x) : k0_asymptotic(x);
}

std::complex<double> hankel0_first_kind(double x) {
  if (!(x > 0.0)) {
    throw DomainError("hankel0_first_kind: argument must be positive, got " + std::to_string(x));
  }
  if (x <= kSwitch) return {j0_series(x), y0_series(x)};
  return h0_asymptotic(x);
}

}  // namespace chebpe
