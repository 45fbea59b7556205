#include "chebpe/oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "chebpe/bessel.hpp"
#include "chebpe/errors.hpp"

namespace chebpe {

namespace {

constexpr double kPi = std::numbers::pi;

double isovelocity_wavenumber(const Environment& env) {
  if (env.ssp.kind != SoundSpeedProfile::Kind::Isovelocity) {
    throw DomainError("analytic oracle: only the isovelocity waveguide has the modal form");
  }
  if (env.atten_beta != 0.0) {
    throw DomainError("analytic oracle: attenuation is out of scope (beta must be 0)");
  }
  env.validate();
  return env.omega() / env.ssp.speed;
}

// Radial factor H0(kr r): outgoing cylinder wave on the propagating
// branch, -(2i/pi) K0(|kr| r) on the decaying branch.
std::complex<double> radial_factor(const std::complex<double>& kr, double r) {
  if (kr.imag() == 0.0) return hankel0_first_kind(kr.real() * r);
  return {0.0, -(2.0 / kPi) * bessel_k0(kr.imag() * r)};
}

}  // namespace

ModalSolution modal_solution(const Environment& env, int max_modes) {
  if (max_modes < 1) {
    throw DomainError("modal_solution: max_modes must be >= 1");
  }
  ModalSolution sol;
  sol.H = env.depth;
  sol.zs = env.source_depth;
  sol.k = isovelocity_wavenumber(env);
  sol.modes.reserve(max_modes);
  for (int m = 1; m <= max_modes; ++m) {
    Mode mode;
    mode.kz = m * kPi / sol.H;
    const double radicand = sol.k * sol.k - mode.kz * mode.kz;
    // Branch with Im(kr) >= 0: real for propagating modes, +i|kr| beyond
    // cutoff so evanescent contributions decay with r.
    mode.kr = (radicand >= 0.0) ? std::complex<double>(std::sqrt(radicand), 0.0)
                                : std::complex<double>(0.0, std::sqrt(-radicand));
    sol.modes.push_back(mode);
    if (radicand > 0.0) sol.propagating = m;
  }
  return sol;
}

std::complex<double> analytic_field(const Environment& env, double r, double z, int max_modes) {
  const double k = isovelocity_wavenumber(env);
  if (!(r > 0.0)) {
    throw DomainError("analytic_field: range must be positive, got " + std::to_string(r));
  }
  if (!(z >= 0.0 && z <= env.depth)) {
    throw DomainError("analytic_field: depth " + std::to_string(z) + " outside [0, " +
                      std::to_string(env.depth) + "]");
  }

  const double H = env.depth;
  const double zs = env.source_depth;
  const std::complex<double> prefactor(0.0, 2.0 * kPi / H);
  const int propagating = static_cast<int>(std::floor(k * H / kPi));

  std::complex<double> sum = 0.0;
  int small_streak = 0;
  const int cap = (max_modes > 0) ? max_modes : propagating + 400;
  for (int m = 1; m <= cap; ++m) {
    const double kz = m * kPi / H;
    const double radicand = k * k - kz * kz;
    const std::complex<double> kr = (radicand >= 0.0)
                                        ? std::complex<double>(std::sqrt(radicand), 0.0)
                                        : std::complex<double>(0.0, std::sqrt(-radicand));
    std::complex<double> term;
    if (radicand == 0.0) {
      term = 0.0;  // exactly-cut-off mode carries no outgoing power
    } else {
      term = std::sin(kz * zs) * std::sin(kz * z) * radial_factor(kr, r);
    }
    sum += term;
    if (max_modes == 0 && m > propagating) {
      // Adaptive truncation of the evanescent tail; two consecutive small
      // contributions guard against an accidental sin(kz zs) ~ 0.
      if (std::abs(term) <= 1e-12 * std::abs(sum)) {
        if (++small_streak >= 2) break;
      } else {
        small_streak = 0;
      }
    }
  }
  return prefactor * sum;
}

FieldGrid analytic_grid(const Environment& env, const std::vector<double>& ranges,
                        const std::vector<double>& depths, int max_modes) {
  FieldGrid field;
  field.ranges = ranges;
  field.depths = depths;
  field.pressure.resize(ranges.size(), depths.size());
  field.tl.resize(ranges.size(), depths.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    for (std::size_t p = 0; p < depths.size(); ++p) {
      const std::complex<double> value = analytic_field(env, ranges[i], depths[p], max_modes);
      field.pressure(i, p) = value;
      field.tl(i, p) = -20.0 * std::log10(std::abs(value));
    }
  }
  return field;
}

}  // namespace chebpe
