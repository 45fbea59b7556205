#include "chebpe/starter.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "chebpe/errors.hpp"

namespace chebpe {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::VectorXcd modal_values(const Environment& env, const Eigen::VectorXd& depths,
                              double delta_r, int max_modes) {
  if (env.ssp.kind != SoundSpeedProfile::Kind::Isovelocity) {
    throw UnsupportedStarterError(
        "modal starter: only isovelocity environments have the modal form");
  }
  if (!(delta_r > 0.0)) {
    throw DomainError("modal starter: delta_r must be positive");
  }
  env.validate();
  if (max_modes < 0) {
    throw DomainError("modal starter: max_modes must be >= 1 (or 0 for all propagating)");
  }

  const double H = env.depth;
  const Complex k = (1.0 + Complex(0.0, 1.0) * attenuation_eta() * env.atten_beta) *
                    (env.omega() / env.ssp.speed);
  // Propagating modes: vertical wavenumber below the medium wavenumber.
  int count = static_cast<int>(std::floor(k.real() * H / kPi));
  while (count >= 1 && !(count * kPi / H < k.real())) --count;
  if (max_modes > 0 && max_modes < count) count = max_modes;
  if (count < 1) {
    throw DomainError("modal starter: no propagating modes for this environment");
  }

  Eigen::VectorXcd values = Eigen::VectorXcd::Zero(depths.size());
  const Complex prefactor = Complex(0.0, 2.0 * kPi / H);
  for (int m = 1; m <= count; ++m) {
    const double kz = m * kPi / H;
    const Complex kr = std::sqrt(k * k - kz * kz);
    // Far-field radial factor with cylindrical spreading restored:
    // sqrt(r) * H0(kr r) -> sqrt(2/(pi kr)) e^{i(kr r - pi/4)}.
    const Complex radial = std::sqrt(2.0 / (kPi * kr)) *
                           std::exp(Complex(0.0, 1.0) * (kr * delta_r) - Complex(0.0, kPi / 4.0));
    const Complex mode_amp = prefactor * std::sin(kz * env.source_depth) * radial;
    for (Eigen::Index j = 0; j < depths.size(); ++j) {
      values[j] += mode_amp * std::sin(kz * depths[j]);
    }
  }
  return values;
}

Eigen::VectorXcd gaussian_values(const Environment& env, const Eigen::VectorXd& depths,
                                 double width_scale) {
  if (!(width_scale > 0.0)) {
    throw DomainError("gaussian starter: width_scale must be positive");
  }
  env.validate();
  const double k0 = env.k0();
  const double zs = env.source_depth;
  const double H = env.depth;
  const double amp = std::sqrt(k0);
  auto raw = [&](double z) {
    const double dz = z - zs;
    return amp * std::exp(-0.5 * k0 * k0 * dz * dz / (width_scale * width_scale));
  };
  // Subtract the linear interpolant of the endpoint values so the
  // pressure-release rows hold exactly before the march begins.
  const double top = raw(0.0), bottom = raw(H);
  Eigen::VectorXcd values(depths.size());
  for (Eigen::Index j = 0; j < depths.size(); ++j) {
    const double z = depths[j];
    values[j] = raw(z) - (top + (bottom - top) * (z / H));
  }
  return values;
}

}  // namespace

Eigen::VectorXcd starter_values(const StarterSpec& spec, const Environment& env,
                                const Eigen::VectorXd& depths, double delta_r) {
  for (Eigen::Index j = 0; j < depths.size(); ++j) {
    if (!(depths[j] >= 0.0 && depths[j] <= env.depth)) {
      throw DomainError("starter_values: depth " + std::to_string(depths[j]) +
                        " outside [0, " + std::to_string(env.depth) + "]");
    }
  }
  switch (spec.kind) {
    case StarterSpec::Kind::Modal:
      return modal_values(env, depths, delta_r, spec.max_modes);
    case StarterSpec::Kind::Gaussian:
      return gaussian_values(env, depths, spec.width_scale);
  }
  throw DomainError("starter_values: invalid starter kind");
}

SpectrumVector modal_starter(const Environment& env, const CglGrid& grid, double delta_r,
                             int max_modes) {
  const Eigen::VectorXd depths = map_depth_to_cgl(env.depth, grid);
  return forward_transform(modal_values(env, depths, delta_r, max_modes));
}

SpectrumVector gaussian_starter(const Environment& env, const CglGrid& grid, double width_scale) {
  const Eigen::VectorXd depths = map_depth_to_cgl(env.depth, grid);
  return forward_transform(gaussian_values(env, depths, width_scale));
}

SpectrumVector make_starter(const StarterSpec& spec, const Environment& env, const CglGrid& grid,
                            double delta_r) {
  switch (spec.kind) {
    case StarterSpec::Kind::Modal:
      return modal_starter(env, grid, delta_r, spec.max_modes);
    case StarterSpec::Kind::Gaussian:
      return gaussian_starter(env, grid, spec.width_scale);
  }
  throw DomainError("make_starter: invalid starter kind");
}

}  // namespace chebpe
