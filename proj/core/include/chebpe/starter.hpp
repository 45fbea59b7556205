#pragma once

// Initial fields at r = delta_r for the range march.
//
// Two starters are provided in place of an operator self-starter:
//
//  * modal: exact for the isovelocity waveguide. Seeds the far-field
//    (reduced-pressure) modal sum over propagating modes,
//      p(dr, z) = (2*pi*i/H) sum_m sin(kz_m zs) sin(kz_m z)
//                 * sqrt(2/(pi kr_m)) * e^{i(kr_m dr - pi/4)},
//    i.e. sqrt(r) times the asymptotic outgoing cylinder wave. The march
//    advances each mode by a pure phase, so this seeding reproduces the
//    analytic far field without the near-field amplitude bias that seeding
//    the exact cylinder function at small kr_m*dr would freeze in.
//  * gaussian: sqrt(k0) * exp(-(k0^2/2)(z-zs)^2/ws^2) with the linear
//    interpolant of its endpoint values subtracted, so the pressure-release
//    rows hold exactly at r = delta_r. Seeds profiles with no modal form.
//
// Both starters satisfy the Tau boundary rows to round-off.

#include <Eigen/Dense>

#include "chebpe/chebyshev.hpp"
#include "chebpe/environment.hpp"

namespace chebpe {

struct StarterSpec {
  enum class Kind { Modal, Gaussian };

  Kind kind = Kind::Modal;
  int max_modes = 0;         // Modal: cap on mode count; 0 = all propagating
  double width_scale = 1.0;  // Gaussian: dimensionless width multiplier
};

// Physical starter values at arbitrary depths (used to seed the
// finite-difference baseline on its own grid, and internally to sample the
// spectral grid). delta_r only affects the modal starter's phase.
Eigen::VectorXcd starter_values(const StarterSpec& spec, const Environment& env,
                                const Eigen::VectorXd& depths, double delta_r);

// Modal starter spectrum. Requires an isovelocity environment
// (UnsupportedStarterError otherwise); max_modes = 0 keeps every
// propagating mode.
SpectrumVector modal_starter(const Environment& env, const CglGrid& grid, double delta_r,
                             int max_modes = 0);

// Gaussian starter spectrum (any environment).
SpectrumVector gaussian_starter(const Environment& env, const CglGrid& grid,
                                double width_scale = 1.0);

// Dispatch on spec.kind.
SpectrumVector make_starter(const StarterSpec& spec, const Environment& env, const CglGrid& grid,
                            double delta_r);

}  // namespace chebpe
