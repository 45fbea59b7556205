#pragma once

// Waveguide description: water depth, sound-speed and density profiles,
// attenuation, and source parameters, plus their sampling onto the
// spectral grid.
//
// Depth z runs from 0 (sea surface) to H (bottom), in meters. The spectral
// domain maps depth linearly, x = 1 - 2z/H, so x = +1 is the surface and
// x = -1 the bottom. Environments are immutable after construction and safe
// to share across threads.

#include <utility>
#include <vector>

#include "chebpe/chebyshev.hpp"

namespace chebpe {

// Sound speed c(z) in m/s: constant, the canonical Munk deep-ocean channel
//   c(z) = 1500 { 1 + 0.0073 [ zt - 1 + exp(-zt) ] },  zt = (z - 1300)/650,
// or a piecewise-linear table of (z, c) breakpoints spanning [0, H].
struct SoundSpeedProfile {
  enum class Kind { Isovelocity, Munk, Table };

  Kind kind = Kind::Isovelocity;
  double speed = 1500.0;                           // Isovelocity only, m/s
  std::vector<std::pair<double, double>> table;    // Table only, (z m, c m/s)

  static SoundSpeedProfile isovelocity(double c_ms);
  static SoundSpeedProfile munk();
  static SoundSpeedProfile table_profile(std::vector<std::pair<double, double>> points);

  // Evaluate c at depth z. Table profiles interpolate linearly and reject z
  // outside the tabulated span (DomainError); extrapolation is an error,
  // not a guess. Munk/isovelocity reject negative z.
  double at(double z) const;
};

// Density rho(z) in g/cm^3: constant or piecewise-linear table. Only the
// ratios rho/rho and 1/rho enter the depth operator, so the unit is carried
// as given.
struct DensityProfile {
  enum class Kind { Constant, Table };

  Kind kind = Kind::Constant;
  double rho = 1.0;                                // Constant only, g/cm^3
  std::vector<std::pair<double, double>> table;    // Table only, (z m, rho)

  static DensityProfile constant(double rho_gcc);
  static DensityProfile table_profile(std::vector<std::pair<double, double>> points);

  double at(double z) const;
};

struct Environment {
  double depth = 0.0;           // H, m
  double freq = 0.0;            // source frequency f, Hz
  double source_depth = 0.0;    // zs, m
  double receiver_depth = 0.0;  // zr, m (slice output depth)
  double ref_speed = 1500.0;    // c0, m/s
  double atten_beta = 0.0;      // attenuation, dB per wavelength
  SoundSpeedProfile ssp;
  DensityProfile density;

  double omega() const;  // 2*pi*f, rad/s
  double k0() const;     // reference wavenumber 2*pi*f/c0, rad/m

  // Sound speed at depth z with the [0, H] domain check applied.
  double sound_speed_at(double z) const;

  // Throws DomainError when any invariant fails: 0 < zs < H, 0 < zr < H,
  // f > 0, c0 > 0, H > 0, beta >= 0, profile tables strictly increasing in
  // z and spanning [0, H] exactly, densities positive.
  void validate() const;
};

// eta in the lossy wavenumber k = (1 + i*eta*beta) * omega / c(z):
// converts dB-per-wavelength attenuation to an imaginary index,
// eta = 1 / (40*pi*log10(e)).
double attenuation_eta();

// Physical depths of the CGL nodes: z_j = H*(1 - x_j)/2, ascending from
// z_0 = 0 (surface) to z_N = H (bottom). Throws DomainError for H <= 0.
Eigen::VectorXd map_depth_to_cgl(double H, const CglGrid& grid);

// Spectrum of the squared complex wavenumber profile k^2(x): samples
// k(z) = (1 + i*eta*beta)*omega/c(z) at the CGL depths, squares pointwise,
// and forward-transforms.
SpectrumVector wavenumber_profile(const Environment& env, const CglGrid& grid);

}  // namespace chebpe
