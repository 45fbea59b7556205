#include "chebpe/environment.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "chebpe/errors.hpp"

namespace chebpe {

namespace {

constexpr double kPi = std::numbers::pi;

// Shared piecewise-linear interpolation for profile tables; the table is
// validated (non-empty, strictly increasing) before use.
double table_at(const std::vector<std::pair<double, double>>& table, double z,
                const char* what) {
  if (table.size() < 2) {
    throw DomainError(std::string(what) + ": table needs at least 2 points");
  }
  if (z < table.front().first || z > table.back().first) {
    throw DomainError(std::string(what) + ": depth " + std::to_string(z) +
                      " outside tabulated span [" + std::to_string(table.front().first) + ", " +
                      std::to_string(table.back().first) + "]; extrapolation is not allowed");
  }
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (z <= table[i].first) {
      const auto& [z0, v0] = table[i - 1];
      const auto& [z1, v1] = table[i];
      const double w = (z - z0) / (z1 - z0);
      return v0 + w * (v1 - v0);
    }
  }
  return table.back().second;  // unreachable after the span check
}

void validate_table(const std::vector<std::pair<double, double>>& table, double H,
                    const char* what) {
  if (table.size() < 2) {
    throw DomainError(std::string(what) + ": table needs at least 2 points");
  }
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (!(table[i].first > table[i - 1].first)) {
      throw DomainError(std::string(what) + ": table depths must be strictly increasing");
    }
  }
  if (table.front().first != 0.0 || table.back().first != H) {
    throw DomainError(std::string(what) + ": table must span [0, H] exactly (got [" +
                      std::to_string(table.front().first) + ", " +
                      std::to_string(table.back().first) + "], H = " + std::to_string(H) + ")");
  }
}

}  // namespace

SoundSpeedProfile SoundSpeedProfile::isovelocity(double c_ms) {
  SoundSpeedProfile p;
  p.kind = Kind::Isovelocity;
  p.speed = c_ms;
  return p;
}

SoundSpeedProfile SoundSpeedProfile::munk() {
  SoundSpeedProfile p;
  p.kind = Kind::Munk;
  return p;
}

SoundSpeedProfile SoundSpeedProfile::table_profile(std::vector<std::pair<double, double>> points) {
  SoundSpeedProfile p;
  p.kind = Kind::Table;
  p.table = std::move(points);
  return p;
}

double SoundSpeedProfile::at(double z) const {
  switch (kind) {
    case Kind::Isovelocity:
      if (z < 0.0) throw DomainError("sound speed: negative depth " + std::to_string(z));
      return speed;
    case Kind::Munk: {
      if (z < 0.0) throw DomainError("sound speed: negative depth " + std::to_string(z));
      const double zt = (z - 1300.0) / 650.0;
      return 1500.0 * (1.0 + 0.0073 * (zt - 1.0 + std::exp(-zt)));
    }
    case Kind::Table:
      return table_at(table, z, "sound speed");
  }
  throw DomainError("sound speed: invalid profile kind");
}

DensityProfile DensityProfile::constant(double rho_gcc) {
  DensityProfile p;
  p.kind = Kind::Constant;
  p.rho = rho_gcc;
  return p;
}

DensityProfile DensityProfile::table_profile(std::vector<std::pair<double, double>> points) {
  DensityProfile p;
  p.kind = Kind::Table;
  p.table = std::move(points);
  return p;
}

double DensityProfile::at(double z) const {
  switch (kind) {
    case Kind::Constant:
      if (z < 0.0) throw DomainError("density: negative depth " + std::to_string(z));
      return rho;
    case Kind::Table:
      return table_at(table, z, "density");
  }
  throw DomainError("density: invalid profile kind");
}

double Environment::omega() const { return 2.0 * kPi * freq; }

double Environment::k0() const { return 2.0 * kPi * freq / ref_speed; }

double Environment::sound_speed_at(double z) const {
  if (!(z >= 0.0 && z <= depth)) {
    throw DomainError("sound_speed_at: depth " + std::to_string(z) + " outside [0, " +
                      std::to_string(depth) + "]");
  }
  return ssp.at(z);
}

void Environment::validate() const {
  if (!(depth > 0.0)) throw DomainError("environment: depth must be positive");
  if (!(freq > 0.0)) throw DomainError("environment: frequency must be positive");
  if (!(ref_speed > 0.0)) throw DomainError("environment: reference speed must be positive");
  if (!(atten_beta >= 0.0)) throw DomainError("environment: attenuation must be non-negative");
  if (!(source_depth > 0.0 && source_depth < depth)) {
    throw DomainError("environment: source depth must lie strictly inside (0, H)");
  }
  if (!(receiver_depth > 0.0 && receiver_depth < depth)) {
    throw DomainError("environment: receiver depth must lie strictly inside (0, H)");
  }
  if (ssp.kind == SoundSpeedProfile::Kind::Table) {
    validate_table(ssp.table, depth, "sound speed");
    for (const auto& [z, c] : ssp.table) {
      if (!(c > 0.0)) throw DomainError("sound speed: non-positive value in table");
    }
  }
  if (ssp.kind == SoundSpeedProfile::Kind::Isovelocity && !(ssp.speed > 0.0)) {
    throw DomainError("sound speed: non-positive constant value");
  }
  if (density.kind == DensityProfile::Kind::Table) {
    validate_table(density.table, depth, "density");
    for (const auto& [z, r] : density.table) {
      if (!(r > 0.0)) throw DomainError("density: non-positive value in table");
    }
  } else if (!(density.rho > 0.0)) {
    throw DomainError("density: non-positive constant value");
  }
}

double attenuation_eta() { return 1.0 / (40.0 * kPi * std::log10(std::exp(1.0))); }

Eigen::VectorXd map_depth_to_cgl(double H, const CglGrid& grid) {
  if (!(H > 0.0)) throw DomainError("map_depth_to_cgl: depth must be positive");
  return (H / 2.0) * (Eigen::VectorXd::Ones(grid.order + 1) - grid.points);
}

SpectrumVector wavenumber_profile(const Environment& env, const CglGrid& grid) {
  const Eigen::VectorXd depths = map_depth_to_cgl(env.depth, grid);
  const Complex loss_factor(1.0, attenuation_eta() * env.atten_beta);
  const double omega = env.omega();
  Eigen::VectorXcd k_squared(depths.size());
  for (Eigen::Index j = 0; j < depths.size(); ++j) {
    const Complex k = loss_factor * (omega / env.sound_speed_at(depths[j]));
    k_squared[j] = k * k;
  }
  return forward_transform(k_squared);
}

}  // namespace chebpe
