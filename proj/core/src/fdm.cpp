#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "chebpe/errors.hpp"
#include "chebpe/oracle.hpp"

namespace chebpe {

namespace {

using Complex = std::complex<double>;

// Thomas factorization of one tridiagonal L_j (no pivoting; the factors
// are diagonally dominant for the step sizes of interest, and a vanishing
// pivot is reported rather than repaired).
void factorize_term(FdmSystem::Term& term, int term_index) {
  const Eigen::Index n = term.pivot.size();
  for (Eigen::Index i = 1; i < n; ++i) {
    const Complex prev = term.pivot(i - 1);
    if (std::abs(prev) < 1e-300) {
      throw FactorizationError("finite-difference factor is singular", term_index);
    }
    const Complex l = term.lower(i) / prev;
    term.lower(i) = l;
    term.pivot(i) -= l * term.upper(i - 1);
  }
  if (std::abs(term.pivot(n - 1)) < 1e-300) {
    throw FactorizationError("finite-difference factor is singular", term_index);
  }
}

// Solve L_j p = w in place using the stored factorization.
void solve_term(const FdmSystem::Term& term, Eigen::VectorXcd& w) {
  const Eigen::Index n = w.size();
  for (Eigen::Index i = 1; i < n; ++i) w(i) -= term.lower(i) * w(i - 1);
  w(n - 1) /= term.pivot(n - 1);
  for (Eigen::Index i = n - 2; i >= 0; --i) {
    w(i) = (w(i) - term.upper(i) * w(i + 1)) / term.pivot(i);
  }
}

}  // namespace

FdmSystem build_fdm_system(const Environment& env, int N_f, const PadeSeries& series) {
  if (N_f < 4) {
    throw InvalidOrderError("finite-difference baseline needs N_f >= 4, got " +
                            std::to_string(N_f));
  }
  if (env.density.kind != DensityProfile::Kind::Constant) {
    throw DomainError("finite-difference baseline supports constant density only");
  }
  env.validate();

  FdmSystem system;
  system.nf = N_f;
  system.h = env.depth / N_f;
  system.depths = Eigen::VectorXd::LinSpaced(N_f + 1, 0.0, env.depth);
  system.phase = series.phase;

  const double k0 = env.k0();
  const double inv_h2k2 = 1.0 / (system.h * system.h * k0 * k0);
  const Complex atten(1.0, attenuation_eta() * env.atten_beta);

  system.x_sub = Eigen::VectorXcd::Zero(N_f + 1);
  system.x_diag = Eigen::VectorXcd::Zero(N_f + 1);
  system.x_super = Eigen::VectorXcd::Zero(N_f + 1);
  for (int i = 1; i < N_f; ++i) {
    const Complex ki = atten * env.omega() / env.sound_speed_at(system.depths(i));
    system.x_sub(i) = inv_h2k2;
    system.x_super(i) = inv_h2k2;
    system.x_diag(i) = -2.0 * inv_h2k2 + (ki * ki - k0 * k0) / (k0 * k0);
  }

  system.terms.reserve(series.alpha.size());
  for (std::size_t j = 0; j < series.alpha.size(); ++j) {
    FdmSystem::Term term;
    const Complex alpha = series.alpha[j];
    const Complex beta = series.beta[j];

    term.lower = beta * system.x_sub;
    term.pivot = Eigen::VectorXcd::Ones(N_f + 1) + beta * system.x_diag;
    term.upper = beta * system.x_super;
    // Pressure-release walls: identity rows in L_j ...
    term.pivot(0) = 1.0;
    term.pivot(N_f) = 1.0;
    term.lower(N_f) = 0.0;
    term.upper(0) = 0.0;

    term.r_sub = alpha * system.x_sub;
    term.r_diag = Eigen::VectorXcd::Ones(N_f + 1) + alpha * system.x_diag;
    term.r_super = alpha * system.x_super;
    // ... and zero rows in R_j, so the walls stay exactly zero.
    term.r_diag(0) = 0.0;
    term.r_diag(N_f) = 0.0;
    term.r_sub(N_f) = 0.0;
    term.r_super(0) = 0.0;

    factorize_term(term, static_cast<int>(j) + 1);
    system.terms.push_back(std::move(term));
  }
  return system;
}

Eigen::VectorXcd fdm_apply_operator(const FdmSystem& system, const Eigen::VectorXcd& values) {
  if (values.size() != system.nf + 1) {
    throw DimensionError("fdm_apply_operator: expected " + std::to_string(system.nf + 1) +
                         " values, got " + std::to_string(values.size()));
  }
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(values.size());
  for (int i = 1; i < system.nf; ++i) {
    out(i) = system.x_sub(i) * values(i - 1) + system.x_diag(i) * values(i) +
             system.x_super(i) * values(i + 1);
  }
  return out;
}

Eigen::VectorXcd fdm_step(const FdmSystem& system, const Eigen::VectorXcd& values) {
  if (values.size() != system.nf + 1) {
    throw DimensionError("fdm_step: expected " + std::to_string(system.nf + 1) +
                         " values, got " + std::to_string(values.size()));
  }
  Eigen::VectorXcd state = values;
  Eigen::VectorXcd work(values.size());
  const Eigen::Index n = values.size();
  for (const FdmSystem::Term& term : system.terms) {
    work(0) = 0.0;
    work(n - 1) = 0.0;
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
      work(i) = term.r_sub(i) * state(i - 1) + term.r_diag(i) * state(i) +
                term.r_super(i) * state(i + 1);
    }
    solve_term(term, work);
    state.swap(work);
  }
  return system.phase * state;
}

FieldGrid fdm_march(const Environment& env, int N_f, const PadeSeries& series,
                    const Eigen::VectorXcd& starter_values, double r_max, double delta_r,
                    const std::vector<double>& output_depths) {
  if (!(delta_r > 0.0) || !(r_max >= delta_r)) {
    throw DomainError("fdm_march: need 0 < delta_r <= r_max");
  }
  const FdmSystem system = build_fdm_system(env, N_f, series);
  if (starter_values.size() != N_f + 1) {
    throw DimensionError("fdm_march: starter has " + std::to_string(starter_values.size()) +
                         " values; grid needs " + std::to_string(N_f + 1));
  }

  const int steps = static_cast<int>(std::floor(r_max / delta_r * (1.0 + 1e-12)));
  const double starter_norm = starter_values.norm();

  // Output depths: every interior grid depth by default, otherwise linear
  // interpolation weights on the requested depths.
  std::vector<double> depths = output_depths;
  if (depths.empty()) {
    depths.assign(system.depths.data() + 1, system.depths.data() + N_f);
  }
  struct Blend {
    Eigen::Index lo;
    double w_hi;
  };
  std::vector<Blend> blends(depths.size());
  for (std::size_t p = 0; p < depths.size(); ++p) {
    const double z = depths[p];
    if (!(z >= 0.0 && z <= env.depth)) {
      throw DomainError("fdm_march: output depth " + std::to_string(z) + " outside [0, " +
                        std::to_string(env.depth) + "]");
    }
    const double s = z / system.h;
    Eigen::Index lo = static_cast<Eigen::Index>(std::floor(s));
    if (lo >= N_f) lo = N_f - 1;
    blends[p] = {lo, s - static_cast<double>(lo)};
  }

  FieldGrid field;
  field.depths = depths;
  field.ranges.resize(steps);
  field.pressure.resize(steps, static_cast<Eigen::Index>(depths.size()));
  field.tl.resize(steps, static_cast<Eigen::Index>(depths.size()));

  Eigen::VectorXcd state = starter_values;
  for (int s = 0; s < steps; ++s) {
    if (s > 0) {
      state = fdm_step(system, state);
      if (!state.allFinite() || state.norm() > 1e6 * starter_norm) {
        throw InstabilityError("finite-difference march diverged", static_cast<std::size_t>(s));
      }
    }
    const double r = (s + 1) * delta_r;
    field.ranges[s] = r;
    const double spreading = 1.0 / std::sqrt(r);
    for (std::size_t p = 0; p < depths.size(); ++p) {
      const Blend& b = blends[p];
      const Complex value =
          spreading * ((1.0 - b.w_hi) * state(b.lo) + b.w_hi * state(b.lo + 1));
      field.pressure(s, static_cast<Eigen::Index>(p)) = value;
      field.tl(s, static_cast<Eigen::Index>(p)) = -20.0 * std::log10(std::abs(value));
    }
  }
  return field;
}

}  // namespace chebpe
