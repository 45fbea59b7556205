#include "chebpe/solver.hpp"

#include <cmath>
#include <string>

#include "chebpe/errors.hpp"

namespace chebpe {

DepthOperator assemble_depth_operator(const Environment& env, int N) {
  if (N < 4) {
    throw InvalidOrderError("assemble_depth_operator: order must be >= 4, got " +
                            std::to_string(N));
  }
  env.validate();

  const CglGrid grid = cgl_points(N);
  const DerivativeMap D = derivative_map(N);
  const double k0 = env.k0();
  const double H = env.depth;

  Eigen::MatrixXcd second_derivative;
  if (env.density.kind == DensityProfile::Kind::Constant) {
    // C_rho C_{1/rho} = I exactly for uniform density; skip the sandwich.
    second_derivative = (D * D).cast<Complex>();
  } else {
    const Eigen::VectorXd depths = map_depth_to_cgl(H, grid);
    Eigen::VectorXcd rho(depths.size()), rho_inv(depths.size());
    for (Eigen::Index j = 0; j < depths.size(); ++j) {
      const double r = env.density.at(depths[j]);
      rho[j] = r;
      rho_inv[j] = 1.0 / r;
    }
    const ConvolutionMap C_rho = convolution_map(forward_transform(rho));
    const ConvolutionMap C_rho_inv = convolution_map(forward_transform(rho_inv));
    second_derivative = C_rho * D.cast<Complex>() * C_rho_inv * D.cast<Complex>();
  }

  const ConvolutionMap C_k2 = convolution_map(wavenumber_profile(env, grid));

  DepthOperator op;
  op.order = N;
  op.X = (4.0 / (H * H)) * second_derivative + C_k2;
  op.X.diagonal().array() -= k0 * k0;
  op.X /= k0 * k0;
  return op;
}

SteppedSystem::SteppedSystem(const DepthOperator& op, const PadeSeries& series)
    : order_(op.order), phase_(series.phase) {
  const int N = op.order;
  if (op.X.rows() != N + 1 || op.X.cols() != N + 1) {
    throw DimensionError("SteppedSystem: operator matrix does not match its declared order");
  }

  // Boundary rows: surface sum_k p_k = 0 and bottom sum_k (-1)^k p_k = 0.
  Eigen::RowVectorXcd surface_row = Eigen::RowVectorXcd::Ones(N + 1);
  Eigen::RowVectorXcd bottom_row(N + 1);
  for (int k = 0; k <= N; ++k) bottom_row[k] = (k % 2 == 0) ? 1.0 : -1.0;

  const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(N + 1, N + 1);
  left_.reserve(series.n);
  right_.reserve(series.n);
  lu_.reserve(series.n);
  for (int j = 0; j < series.n; ++j) {
    Eigen::MatrixXcd L = identity + series.beta[j] * op.X;
    Eigen::MatrixXcd R = identity + series.alpha[j] * op.X;
    L.row(N - 1) = surface_row;
    L.row(N) = bottom_row;
    R.row(N - 1).setZero();
    R.row(N).setZero();
    lu_.emplace_back(L);
    if (!(lu_.back().rcond() > 1e-14)) {
      throw FactorizationError(
          "SteppedSystem: factor " + std::to_string(j + 1) + " of " + std::to_string(series.n) +
              " is numerically singular (rcond <= 1e-14)",
          j + 1);
    }
    left_.push_back(std::move(L));
    right_.push_back(std::move(R));
  }
}

SpectrumVector SteppedSystem::step_split(const SpectrumVector& phat) const {
  if (phat.size() != order_ + 1) {
    throw DimensionError("step_split: spectrum length does not match system order");
  }
  SpectrumVector x = phat;
  for (std::size_t j = 0; j < lu_.size(); ++j) {
    x = lu_[j].solve(right_[j] * x);
  }
  return phase_ * x;
}

Eigen::MatrixXcd SteppedSystem::transfer_matrix() const {
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Identity(order_ + 1, order_ + 1);
  for (std::size_t j = 0; j < lu_.size(); ++j) {
    T = lu_[j].solve(right_[j] * T);
  }
  return T;
}

namespace {

// Number of recorded ranges: floor(r_max/delta_r), tolerant of r_max being
// an exact multiple represented inexactly.
int march_steps(double r_max, double delta_r) {
  if (!(delta_r > 0.0) || !(r_max >= delta_r)) {
    throw DomainError("march: need r_max >= delta_r > 0");
  }
  return static_cast<int>(std::floor(r_max / delta_r * (1.0 + 1e-12)));
}

}  // namespace

MarchResult march(const SteppedSystem& system, const SpectrumVector& starter, double r_max,
                  double delta_r, MarchMode mode) {
  if (starter.size() != system.order() + 1) {
    throw DimensionError("march: starter spectrum length does not match system order");
  }
  const int M = march_steps(r_max, delta_r);
  const double starter_norm = starter.norm();

  MarchResult result;
  result.ranges.resize(M);
  result.spectra.reserve(M);
  result.spectra.push_back(starter);
  result.ranges[0] = delta_r;

  Eigen::MatrixXcd T;
  if (mode == MarchMode::Transfer && M > 1) T = system.transfer_matrix();

  for (int step = 1; step < M; ++step) {
    const SpectrumVector& prev = result.spectra.back();
    SpectrumVector next = (mode == MarchMode::Split) ? system.step_split(prev)
                                                     : SpectrumVector(system.phase() * (T * prev));
    if (!next.allFinite() || next.norm() > 1e6 * starter_norm) {
      throw InstabilityError(
          "march: spectrum blew up at step " + std::to_string(step + 1) + " (range " +
              std::to_string((step + 1) * delta_r) + " m)",
          static_cast<std::size_t>(step + 1));
    }
    result.ranges[step] = (step + 1) * delta_r;
    result.spectra.push_back(std::move(next));
  }
  return result;
}

MarchResult march(const Environment& env, int N, const PadeSeries& series,
                  const SpectrumVector& starter, double r_max, double delta_r, MarchMode mode) {
  const SteppedSystem system(assemble_depth_operator(env, N), series);
  return march(system, starter, r_max, delta_r, mode);
}

std::pair<double, double> boundary_residuals(const SpectrumVector& spectrum) {
  Complex surface = 0.0, bottom = 0.0;
  for (Eigen::Index k = 0; k < spectrum.size(); ++k) {
    surface += spectrum[k];
    bottom += (k % 2 == 0) ? spectrum[k] : -spectrum[k];
  }
  return {std::abs(surface), std::abs(bottom)};
}

}  // namespace chebpe
