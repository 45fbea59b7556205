#pragma once

// Discrete depth operator, Tau-conditioned stepped system, and the range
// march (split-step solves or the precomputed transfer matrix).
//
// The depth operator in spectral space is the dense (N+1)x(N+1) matrix
//
//   X = k0^{-2} [ (4/H^2) C_rho D C_{1/rho} D + C_{k^2} - k0^2 I ],
//
// assembled from the differentiation and convolution matrices. One range
// step is the rational product prod_j (I + alpha_j X)/(I + beta_j X)
// followed by the scalar phase e^{i k0 dr}. The Tau treatment keeps the
// weak-form rows k = 0..N-2 of every factor and replaces the last two rows
// with the pressure-release boundary conditions sum_k p_k (+1)^k = 0
// (surface) and sum_k p_k (-1)^k = 0 (bottom): those rows of each L_j
// become (1,1,...,1) and (1,-1,1,...), and the matching rows of each R_j
// are zeroed, so every sub-solve of the split enforces the boundaries
// exactly. The phase factor is applied per step as a scalar and never
// folded into the transfer matrix.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "chebpe/chebyshev.hpp"
#include "chebpe/environment.hpp"
#include "chebpe/pade.hpp"

namespace chebpe {

// Dense spectral-space realization of the depth operator.
struct DepthOperator {
  int order = 0;        // N
  Eigen::MatrixXcd X;   // (N+1) x (N+1)
};

// Assemble the depth operator for an environment at truncation order N
// (N >= 4). With constant density the C_rho D C_{1/rho} D sandwich is
// exactly D^2, and that shortcut is taken.
DepthOperator assemble_depth_operator(const Environment& env, int N);

// The n factor pairs (L_j, R_j) with Tau boundary rows installed and L_j
// factorized once for repeated solves.
class SteppedSystem {
 public:
  SteppedSystem(const DepthOperator& op, const PadeSeries& series);

  int order() const { return order_; }
  int terms() const { return static_cast<int>(right_.size()); }
  std::complex<double> phase() const { return phase_; }

  // The modified factors (boundary rows installed), exposed for tests.
  const Eigen::MatrixXcd& left_factor(int j) const { return left_[j]; }
  const Eigen::MatrixXcd& right_factor(int j) const { return right_[j]; }

  // One range step: sequentially solve L_j y = R_j x for j = 1..n, then
  // multiply by the phase factor.
  SpectrumVector step_split(const SpectrumVector& phat) const;

  // Transfer matrix T = prod_j L_j^{-1} R_j (phase NOT folded in),
  // accumulated in ascending j so that applying T reproduces step_split's
  // right-to-left factor order. Deterministic: same system, same bytes.
  Eigen::MatrixXcd transfer_matrix() const;

 private:
  int order_ = 0;
  std::complex<double> phase_;
  std::vector<Eigen::MatrixXcd> left_;
  std::vector<Eigen::MatrixXcd> right_;
  std::vector<Eigen::PartialPivLU<Eigen::MatrixXcd>> lu_;
};

enum class MarchMode { Split, Transfer };

// Spectra at every marched range Δr, 2Δr, ..., MΔr with M = floor(r_max/Δr).
struct MarchResult {
  std::vector<double> ranges;
  std::vector<SpectrumVector> spectra;
};

// March the starter spectrum (defined at r = Δr) out to r_max. The first
// record is the starter itself; each later record is one application of the
// step. Aborts with InstabilityError (reporting the step index) if the
// spectrum becomes non-finite or its norm exceeds 1e6 times the starter's.
MarchResult march(const SteppedSystem& system, const SpectrumVector& starter, double r_max,
                  double delta_r, MarchMode mode);

// Convenience overload that assembles the operator and system first.
MarchResult march(const Environment& env, int N, const PadeSeries& series,
                  const SpectrumVector& starter, double r_max, double delta_r, MarchMode mode);

// Boundary residuals (|sum_k c_k|, |sum_k (-1)^k c_k|) of a spectrum: the
// surface and bottom pressure values the Tau rows drive to zero.
std::pair<double, double> boundary_residuals(const SpectrumVector& spectrum);

}  // namespace chebpe
