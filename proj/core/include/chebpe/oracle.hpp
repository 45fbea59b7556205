#pragma once

// Independent reference solutions used to validate the spectral marcher:
// the analytic modal field of the isovelocity waveguide and a second-order
// finite-difference split-step baseline on an equispaced grid.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "chebpe/environment.hpp"
#include "chebpe/field.hpp"
#include "chebpe/pade.hpp"

namespace chebpe {

// One waveguide mode: vertical wavenumber kz_m = m*pi/H and horizontal
// wavenumber kr_m = sqrt(k^2 - kz_m^2), branch with Im(kr) >= 0 so
// evanescent contributions decay outward.
struct Mode {
  double kz = 0.0;
  std::complex<double> kr;
};

struct ModalSolution {
  double H = 0.0;       // waveguide depth, m
  double zs = 0.0;      // source depth, m
  double k = 0.0;       // medium wavenumber, rad/m
  int propagating = 0;  // modes with real kr
  std::vector<Mode> modes;
};

// First max_modes modes of the isovelocity waveguide (max_modes >= 1).
// Requires an isovelocity, attenuation-free environment (DomainError
// otherwise; lossy oracles are out of scope).
ModalSolution modal_solution(const Environment& env, int max_modes);

// Exact full pressure of a unit point source (|P| = 1 at 1 m) in the
// isovelocity waveguide:
//   P(r,z) = (2*pi*i/H) sum_m sin(kz_m zs) sin(kz_m z) H0(kr_m r),
// where the radial factor is the outgoing Hankel function for propagating
// modes and the matching decaying branch -(2i/pi) K0(|kr| r) for evanescent
// ones. max_modes = 0 sums adaptively: all propagating modes, then
// evanescent modes until their contribution falls below 1e-12 of the
// running sum. Throws DomainError for r <= 0 or z outside [0, H].
std::complex<double> analytic_field(const Environment& env, double r, double z,
                                    int max_modes = 0);

// Analytic TL field on a range x depth grid (full pressure; no spreading
// restoration needed).
FieldGrid analytic_grid(const Environment& env, const std::vector<double>& ranges,
                        const std::vector<double>& depths, int max_modes = 0);

// Finite-difference realization of the depth operator on N_f+1 equispaced
// depths (spacing h = H/N_f): second-order central differences inside,
// pressure-release (Dirichlet) rows at both ends, the same rational series
// marched by per-term precomputed tridiagonal factorizations.
struct FdmSystem {
  int nf = 0;                      // interval count; nf+1 grid points
  double h = 0.0;                  // grid spacing, m
  Eigen::VectorXd depths;          // nf+1 equispaced depths
  std::complex<double> phase;      // e^{i k0 dr}

  // Tridiagonal depth operator (interior rows; boundary rows are zero).
  Eigen::VectorXcd x_sub, x_diag, x_super;

  // Per rational term: tridiagonal LU of L_j = I + beta_j X (with Dirichlet
  // identity rows) and the bands of R_j = I + alpha_j X (boundary rows
  // zeroed).
  struct Term {
    Eigen::VectorXcd lower, pivot, upper;     // factorized L_j
    Eigen::VectorXcd r_sub, r_diag, r_super;  // R_j bands
  };
  std::vector<Term> terms;
};

// Build the FDM system. Requires N_f >= 4 (coarse grids are legitimate
// convergence-study points) and constant density (the baseline does not
// implement the variable-density sandwich).
FdmSystem build_fdm_system(const Environment& env, int N_f, const PadeSeries& series);

// Apply the tridiagonal depth operator (for tests).
Eigen::VectorXcd fdm_apply_operator(const FdmSystem& system, const Eigen::VectorXcd& values);

// One range step on physical grid values (n tridiagonal solves + phase).
Eigen::VectorXcd fdm_step(const FdmSystem& system, const Eigen::VectorXcd& values);

// March starter values (sampled on the FDM grid, defined at r = delta_r)
// out to r_max and materialize transmission loss. output_depths selects the
// rows of the result by linear interpolation on the FDM grid (exact at grid
// points); empty means every interior grid depth. Instability detection as
// in the spectral marcher.
FieldGrid fdm_march(const Environment& env, int N_f, const PadeSeries& series,
                    const Eigen::VectorXcd& starter_values, double r_max, double delta_r,
                    const std::vector<double>& output_depths = {});

}  // namespace chebpe
