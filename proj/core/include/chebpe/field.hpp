#pragma once

// Materialization of spectral march results into physical pressure and
// transmission loss, plus the error index used to compare fields.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "chebpe/chebyshev.hpp"
#include "chebpe/environment.hpp"
#include "chebpe/solver.hpp"

namespace chebpe {

// Full pressure (cylindrical spreading restored) and transmission loss on
// a range x depth grid. TL = -20 log10(|P| / |Pref|) in dB referenced to
// the unit source at 1 m; TL is +infinity at exact pressure nulls.
struct FieldGrid {
  std::vector<double> ranges;  // M entries, m
  std::vector<double> depths;  // P entries, m
  Eigen::MatrixXcd pressure;   // M x P
  Eigen::MatrixXd tl;          // M x P, dB
};

// The 1 m reference pressure fixing the TL offset: the starters and the
// analytic oracle share the unit point-source normalization, so this is 1.
std::complex<double> reference_pressure(const Environment& env);

// Evaluate each marched spectrum at the requested depths (exact Chebyshev
// series evaluation at the mapped coordinate, no grid interpolation),
// restore spreading by 1/sqrt(r), and compute TL against the reference
// pressure. Depths outside [0, H] are a DomainError.
FieldGrid materialize(const MarchResult& march, const CglGrid& grid, double H,
                      const std::vector<double>& output_depths,
                      std::complex<double> reference = {1.0, 0.0});

// Mean |TL_a - TL_b| in dB over grid points with range >= min_range,
// skipping points where either TL is non-finite (pressure nulls). The
// grids must agree in ranges and depths (DimensionError otherwise);
// an empty inclusion set is a DomainError.
double error_index(const FieldGrid& field, const FieldGrid& reference, double min_range = 0.0);

// TL-vs-range slice at one depth, extracted from a FieldGrid by linear
// interpolation between its depth rows (exact when depth is a grid row).
std::vector<double> slice_tl(const FieldGrid& field, double depth);

}  // namespace chebpe
