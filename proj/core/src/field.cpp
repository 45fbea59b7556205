#include "chebpe/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chebpe/errors.hpp"

namespace chebpe {

std::complex<double> reference_pressure(const Environment& env) {
  env.validate();
  // Unit point source: |P| = 1 at 1 m. The modal normalization of both the
  // analytic oracle and the modal starter already carries this constant, so
  // TL differences between engines are offset-free.
  return {1.0, 0.0};
}

FieldGrid materialize(const MarchResult& march, const CglGrid& grid, double H,
                      const std::vector<double>& output_depths, std::complex<double> reference) {
  if (!(H > 0.0)) throw DomainError("materialize: depth must be positive");
  const double ref_mag = std::abs(reference);
  if (!(ref_mag > 0.0)) throw DomainError("materialize: reference pressure must be nonzero");

  Eigen::VectorXd x(output_depths.size());
  for (std::size_t p = 0; p < output_depths.size(); ++p) {
    const double z = output_depths[p];
    if (!(z >= 0.0 && z <= H)) {
      throw DomainError("materialize: output depth " + std::to_string(z) + " outside [0, " +
                        std::to_string(H) + "]");
    }
    // Depth-to-spectral mapping; clamp the last-bit rounding at the ends.
    x[p] = std::clamp(1.0 - 2.0 * z / H, -1.0, 1.0);
  }
  const Eigen::MatrixXcd B = evaluation_matrix(x, grid.order).cast<Complex>();

  const Eigen::Index M = static_cast<Eigen::Index>(march.spectra.size());
  const Eigen::Index P = static_cast<Eigen::Index>(output_depths.size());
  Eigen::MatrixXcd stacked(grid.order + 1, M);
  for (Eigen::Index i = 0; i < M; ++i) {
    if (march.spectra[i].size() != grid.order + 1) {
      throw DimensionError("materialize: spectrum order does not match grid order");
    }
    stacked.col(i) = march.spectra[i];
  }
  const Eigen::MatrixXcd values = B * stacked;  // depths x ranges

  FieldGrid field;
  field.ranges = march.ranges;
  field.depths = output_depths;
  field.pressure.resize(M, P);
  field.tl.resize(M, P);
  for (Eigen::Index i = 0; i < M; ++i) {
    const double spreading = 1.0 / std::sqrt(march.ranges[i]);
    field.pressure.row(i) = spreading * values.col(i).transpose();
    for (Eigen::Index p = 0; p < P; ++p) {
      field.tl(i, p) = -20.0 * std::log10(std::abs(field.pressure(i, p)) / ref_mag);
    }
  }
  return field;
}

double error_index(const FieldGrid& field, const FieldGrid& reference, double min_range) {
  if (field.ranges.size() != reference.ranges.size() ||
      field.depths.size() != reference.depths.size()) {
    throw DimensionError("error_index: grids have different shapes");
  }
  for (std::size_t i = 0; i < field.ranges.size(); ++i) {
    if (std::abs(field.ranges[i] - reference.ranges[i]) > 1e-9 * (1.0 + field.ranges[i])) {
      throw DimensionError("error_index: grids have different range axes");
    }
  }
  for (std::size_t p = 0; p < field.depths.size(); ++p) {
    if (std::abs(field.depths[p] - reference.depths[p]) > 1e-9 * (1.0 + field.depths[p])) {
      throw DimensionError("error_index: grids have different depth axes");
    }
  }

  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < field.ranges.size(); ++i) {
    if (field.ranges[i] < min_range) continue;
    for (std::size_t p = 0; p < field.depths.size(); ++p) {
      const double a = field.tl(i, p), b = reference.tl(i, p);
      if (!std::isfinite(a) || !std::isfinite(b)) continue;  // pressure nulls
      sum += std::abs(a - b);
      ++count;
    }
  }
  if (count == 0) {
    throw DomainError("error_index: no grid points beyond the exclusion radius");
  }
  return sum / static_cast<double>(count);
}

std::vector<double> slice_tl(const FieldGrid& field, double depth) {
  if (field.depths.empty()) throw DomainError("slice_tl: field has no depth rows");
  if (depth < field.depths.front() || depth > field.depths.back()) {
    throw DomainError("slice_tl: depth " + std::to_string(depth) +
                      " outside the field's depth span");
  }
  // Flanking depth rows (field depths are ascending).
  std::size_t hi = 0;
  while (hi + 1 < field.depths.size() && field.depths[hi] < depth) ++hi;
  const std::size_t lo = (hi == 0) ? 0 : hi - 1;
  const double z0 = field.depths[lo], z1 = field.depths[hi];
  const double w = (z1 == z0) ? 0.0 : (depth - z0) / (z1 - z0);

  std::vector<double> tl(field.ranges.size());
  for (std::size_t i = 0; i < field.ranges.size(); ++i) {
    // Interpolate the complex pressure, not the dB values, so nulls between
    // rows stay physical.
    const std::complex<double> p =
        (1.0 - w) * field.pressure(i, lo) + w * field.pressure(i, hi);
    tl[i] = -20.0 * std::log10(std::abs(p));
  }
  return tl;
}

}  // namespace chebpe
