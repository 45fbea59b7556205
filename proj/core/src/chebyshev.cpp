#include "chebpe/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "chebpe/errors.hpp"

namespace chebpe {

namespace {

constexpr double kPi = std::numbers::pi;

// cos(m*pi/N) for m = 0..2N-1, the only angles the node polynomials
// T_k(x_j) = cos(k*j*pi/N) can produce once k*j is reduced mod 2N.
// Computing the table once per transform keeps every entry a single
// small-angle cosine regardless of how large k*j gets.
std::vector<double> cosine_table(int N) {
  std::vector<double> table(2 * N);
  for (int m = 0; m < 2 * N; ++m) table[m] = std::cos(kPi * m / N);
  return table;
}

int order_from_length(Eigen::Index len, const char* what) {
  if (len < 3) {
    throw DimensionError(std::string(what) + ": need at least 3 entries (order >= 2), got " +
                         std::to_string(len));
  }
  return static_cast<int>(len) - 1;
}

}  // namespace

CglGrid cgl_points(int N) {
  if (N < 2) {
    throw InvalidOrderError("cgl_points: order must be >= 2, got " + std::to_string(N));
  }
  CglGrid grid;
  grid.order = N;
  grid.points.resize(N + 1);
  // sin(pi*(N-2j)/(2N)) equals cos(j*pi/N) but is exactly antisymmetric in
  // j <-> N-j (the argument negates exactly), hits +-1 exactly at the ends,
  // and lands on exact 0 at j = N/2 for even N.
  for (int j = 0; j <= N; ++j) {
    grid.points[j] = std::sin(kPi * (N - 2 * j) / (2 * N));
  }
  return grid;
}

SpectrumVector forward_transform(const Eigen::VectorXcd& values) {
  const int N = order_from_length(values.size(), "forward_transform");
  const std::vector<double> cosines = cosine_table(N);

  SpectrumVector spectrum(N + 1);
  // u_k = (1/d_k) sum_j u(x_j) T_k(x_j) w_j with trapezoidal-style
  // quadrature weights w_0 = w_N = pi/2N, w_j = pi/N, and normalization
  // d_0 = d_N = pi, d_k = pi/2. The pi's cancel into the factors below.
  for (int k = 0; k <= N; ++k) {
    const double dk_inv = (k == 0 || k == N) ? 1.0 / N : 2.0 / N;
    Complex acc = 0.5 * values[0];  // T_k(1) = 1, half endpoint weight
    for (int j = 1; j < N; ++j) {
      acc += values[j] * cosines[(k * j) % (2 * N)];
    }
    acc += 0.5 * values[N] * (k % 2 == 0 ? 1.0 : -1.0);  // T_k(-1) = (-1)^k
    spectrum[k] = dk_inv * acc;
  }
  return spectrum;
}

Eigen::VectorXcd backward_transform(const SpectrumVector& spectrum, const CglGrid& grid) {
  const int N = order_from_length(spectrum.size(), "backward_transform");
  if (grid.order != N) {
    throw DimensionError("backward_transform: spectrum order " + std::to_string(N) +
                         " does not match grid order " + std::to_string(grid.order));
  }
  const std::vector<double> cosines = cosine_table(N);

  Eigen::VectorXcd values(N + 1);
  for (int j = 0; j <= N; ++j) {
    Complex acc = spectrum[0];
    for (int k = 1; k <= N; ++k) {
      acc += spectrum[k] * cosines[(k * j) % (2 * N)];
    }
    values[j] = acc;
  }
  return values;
}

DerivativeMap derivative_map(int N) {
  if (N < 2) {
    throw InvalidOrderError("derivative_map: order must be >= 2, got " + std::to_string(N));
  }
  DerivativeMap D = DerivativeMap::Zero(N + 1, N + 1);
  for (int k = 0; k <= N; ++k) {
    const double ck = (k == 0) ? 2.0 : 1.0;
    for (int p = k + 1; p <= N; ++p) {
      if ((p + k) % 2 == 1) D(k, p) = 2.0 * p / ck;
    }
  }
  return D;
}

ConvolutionMap convolution_map(const SpectrumVector& v_spectrum) {
  const int N = order_from_length(v_spectrum.size(), "convolution_map");
  ConvolutionMap C = ConvolutionMap::Zero(N + 1, N + 1);
  // From the product rule T_m T_n = (T_{m+n} + T_{|m-n|})/2: the spectrum
  // of v*u picks up v_{k-m}/2 (sum channel), v_{m-k}/2 and v_{m+k}/2
  // (difference channels), all truncated at order N. Row k = 0 is the
  // special case where the two difference channels coincide.
  for (int m = 0; m <= N; ++m) {
    C(0, m) = (m == 0) ? v_spectrum[0] : 0.5 * v_spectrum[m];
  }
  for (int k = 1; k <= N; ++k) {
    for (int m = 0; m <= N; ++m) {
      Complex entry = 0.0;
      if (k - m >= 0) entry += 0.5 * v_spectrum[k - m];
      if (m - k >= 0) entry += 0.5 * v_spectrum[m - k];
      if (m + k <= N) entry += 0.5 * v_spectrum[m + k];
      C(k, m) = entry;
    }
  }
  return C;
}

Complex clenshaw_eval(const SpectrumVector& spectrum, double x) {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw DomainError("clenshaw_eval: point " + std::to_string(x) + " outside [-1, 1]");
  }
  const int N = static_cast<int>(spectrum.size()) - 1;
  Complex b1 = 0.0, b2 = 0.0;
  for (int k = N; k >= 1; --k) {
    const Complex b = spectrum[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b;
  }
  return spectrum[0] + x * b1 - b2;
}

Eigen::MatrixXd evaluation_matrix(const Eigen::VectorXd& x, int order) {
  if (order < 2) {
    throw InvalidOrderError("evaluation_matrix: order must be >= 2, got " + std::to_string(order));
  }
  Eigen::MatrixXd B(x.size(), order + 1);
  for (Eigen::Index p = 0; p < x.size(); ++p) {
    if (!(x[p] >= -1.0 && x[p] <= 1.0)) {
      throw DomainError("evaluation_matrix: point " + std::to_string(x[p]) +
                        " outside [-1, 1]");
    }
    const double theta = std::acos(x[p]);
    for (int k = 0; k <= order; ++k) B(p, k) = std::cos(k * theta);
  }
  return B;
}

}  // namespace chebpe
