#include "doctest.h"

#include <chebpe/environment.hpp>
#include <chebpe/errors.hpp>
#include <chebpe/oracle.hpp>
#include <chebpe/pade.hpp>
#include <chebpe/starter.hpp>

#include <cmath>
#include <complex>

using namespace chebpe;

namespace {

constexpr double kPi = 3.14159265358979323846;

Environment shallow_env() {
  Environment env;
  env.depth = 100.0;
  env.freq = 20.0;
  env.source_depth = 36.0;
  env.receiver_depth = 36.0;
  env.ref_speed = 1500.0;
  env.ssp = SoundSpeedProfile::isovelocity(1500.0);
  env.density = DensityProfile::constant(1.0);
  return env;
}

Eigen::VectorXcd fdm_starter(const Environment& env, const FdmSystem& system, double dr) {
  StarterSpec spec;
  spec.kind = StarterSpec::Kind::Modal;
  return starter_values(spec, env, system.depths, dr);
}

}  // namespace

TEST_CASE("finite-difference system layout") {
  const Environment env = shallow_env();
  const PadeSeries series = compute_pade_series(env.k0(), 5.0, 2);
  const FdmSystem system = build_fdm_system(env, 50, series);

  CHECK(system.nf == 50);
  CHECK(system.h == doctest::Approx(2.0).epsilon(1e-15));
  REQUIRE(system.depths.size() == 51);
  CHECK(system.depths[0] == 0.0);
  CHECK(system.depths[50] == 100.0);
  CHECK(std::abs(system.phase - series.phase) == 0.0);
  REQUIRE(system.terms.size() == 2);

  CHECK_THROWS_AS(build_fdm_system(env, 3, series), const InvalidOrderError&);

  Environment layered = env;
  layered.density = DensityProfile::table_profile({{0.0, 1.0}, {100.0, 1.5}});
  CHECK_THROWS_AS(build_fdm_system(layered, 50, series), const DomainError&);
}

TEST_CASE("discrete depth operator: sine modes with second-order dispersion error") {
  const Environment env = shallow_env();
  const PadeSeries series = compute_pade_series(env.k0(), 5.0, 2);
  const FdmSystem system = build_fdm_system(env, 200, series);
  const double k0 = env.k0();

  Eigen::VectorXcd svals(201);
  for (int i = 0; i <= 200; ++i) svals[i] = std::sin(kPi * system.depths[i] / env.depth);
  const Eigen::VectorXcd y = fdm_apply_operator(system, svals);

  // Boundary rows are identically zero.
  CHECK(std::abs(y[0]) == 0.0);
  CHECK(std::abs(y[200]) == 0.0);

  // Interior: eigenvalue -(pi/H)^2/k0^2 up to the (kh)^2/12 dispersion bias.
  const double lambda = -(kPi / env.depth) * (kPi / env.depth) / (k0 * k0);
  for (int i = 1; i < 200; ++i) {
    CHECK(std::abs(y[i] - lambda * svals[i]) <= 3e-5 * std::abs(lambda));
  }

  Eigen::VectorXcd wrong(200);
  CHECK_THROWS_AS(fdm_apply_operator(system, wrong), const DimensionError&);
}

TEST_CASE("tridiagonal step matches a dense linear-algebra reference") {
  const Environment env = shallow_env();
  const PadeSeries series = compute_pade_series(env.k0(), 5.0, 2);
  const int nf = 24;
  const FdmSystem system = build_fdm_system(env, nf, series);
  const Eigen::VectorXcd x0 = fdm_starter(env, system, 5.0);

  // Dense reference: assemble X from fdm_apply_operator columns, build each
  // L_j/R_j with the same boundary treatment, and solve with Eigen's
  // general LU instead of the Thomas recurrence.
  const int n = nf + 1;
  Eigen::MatrixXcd X = Eigen::MatrixXcd::Zero(n, n);
  for (int c = 0; c < n; ++c) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
    e[c] = 1.0;
    X.col(c) = fdm_apply_operator(system, e);
  }
  Eigen::VectorXcd expected = x0;
  for (int j = 0; j < series.n; ++j) {
    Eigen::MatrixXcd L = Eigen::MatrixXcd::Identity(n, n) + series.beta[j] * X;
    Eigen::MatrixXcd R = Eigen::MatrixXcd::Identity(n, n) + series.alpha[j] * X;
    L.row(0).setZero();
    L(0, 0) = 1.0;
    L.row(n - 1).setZero();
    L(n - 1, n - 1) = 1.0;
    R.row(0).setZero();
    R.row(n - 1).setZero();
    expected = L.partialPivLu().solve((R * expected).eval());
  }
  expected *= series.phase;

  const Eigen::VectorXcd stepped = fdm_step(system, x0);
  CHECK((stepped - expected).norm() <= 1e-12 * expected.norm());
}

TEST_CASE("stepping preserves exact zeros on the pressure-release rows") {
  const Environment env = shallow_env();
  const PadeSeries series = compute_pade_series(env.k0(), 5.0, 4);
  const FdmSystem system = build_fdm_system(env, 100, series);

  Eigen::VectorXcd state = fdm_starter(env, system, 5.0);
  state[0] = 0.0;
  state[100] = 0.0;
  for (int s = 0; s < 50; ++s) {
    state = fdm_step(system, state);
    CHECK(state[0] == Complex(0.0, 0.0));
    CHECK(state[100] == Complex(0.0, 0.0));
  }
}

TEST_CASE("baseline march agrees with the analytic solution on its own grid") {
  const Environment env = shallow_env();
  const double dr = 5.0, rmax = 3000.0;
  const PadeSeries series = compute_pade_series(env.k0(), dr, 8);
  const FdmSystem system = build_fdm_system(env, 200, series);

  const FieldGrid field =
      fdm_march(env, 200, series, fdm_starter(env, system, dr), rmax, dr);
  REQUIRE(field.ranges.size() == 600);
  REQUIRE(field.depths.size() == 199);  // interior nodes by default

  const FieldGrid reference = analytic_grid(env, field.ranges, field.depths);
  const double err = error_index(field, reference, 10.0 * env.ref_speed / env.freq);
  CHECK(err < 1.0);
  CHECK(err > 1e-4);  // h^2 dispersion keeps it well off zero
}

TEST_CASE("march interpolates output depths linearly on the grid") {
  const Environment env = shallow_env();
  const double dr = 5.0;
  const PadeSeries series = compute_pade_series(env.k0(), dr, 2);
  const FdmSystem system = build_fdm_system(env, 50, series);
  const Eigen::VectorXcd start = fdm_starter(env, system, dr);

  // h = 2 m: depth 37 m lies halfway between nodes 18 (36 m) and 19 (38 m).
  const FieldGrid at_nodes = fdm_march(env, 50, series, start, 100.0, dr, {36.0, 38.0});
  const FieldGrid mid = fdm_march(env, 50, series, start, 100.0, dr, {37.0});
  REQUIRE(at_nodes.pressure.rows() == mid.pressure.rows());
  for (int i = 0; i < mid.pressure.rows(); ++i) {
    const Complex blend = 0.5 * (at_nodes.pressure(i, 0) + at_nodes.pressure(i, 1));
    CHECK(std::abs(mid.pressure(i, 0) - blend) <= 1e-14 * std::abs(blend));
  }

  CHECK_THROWS_AS(fdm_march(env, 50, series, start, 100.0, dr, {-1.0}), const DomainError&);
  CHECK_THROWS_AS(fdm_march(env, 50, series, start, 100.0, dr, {100.5}), const DomainError&);
}

TEST_CASE("march rejects inconsistent arguments and runaway growth") {
  const Environment env = shallow_env();
  const PadeSeries series = compute_pade_series(env.k0(), 5.0, 2);
  const FdmSystem system = build_fdm_system(env, 50, series);
  const Eigen::VectorXcd start = fdm_starter(env, system, 5.0);

  Eigen::VectorXcd wrong = start.head(50);
  CHECK_THROWS_AS(fdm_march(env, 50, series, wrong, 100.0, 5.0), const DimensionError&);
  CHECK_THROWS_AS(fdm_march(env, 50, series, start, 0.0, 5.0), const DomainError&);
  CHECK_THROWS_AS(fdm_march(env, 50, series, start, 100.0, -1.0), const DomainError&);

  // An amplifying series: alpha = 2, beta = 0 turns each step into
  // roughly (I + 2X), which grows without bound on this operator.
  PadeSeries bad;
  bad.n = 1;
  bad.sigma = Complex(1.0, 0.0);
  bad.alpha = {Complex(2.0, 0.0)};
  bad.beta = {Complex(0.0, 0.0)};
  bad.phase = Complex(1.0, 0.0);
  CHECK_THROWS_AS(fdm_march(env, 50, bad, start, 10000.0, 5.0), const InstabilityError&);
}
