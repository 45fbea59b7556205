#include "doctest.h"

#include <chebpe/chebyshev.hpp>
#include <chebpe/environment.hpp>
#include <chebpe/errors.hpp>

#include <cmath>
#include <complex>

using namespace chebpe;

namespace {

Environment shallow_test_env() {
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

}  // namespace

TEST_CASE("sound speed profiles evaluate correctly") {
  const SoundSpeedProfile iso = SoundSpeedProfile::isovelocity(1480.0);
  CHECK(iso.at(0.0) == 1480.0);
  CHECK(iso.at(1234.5) == 1480.0);
  CHECK_THROWS_AS(iso.at(-1.0), const DomainError&);

  // Munk channel: minimum exactly at the 1300 m axis, warmer above and below.
  const SoundSpeedProfile munk = SoundSpeedProfile::munk();
  CHECK(munk.at(1300.0) == doctest::Approx(1500.0).epsilon(1e-14));
  CHECK(munk.at(0.0) == doctest::Approx(1548.0601642832906).epsilon(1e-14));
  CHECK(munk.at(5000.0) == doctest::Approx(1551.4176904725316).epsilon(1e-14));
  CHECK(munk.at(1000.0) > munk.at(1300.0));
  CHECK(munk.at(2000.0) > munk.at(1300.0));
  CHECK_THROWS_AS(munk.at(-0.5), const DomainError&);

  // Table profiles interpolate linearly between breakpoints and refuse to
  // extrapolate.
  const SoundSpeedProfile table = SoundSpeedProfile::table_profile(
      {{0.0, 1560.0}, {100.0, 1530.0}, {200.0, 1525.0}});
  CHECK(table.at(0.0) == 1560.0);
  CHECK(table.at(200.0) == 1525.0);
  CHECK(table.at(50.0) == doctest::Approx(1545.0).epsilon(1e-14));
  CHECK(table.at(150.0) == doctest::Approx(1527.5).epsilon(1e-14));
  CHECK_THROWS_AS(table.at(-1.0), const DomainError&);
  CHECK_THROWS_AS(table.at(200.5), const DomainError&);
}

TEST_CASE("density profiles evaluate correctly") {
  const DensityProfile constant = DensityProfile::constant(1.03);
  CHECK(constant.at(0.0) == 1.03);
  CHECK(constant.at(500.0) == 1.03);

  const DensityProfile table =
      DensityProfile::table_profile({{0.0, 1.0}, {100.0, 1.5}});
  CHECK(table.at(50.0) == doctest::Approx(1.25).epsilon(1e-14));
  CHECK_THROWS_AS(table.at(101.0), const DomainError&);
}

TEST_CASE("environment derived quantities") {
  const Environment env = shallow_test_env();
  CHECK(env.omega() == doctest::Approx(2.0 * 3.14159265358979323846 * 20.0).epsilon(1e-15));
  CHECK(env.k0() == doctest::Approx(0.08377580409572782).epsilon(1e-15));
  CHECK(env.sound_speed_at(50.0) == 1500.0);
  CHECK_THROWS_AS(env.sound_speed_at(100.5), const DomainError&);
  CHECK_THROWS_AS(env.sound_speed_at(-0.1), const DomainError&);
  CHECK_NOTHROW(env.validate());
}

TEST_CASE("attenuation constant converts dB-per-wavelength to an imaginary index") {
  CHECK(attenuation_eta() == doctest::Approx(0.018323389971985694).epsilon(1e-15));
}

TEST_CASE("validation rejects inconsistent environments") {
  {
    Environment env = shallow_test_env();
    env.source_depth = 0.0;  // on the pressure-release surface
    CHECK_THROWS_AS(env.validate(), const DomainError&);
    env.source_depth = 100.0;  // on the bottom
    CHECK_THROWS_AS(env.validate(), const DomainError&);
    env.source_depth = 150.0;  // below the bottom
    CHECK_THROWS_AS(env.validate(), const DomainError&);
  }
  {
    Environment env = shallow_test_env();
    env.receiver_depth = -3.0;
    CHECK_THROWS_AS(env.validate(), const DomainError&);
  }
  {
    Environment env = shallow_test_env();
    env.freq = 0.0;
    CHECK_THROWS_AS(env.validate(), const DomainError&);
  }
  {
    Environment env = shallow_test_env();
    env.atten_beta = -0.5;
    CHECK_THROWS_AS(env.validate(), const DomainError&);
  }
  {
    Environment env = shallow_test_env();
    env.depth = 0.0;
    CHECK_THROWS_AS(env.validate(), const DomainError&);
  }
  {
    // Table must span [0, H] exactly.
    Environment env = shallow_test_env();
    env.ssp = SoundSpeedProfile::table_profile({{0.0, 1500.0}, {90.0, 1490.0}});
    CHECK_THROWS_AS(env.validate(), const DomainError&);
  }
  {
    // Breakpoints must be strictly increasing in depth.
    Environment env = shallow_test_env();
    env.ssp = SoundSpeedProfile::table_profile(
        {{0.0, 1500.0}, {60.0, 1490.0}, {60.0, 1480.0}, {100.0, 1470.0}});
    CHECK_THROWS_AS(env.validate(), const DomainError&);
  }
  {
    Environment env = shallow_test_env();
    env.density = DensityProfile::table_profile({{0.0, 1.0}, {100.0, -0.2}});
    CHECK_THROWS_AS(env.validate(), const DomainError&);
  }
}

TEST_CASE("depth mapping places CGL nodes from surface to bottom") {
  const CglGrid grid = cgl_points(8);
  const Eigen::VectorXd z = map_depth_to_cgl(100.0, grid);
  REQUIRE(z.size() == 9);
  CHECK(z[0] == 0.0);
  CHECK(z[8] == 100.0);
  CHECK(z[4] == doctest::Approx(50.0).epsilon(1e-15));
  for (int j = 1; j <= 8; ++j) CHECK(z[j] > z[j - 1]);
  // Consistent with the spectral coordinate x = 1 - 2 z / H.
  for (int j = 0; j <= 8; ++j) {
    CHECK(std::abs((1.0 - 2.0 * z[j] / 100.0) - grid.points[j]) <= 1e-15);
  }
  CHECK_THROWS_AS(map_depth_to_cgl(0.0, grid), const DomainError&);
  CHECK_THROWS_AS(map_depth_to_cgl(-5.0, grid), const DomainError&);
}

TEST_CASE("squared wavenumber spectrum: lossless isovelocity case is a constant") {
  Environment env = shallow_test_env();
  const CglGrid grid = cgl_points(16);
  const SpectrumVector k2 = wavenumber_profile(env, grid);
  REQUIRE(k2.size() == 17);
  const double expected = env.k0() * env.k0();
  CHECK(std::abs(k2[0] - expected) <= 1e-12 * expected);
  for (int k = 1; k <= 16; ++k) CHECK(std::abs(k2[k]) <= 1e-12 * expected);
}

TEST_CASE("squared wavenumber spectrum: attenuation adds a positive imaginary part") {
  Environment env = shallow_test_env();
  env.atten_beta = 0.5;
  const CglGrid grid = cgl_points(16);
  const SpectrumVector k2 = wavenumber_profile(env, grid);

  // Pointwise oracle: k^2(z) = ((1 + i*eta*beta) * omega / c)^2.
  const Eigen::VectorXd z = map_depth_to_cgl(env.depth, grid);
  const Eigen::VectorXcd vals = backward_transform(k2, grid);
  for (int j = 0; j <= 16; ++j) {
    const Complex k = Complex(1.0, attenuation_eta() * env.atten_beta) *
                      (env.omega() / env.sound_speed_at(z[j]));
    CHECK(std::abs(vals[j] - k * k) <= 1e-12 * std::norm(k));
    CHECK(vals[j].imag() > 0.0);
  }
}

TEST_CASE("squared wavenumber spectrum matches a tabulated profile pointwise") {
  Environment env = shallow_test_env();
  env.depth = 400.0;
  env.ssp = SoundSpeedProfile::table_profile({{0.0, 1560.0},
                                              {50.0, 1555.0},
                                              {100.0, 1530.0},
                                              {200.0, 1525.0},
                                              {250.0, 1520.0},
                                              {300.0, 1510.0},
                                              {350.0, 1505.0},
                                              {400.0, 1500.0}});
  const CglGrid grid = cgl_points(64);
  const Eigen::VectorXd z = map_depth_to_cgl(env.depth, grid);
  const Eigen::VectorXcd vals = backward_transform(wavenumber_profile(env, grid), grid);
  for (int j = 0; j <= 64; ++j) {
    const double c = env.sound_speed_at(z[j]);
    const double expected = (env.omega() / c) * (env.omega() / c);
    CHECK(std::abs(vals[j] - expected) <= 1e-12 * expected);
  }
}
