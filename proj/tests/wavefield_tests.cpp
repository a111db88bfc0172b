#include <doctest.h>

#include <cmath>
#include <random>
#include <tuple>

#include "support/oracles.hpp"
#include "swwave/verify.hpp"
#include "swwave/wavefield.hpp"

using namespace swwave;

TEST_CASE("surface elevation is the travelling cosine") {
  const WaveField field(0.0);
  CHECK(field.surface_elevation(0.0, 0.0) == 1.0);
  CHECK(std::abs(field.surface_elevation(0.25, 0.0)) < 1e-15);
  CHECK(field.surface_elevation(0.3, 0.7) == doctest::Approx(-0.80901699437494745).epsilon(1e-12));
}

TEST_CASE("velocity field") {
  SUBCASE("crest moves with unit speed and no vertical motion") {
    const WaveField field(0.0);
    const Velocity v = field.velocity(1.7, 0.5, 1.7);
    CHECK(v.u == 1.0);
    CHECK(v.v == 0.0);
  }
  SUBCASE("direct evaluation with an adverse current") {
    const WaveField field(-0.5);
    const Velocity v = field.velocity(0.25, 1.0, 0.0);
    CHECK(v.u == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(v.v == doctest::Approx(two_pi).epsilon(1e-15));
  }
  SUBCASE("no flow through the bed, any current") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> pick(-20.0, 20.0);
    for (int i = 0; i < 1000; ++i) {
      const WaveField field(pick(rng));
      CHECK(field.velocity(pick(rng), 0.0, pick(rng)).v == 0.0);
    }
  }
  SUBCASE("u does not depend on depth") {
    const WaveField field(0.7);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> pick(-5.0, 5.0);
    for (int i = 0; i < 1000; ++i) {
      const double x = pick(rng), t = pick(rng);
      CHECK(field.velocity(x, 0.1, t).u == field.velocity(x, 0.9, t).u);
    }
  }
}

TEST_CASE("pressure equals the surface elevation everywhere") {
  const WaveField field(1.3);
  CHECK(field.pressure(0.0, 0.0) == 1.0);
  CHECK(field.pressure(0.5, 0.0) == doctest::Approx(-1.0).epsilon(1e-15));
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> pick(-100.0, 100.0);
  for (int i = 0; i < 1000000; ++i) {
    const double x = pick(rng), t = pick(rng);
    REQUIRE(field.pressure(x, t) == field.surface_elevation(x, t));
  }
}

TEST_CASE("kinematic condition at the linearised surface") {
  const WaveField field(-0.5);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> pick(-10.0, 10.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = pick(rng), t = pick(rng);
    CHECK(std::abs(field.velocity(x, 1.0, t).v - field.surface_elevation_dt(x, t)) <= 1e-12);
  }
}

TEST_CASE("dimensional conversions") {
  const PhysicalScales scales = PhysicalScales::make(1.0, 10.0, 0.05, 9.8, 1000.0);

  SUBCASE("derived parameters") {
    CHECK(scales.amplitude_parameter() == doctest::Approx(0.05));
    CHECK(scales.shallowness_parameter() == doctest::Approx(0.1));
  }
  SUBCASE("time unit") {
    CHECK(dimensionalize(scales, Quantity::T, 1.0) ==
          doctest::Approx(3.1943828249996997).epsilon(1e-12));
  }
  SUBCASE("vertical length and surface amplitude scale linearly") {
    const PhysicalScales deep = PhysicalScales::make(2.0, 10.0, 0.05, 9.8, 1000.0);
    CHECK(dimensionalize(deep, Quantity::Z, 1.0) == 2.0);
    CHECK(dimensionalize(scales, Quantity::Eta, 1.0) == 0.05);
  }
  SUBCASE("pressure includes ambient and hydrostatic parts") {
    const double p = dimensionalize(scales, Quantity::P, 0.0, 0.5, 101325.0);
    CHECK(p == doctest::Approx(101325.0 + 1000.0 * 9.8 * 1.0 * 0.5));
  }
  SUBCASE("round trip over every quantity") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> pick(-3.0, 3.0);
    for (Quantity q : {Quantity::X, Quantity::Z, Quantity::T, Quantity::Eta, Quantity::U,
                       Quantity::V, Quantity::P}) {
      for (int i = 0; i < 100; ++i) {
        const double value = pick(rng), z = 0.25;
        const double there = dimensionalize(scales, q, value, z, 2000.0);
        CHECK(nondimensionalize(scales, q, there, z, 2000.0) ==
              doctest::Approx(value).epsilon(1e-12));
      }
    }
  }
  SUBCASE("unknown kind is rejected") {
    CHECK_THROWS_AS(dimensionalize(scales, static_cast<Quantity>(99), 1.0),
                    std::invalid_argument);
  }
  SUBCASE("invalid scales are rejected") {
    CHECK_THROWS_AS(PhysicalScales::make(-1.0, 10.0, 0.05, 9.8, 1000.0), std::invalid_argument);
    CHECK_THROWS_AS(PhysicalScales::make(1.0, 0.0, 0.05, 9.8, 1000.0), std::invalid_argument);
    CHECK_THROWS_AS(PhysicalScales::make(1.0, 10.0, -0.05, 9.8, 1000.0), std::invalid_argument);
  }
}

TEST_CASE("mass conservation holds to second order in the difference step") {
  const WaveField field(0.4);
  const std::tuple<double, double, double> points[] = {
      {0.1, 0.5, 0.0}, {0.37, 0.8, 1.2}, {-1.4, 0.2, 0.6}};
  for (const auto& [x, z, t] : points) {
    const double coarse = divergence_residual(field, x, z, t, 1e-4);
    const double fine = divergence_residual(field, x, z, t, 5e-5);
    if (coarse > 1e-12) CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.1));
  }
}

TEST_CASE("wave equation residual shrinks at second order") {
  const WaveField field(0.0);
  // Steps large enough that the second difference is far from roundoff.
  const std::pair<double, double> points[] = {{0.13, 0.41}, {0.77, -0.29}};
  for (const auto& [x, t] : points) {
    const double coarse = wave_equation_residual(field, x, t, 1e-3);
    const double fine = wave_equation_residual(field, x, t, 5e-4);
    CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.05));
  }
  CHECK(verify::wave_equation_order(20, 101) == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("mean of u over one wavelength is the current strength") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> pick(-4.0, 4.0);
  for (int i = 0; i < 100; ++i) {
    const double c0 = pick(rng), x = pick(rng), t = pick(rng);
    const WaveField field(c0);
    const double mean = oracles::integrate(
        x, x + 1.0, 4, [&](double s) { return field.velocity(s, 0.5, t).u; });
    CHECK(std::abs(mean - c0) <= 1e-12);
  }
}
