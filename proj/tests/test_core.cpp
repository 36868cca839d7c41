#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "swlab/core.hpp"

using namespace swlab;

namespace {

template <typename F>
ErrorKind thrown_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Validation;
}

Grid1D grid16() { return Grid1D{16, 8.0, GridBoundary::Periodic}; }

}  // namespace

TEST_CASE("default parameters are admissible") {
  SimulationParams p;
  CHECK_NOTHROW(p.validate());
}

TEST_CASE("parameter validation rejects out-of-range values") {
  SimulationParams p;
  p.epsilon = -0.1;
  CHECK(thrown_kind([&] { p.validate(); }) == ErrorKind::Validation);
  p = {};
  p.mu = 0.0;
  CHECK(thrown_kind([&] { p.validate(); }) == ErrorKind::Validation);
  p = {};
  p.mu = 1.5;
  CHECK(thrown_kind([&] { p.validate(); }) == ErrorKind::Validation);
  p = {};
  p.beta = -1.0;
  CHECK(thrown_kind([&] { p.validate(); }) == ErrorKind::Validation);
  p = {};
  p.h_min = 0.0;
  CHECK(thrown_kind([&] { p.validate(); }) == ErrorKind::Validation);
  p = {};
  p.epsilon = std::nan("");
  CHECK(thrown_kind([&] { p.validate(); }) == ErrorKind::Validation);
}

TEST_CASE("grid geometry") {
  Grid1D g = grid16();
  CHECK_NOTHROW(g.validate());
  CHECK(g.dx() == doctest::Approx(0.5));
  auto x = g.cell_centers();
  REQUIRE(x.size() == 16);
  CHECK(x.front() == doctest::Approx(0.25));
  CHECK(x.back() == doctest::Approx(7.75));
  CHECK(x[1] - x[0] == doctest::Approx(g.dx()));
}

TEST_CASE("grid validation") {
  Grid1D g{7, 1.0, GridBoundary::Periodic};
  CHECK(thrown_kind([&] { g.validate(); }) == ErrorKind::Validation);
  g = {16, 0.0, GridBoundary::Periodic};
  CHECK(thrown_kind([&] { g.validate(); }) == ErrorKind::Validation);
}

TEST_CASE("bathymetry checks") {
  Grid1D g = grid16();
  Bathymetry flat = Bathymetry::flat(16);
  CHECK(flat.is_flat());
  CHECK_NOTHROW(flat.validate(g));

  Bathymetry bump = flat;
  bump.b[3] = 0.5;
  CHECK_FALSE(bump.is_flat());
  CHECK_NOTHROW(bump.validate(g));

  Bathymetry tall = flat;
  tall.b[0] = 1.5;
  CHECK(thrown_kind([&] { tall.validate(g); }) == ErrorKind::Validation);

  Bathymetry wrong{std::vector<double>(8, 0.0)};
  CHECK(thrown_kind([&] { wrong.validate(g); }) == ErrorKind::Validation);
}

TEST_CASE("water height and depth admissibility") {
  SimulationParams p;
  p.epsilon = 0.5;
  p.beta = 0.25;
  Bathymetry bathy = Bathymetry::flat(4);
  bathy.b = {0.0, 0.4, -0.4, 1.0};
  std::vector<double> zeta{0.0, 0.2, -0.2, 0.0};
  auto h = water_height(zeta, bathy, p);
  CHECK(h[0] == doctest::Approx(1.0));
  CHECK(h[1] == doctest::Approx(1.0 + 0.5 * 0.2 - 0.25 * 0.4));
  CHECK(h[2] == doctest::Approx(1.0 - 0.1 + 0.1));
  CHECK(h[3] == doctest::Approx(0.75));

  p.epsilon = 1.0;
  zeta[0] = -1.0;  // exactly dry
  CHECK(thrown_kind([&] { water_height(zeta, bathy, p); }) == ErrorKind::DepthViolation);
}

TEST_CASE("discharge round trip") {
  SimulationParams p;
  p.epsilon = 0.3;
  Grid1D g = grid16();
  Bathymetry bathy = Bathymetry::flat(16);
  HydroState s;
  s.zeta.assign(16, 0.0);
  s.vbar.assign(16, 0.0);
  for (int i = 0; i < 16; ++i) {
    s.zeta[i] = 0.4 * std::sin(2.0 * M_PI * i / 16.0);
    s.vbar[i] = 0.7 * std::cos(2.0 * M_PI * i / 16.0);
  }
  auto q = discharge_from_velocity(s, bathy, p);
  HydroState back = velocity_from_discharge(s.zeta, q, bathy, p);
  for (int i = 0; i < 16; ++i) {
    CHECK(back.vbar[i] == doctest::Approx(s.vbar[i]).epsilon(1e-14));
  }
}

TEST_CASE("state validation catches shape and sign problems") {
  Grid1D g = grid16();
  HydroState s;
  s.zeta.assign(16, 0.0);
  s.vbar.assign(15, 0.0);
  CHECK(thrown_kind([&] { s.validate(g); }) == ErrorKind::Validation);

  EnstrophyState e;
  e.flow.zeta.assign(16, 0.0);
  e.flow.vbar.assign(16, 0.0);
  e.phi.assign(16, 0.0);
  CHECK_NOTHROW(e.validate(g));
  e.phi[5] = -1e-3;
  CHECK(thrown_kind([&] { e.validate(g); }) == ErrorKind::NegativeEnstrophy);

  MultiLayerState m;
  m.zeta.assign(16, 0.0);
  m.fractions = {0.5, 0.6};
  m.vbar.assign(2, std::vector<double>(16, 0.0));
  CHECK(thrown_kind([&] { m.validate(g); }) == ErrorKind::FractionError);
  m.fractions = {0.5, 0.5};
  CHECK_NOTHROW(m.validate(g));

  SimulationParams p;
  p.epsilon = 1.0;
  ScalarState sc;
  sc.u.assign(16, -2.0);
  sc.field_kind = ScalarFieldKind::SurfaceElevation;
  CHECK(thrown_kind([&] { sc.validate(g, p); }) == ErrorKind::DepthViolation);
  sc.field_kind = ScalarFieldKind::Velocity;
  CHECK_NOTHROW(sc.validate(g, p));
}

TEST_CASE("names are stable identifiers") {
  CHECK(std::string(error_kind_name(ErrorKind::DepthViolation)) == "DepthViolation");
  CHECK(std::string(error_kind_name(ErrorKind::FractionError)) == "FractionError");
  CHECK(std::string(scalar_model_name(ScalarModelKind::KdvBbm)) == "kdvbbm");
  CHECK(std::string(scalar_model_name(ScalarModelKind::WhithamZeta)) == "whitham_zeta");
}
