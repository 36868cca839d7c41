#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "swlab/dispersion.hpp"
#include "swlab/errors.hpp"

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

// least-squares slope of log(err) against log(mu)
double loglog_slope(const std::vector<double>& mu, const std::vector<double>& err) {
  const int n = static_cast<int>(mu.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double x = std::log(mu[i]);
    const double y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double cww2(double k, double mu) {
  const double c = phase_speed_ww(k, mu);
  return c * c;
}

}  // namespace

TEST_CASE("exact phase speed: limits and monotonicity") {
  CHECK(phase_speed_ww(0.0, 0.5) == 1.0);
  // sqrt(tanh(25)/25) with tanh(25) ~ 1
  CHECK(phase_speed_ww(25.0, 1.0) == doctest::Approx(0.2).epsilon(1e-4));
  double prev = phase_speed_ww(0.0, 0.7);
  for (int i = 1; i <= 200; ++i) {
    const double k = i * 0.5;
    const double c = phase_speed_ww(k, 0.7);
    CHECK(c < prev);
    prev = c;
  }
}

TEST_CASE("exact phase speed: Taylor branch joins smoothly") {
  const double below = phase_speed_ww(0.9e-8, 1.0);
  const double above = phase_speed_ww(1.1e-8, 1.0);
  CHECK(std::abs(below - above) < 1e-12);
  CHECK(thrown_kind([] { phase_speed_ww(-1.0, 0.5); }) == ErrorKind::Validation);
  CHECK(thrown_kind([] { phase_speed_ww(1.0, 0.0); }) == ErrorKind::Validation);
  CHECK(thrown_kind([] { phase_speed_ww(1.0, 1.5); }) == ErrorKind::Validation);
}

TEST_CASE("abcd family squared speed") {
  CHECK(phase_speed_abcd(0.0, 0.5, 0.1, 0.1, 0.1, 1.0 / 30.0) == doctest::Approx(1.0));
  // standard choice at mu k^2 = 3
  CHECK(phase_speed_abcd(std::sqrt(3.0), 1.0, 0, 0, 0, 1.0 / 3.0) == doctest::Approx(0.5));
  for (double x : {0.1, 1.0, 7.0}) {
    const double k = std::sqrt(x);
    CHECK(phase_speed_abcd(k, 1.0, 0, 0, 0, 1.0 / 3.0) ==
          doctest::Approx(1.0 / (1.0 + x / 3.0)).epsilon(1e-14));
  }
  CHECK(thrown_kind([] { phase_speed_abcd(1.0, 1.0, 0.0, -1.0, 0.0, 4.0 / 3.0); }) ==
        ErrorKind::IllPosedMode);
  // negative product of numerator factors
  CHECK(thrown_kind([] { phase_speed_abcd(2.0, 1.0, 1.0, 0.0, 0.0, -2.0 / 3.0); }) ==
        ErrorKind::IllPosedMode);
}

TEST_CASE("two-potential model speed and its Pade identity") {
  CHECK(phase_speed_ik(0.0, 0.3) == doctest::Approx(1.0));
  CHECK(phase_speed_ik(1.0, 1.0) == doctest::Approx(16.0 / 21.0).epsilon(1e-15));
  CHECK(pade22_cww2(0.0) == doctest::Approx(1.0));
  for (double x : {0.1, 1.0, 10.0, 50.0, 100.0}) {
    const double k = std::sqrt(x);
    CHECK(std::abs(pade22_cww2(x) - phase_speed_ik(k, 1.0)) < 1e-12);
  }
}

TEST_CASE("Pade approximant beats the Taylor truncation order") {
  // fourth-order touch at 0: difference to tanh ratio is O(x^3)
  std::vector<double> xs{1e-1, 1e-2, 1e-3};
  std::vector<double> errs;
  for (double x : xs) errs.push_back(std::abs(pade22_cww2(x) - cww2(std::sqrt(x), 1.0)));
  CHECK(loglog_slope(xs, errs) > 2.8);
}

TEST_CASE("layer matrix entries") {
  auto T1 = build_T_matrix({1.0});
  REQUIRE(T1.size() == 1);
  CHECK(T1[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  const double l1 = 0.3, l2 = 0.7;
  auto T = build_T_matrix({l1, l2});
  REQUIRE(T.size() == 4);
  CHECK(T[0] == doctest::Approx(l1 * l1 * l1 / 3.0 + l1 * l1 * l2).epsilon(1e-15));
  CHECK(T[1] == doctest::Approx(0.5 * l1 * l2 * l2).epsilon(1e-15));
  CHECK(T[2] == doctest::Approx(T[1]).epsilon(1e-15));
  CHECK(T[3] == doctest::Approx(l2 * l2 * l2 / 3.0).epsilon(1e-15));

  CHECK(thrown_kind([] { build_T_matrix({0.5, 0.6}); }) == ErrorKind::FractionError);
  CHECK(thrown_kind([] { build_T_matrix({1.5, -0.5}); }) == ErrorKind::FractionError);
  CHECK(thrown_kind([] { build_T_matrix({}); }) == ErrorKind::FractionError);
}

TEST_CASE("layer matrix is positive semidefinite for uniform fractions") {
  for (int n : {2, 4, 8}) {
    std::vector<double> l(n, 1.0 / n);
    auto T = build_T_matrix(l);
    // quadratic form on a few deterministic vectors
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> x(n);
      for (int i = 0; i < n; ++i) x[i] = std::sin(1.7 * (trial + 1) * (i + 1));
      double q = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q += x[i] * T[static_cast<std::size_t>(i) * n + j] * x[j];
      CHECK(q >= -1e-14);
    }
  }
}

TEST_CASE("layered branch speeds") {
  auto r1 = phase_speed_multilayer(2.0, 1.0, {1.0});
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == doctest::Approx(1.0 / (1.0 + 4.0 / 3.0)).epsilon(1e-14));

  auto r0 = phase_speed_multilayer(0.0, 0.5, {0.5, 0.5});
  CHECK(r0[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r0[1] == doctest::Approx(0.0));

  // hand-solved 2x2 resolvent at sqrt(mu)k = 2, uniform halves
  auto r2 = phase_speed_multilayer(2.0, 1.0, {0.5, 0.5});
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == doctest::Approx(48.0 / 103.0).epsilon(1e-13));
  CHECK(r2[1] == doctest::Approx(0.0));
}

TEST_CASE("layered fastest branch approaches the exact relation as N grows") {
  const double k = 2.0, mu = 1.0;  // sqrt(mu) k = 2
  const double target = cww2(k, mu);
  double prev_err = 1e300;
  for (int n : {1, 2, 4}) {
    std::vector<double> l(n, 1.0 / n);
    const double err = std::abs(phase_speed_multilayer(k, mu, l)[0] - target);
    CHECK(err < prev_err);
    prev_err = err;
  }
}

TEST_CASE("scalar model speeds") {
  const double mu = 1.0;
  CHECK(phase_speed_scalar(DispersionSpec::kdv(), std::sqrt(6.0), mu) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(phase_speed_scalar(DispersionSpec::bbm(), 1.0, mu) ==
        doctest::Approx(1.0 / (1.0 + 1.0 / 6.0)).epsilon(1e-14));
  for (double k : {0.0, 0.5, 2.0, 5.0}) {
    CHECK(phase_speed_scalar(DispersionSpec::kdvbbm(1.0 / 6.0), k, mu) ==
          doctest::Approx(phase_speed_scalar(DispersionSpec::kdv(), k, mu)).epsilon(1e-14));
    CHECK(phase_speed_scalar(DispersionSpec::whitham(), k, mu) ==
          doctest::Approx(phase_speed_ww(k, mu)));
  }
  CHECK(thrown_kind([] { phase_speed_scalar(DispersionSpec::kdvbbm(0.3), 1.0, 1.0); }) ==
        ErrorKind::Validation);
  CHECK(thrown_kind([] { phase_speed_scalar(DispersionSpec::nsw(), 1.0, 1.0); }) ==
        ErrorKind::Validation);
}

TEST_CASE("second-order members close the gap at second order in mu") {
  const double k = 1.0;
  const std::vector<double> mus{1e-1, 1e-2, 1e-3, 1e-4};
  auto slope_for = [&](auto&& c2_of) {
    std::vector<double> errs;
    for (double mu : mus) errs.push_back(std::abs(c2_of(mu) - cww2(k, mu)));
    return loglog_slope(mus, errs);
  };
  CHECK(slope_for([&](double mu) { return phase_speed_abcd(k, mu, 0, 0, 0, 1.0 / 3.0); }) >= 1.9);
  CHECK(slope_for([&](double mu) { return phase_speed_ik(k, mu); }) >= 1.9);
  CHECK(slope_for([&](double mu) {
          const double c = phase_speed_scalar(DispersionSpec::kdv(), k, mu);
          return c * c;
        }) >= 1.9);
  CHECK(slope_for([&](double mu) {
          const double c = phase_speed_scalar(DispersionSpec::bbm(), k, mu);
          return c * c;
        }) >= 1.9);
  // hydrostatic model only reaches first order
  const double nsw_slope = slope_for([&](double) { return 1.0; });
  CHECK(nsw_slope >= 0.9);
  CHECK(nsw_slope < 1.5);
}

TEST_CASE("spec dispatch and validation") {
  CHECK(phase_speed(DispersionSpec::nsw(), 3.0, 0.5) == 1.0);
  CHECK(phase_speed(DispersionSpec::sgn(), 2.0, 0.25) ==
        doctest::Approx(std::sqrt(phase_speed_abcd(2.0, 0.25, 0, 0, 0, 1.0 / 3.0))));
  CHECK(phase_speed(DispersionSpec::water_waves(), 2.0, 0.25) ==
        doctest::Approx(phase_speed_ww(2.0, 0.25)));
  CHECK(phase_speed(DispersionSpec::multilayer({0.5, 0.5}), 2.0, 1.0) ==
        doctest::Approx(std::sqrt(48.0 / 103.0)));
  DispersionSpec bad = DispersionSpec::abcd(0.1, 0.1, 0.1, 0.1);
  CHECK(thrown_kind([&] { phase_speed(bad, 1.0, 0.5); }) == ErrorKind::Validation);
}
