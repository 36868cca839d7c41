#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "swlab/errors.hpp"

namespace swlab {

// Classical four-stage Runge-Kutta step on a flat state vector. The
// right-hand side is called as f(y, t). Throws StabilityViolation if the
// update leaves the finite range.
template <typename Rhs>
std::vector<double> rk4_step(const std::vector<double>& y, double t, double dt, Rhs&& f) {
  if (!(dt > 0.0) || !std::isfinite(dt)) fail(ErrorKind::Validation, "dt must be positive");
  const std::size_t n = y.size();
  std::vector<double> k1 = f(y, t);
  std::vector<double> stage(n);
  for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + 0.5 * dt * k1[i];
  std::vector<double> k2 = f(stage, t + 0.5 * dt);
  for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + 0.5 * dt * k2[i];
  std::vector<double> k3 = f(stage, t + 0.5 * dt);
  for (std::size_t i = 0; i < n; ++i) stage[i] = y[i] + dt * k3[i];
  std::vector<double> k4 = f(stage, t + dt);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = y[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    if (!std::isfinite(out[i]))
      fail(ErrorKind::StabilityViolation, "time step produced a non-finite value");
  }
  return out;
}

}  // namespace swlab
