#pragma once

#include <vector>

#include "swlab/core.hpp"

// Unidirectional scalar models: simple-wave (Burgers) forms, the linear
// full-dispersion transport, the Whitham pair, the KdV/BBM family, and the
// Camassa-Holm-type extensions. All right-hand sides work on periodic grids
// with spectral derivatives and 2/3-rule dealiasing of nonlinear products.

namespace swlab {

struct ScalarModelSpec {
  ScalarModelKind kind = ScalarModelKind::BurgersZeta;
  double p = 0.0;              // KdV/BBM and Camassa-Holm family parameter
  bool include_eps_mu = true;  // keep the eps*mu right-hand side of the CH forms
  SimulationParams params;

  void validate() const;
  // field the model evolves (the other one is slaved via companion_field)
  ScalarFieldKind evolved_field() const;
};

struct ChCoefficients {
  double a, b, c, d;
};

// (a, b, c, d) = (p, p - 1/6, -(3/2)p - 1/6, -(9/2)p - 23/24)
ChCoefficients ch_coefficients(double p);

// Whether the coefficient set at this p can be rescaled to the classical
// integrable equation: needs b < 0, a != b, b = -2c, d = 2c. No p satisfies
// all four at once (b = -2c forces p = -1/4, d = 2c forces p = -5/12).
struct ChCompatibility {
  bool b_negative = false;
  bool a_ne_b = false;
  bool b_eq_minus_2c = false;
  bool d_eq_2c = false;

  bool all() const { return b_negative && a_ne_b && b_eq_minus_2c && d_eq_2c; }
};

ChCompatibility ch_compatibility(double p);

// Simple-wave transport: surface form -d_x u - 3*eps*u/(1+sqrt(1+eps*u)) d_x u,
// velocity form -d_x u - (3/2)*eps*u d_x u.
std::vector<double> rhs_burgers(const ScalarState& state, const ScalarModelSpec& spec,
                                const Grid1D& grid);

// The slaved second field of the chosen model (velocity for surface models,
// surface for velocity models). The (2/eps)(sqrt(1+eps*u)-1) relations switch
// to a three-term series when eps*max|u| < 1e-8.
std::vector<double> companion_field(const ScalarState& state, const ScalarModelSpec& spec,
                                    const Grid1D& grid);

// KdV/BBM family member p (p = 1/6 is KdV, p = 0 is BBM):
// (1 + (p - 1/6) mu d_xx) dt u + d_x u + mu p d_xxx u + (3/2) eps u d_x u = 0.
std::vector<double> rhs_kdv_bbm(const ScalarState& state, double p,
                                const SimulationParams& params, const Grid1D& grid);

// Whitham pair: full-dispersion transport c_ww(D) d_x u plus the same
// nonlinearity as the matching simple-wave form. Also handles the linear
// full-dispersion model (zero nonlinearity).
std::vector<double> rhs_whitham(const ScalarState& state, const ScalarModelSpec& spec,
                                const Grid1D& grid);

// Camassa-Holm family (velocity, surface, and expanded-surface forms), with
// the b d_xx dt term inverted inside the right-hand side:
//   dt u = (1 + b mu d_xx)^{-1} [ -d_x u - N(u) - mu a d_xxx u
//                                 + eps mu (c u d_xxx u + d d_x u d_xx u) ].
std::vector<double> rhs_camassa_holm(const ScalarState& state, const ScalarModelSpec& spec,
                                     const Grid1D& grid);

// Dispatch on spec.kind.
std::vector<double> rhs_scalar(const ScalarState& state, const ScalarModelSpec& spec,
                               const Grid1D& grid);

// One RK4 step of the chosen scalar model.
ScalarState step_scalar_rk4(const ScalarState& state, const ScalarModelSpec& spec,
                            const Grid1D& grid, double dt);

// R+- = 2(sqrt(h) - 1) +- eps*vbar and lambda+- = +-eps*vbar + sqrt(h) with
// h = 1 + eps*zeta (flat bottom; these are characteristic invariants of the
// hydrostatic system).
struct RiemannInvariants {
  std::vector<double> r_plus, r_minus, lambda_plus, lambda_minus;
};

RiemannInvariants riemann_invariants(const HydroState& state, const SimulationParams& params);

}  // namespace swlab
