#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "swlab/core.hpp"
#include "swlab/fft.hpp"

// Discrete derivative and elliptic machinery. Periodic grids use Fourier
// collocation; Wall grids use second-order centered differences with
// reflection ghosts and banded direct solves.

namespace swlab {

enum class MultiplierKind {
  Cww,              // exact linear phase-speed symbol c(k)
  CwwInverse,       // 1 / c(k)
  Derivative,       // (ik)^order
  HelmholtzInverse, // 1 / (1 + gamma k^2)
  Custom,           // caller-supplied real symbol per mode
};

struct MultiplierSymbol {
  MultiplierKind kind = MultiplierKind::Derivative;
  int order = 1;                // Derivative only
  double gamma = 0.0;           // HelmholtzInverse only, >= 0
  std::vector<double> custom;   // Custom only, one value per mode (n/2+1)

  static MultiplierSymbol cww() { return {MultiplierKind::Cww, 0, 0.0, {}}; }
  static MultiplierSymbol cww_inverse() { return {MultiplierKind::CwwInverse, 0, 0.0, {}}; }
  static MultiplierSymbol derivative(int order) { return {MultiplierKind::Derivative, order, 0.0, {}}; }
  static MultiplierSymbol helmholtz_inverse(double gamma) {
    return {MultiplierKind::HelmholtzInverse, 0, gamma, {}};
  }
  static MultiplierSymbol custom_symbol(std::vector<double> values) {
    return {MultiplierKind::Custom, 0, 0.0, std::move(values)};
  }
};

// Applies a Fourier multiplier on a periodic grid. Real input gives real
// output (symbols are even in k; odd derivative orders use the imaginary
// factor and zero the Nyquist mode).
std::vector<double> apply_multiplier(const std::vector<double>& u, const MultiplierSymbol& symbol,
                                     const Grid1D& grid, const SimulationParams& params);

// Solves (1 - gamma * d_xx) u = rhs, gamma >= 0. Periodic: Fourier division.
// Wall: tridiagonal solve with homogeneous Neumann ends.
std::vector<double> solve_helmholtz(const std::vector<double>& rhs, double gamma,
                                    const Grid1D& grid);

// Zeroes the top third of the spectrum (2/3-rule dealiasing for quadratic
// and cubic products formed pointwise on the grid).
void dealias_23(std::vector<double>& u, const spectral::Workspace& ws);

// The dispersive momentum operator (1 + mu*T) of the fully nonlinear
// shallow-water family, where
//   T v = -(1/(3h)) d_x(h^3 d_x v)
//         + beta/(2h) [d_x(h^2 b_x v) - h^2 b_x d_x v]
//         + beta^2 b_x^2 v.
// h*(1+mu*T) is symmetric positive definite, which is what both solve paths
// exploit (PCG with a constant-coefficient spectral preconditioner on
// periodic grids, a banded direct factorization on wall grids).
class SgnOperator {
 public:
  SgnOperator(std::vector<double> h, const Bathymetry& bathy, const SimulationParams& params,
              const Grid1D& grid);

  std::vector<double> apply(const std::vector<double>& v) const;
  // Solves (1 + mu*T) u = f to relative residual <= 1e-10 (throws SolveFailure).
  std::vector<double> solve(const std::vector<double>& f) const;

  const std::vector<double>& h() const { return h_; }

 private:
  std::vector<double> apply_weighted(const std::vector<double>& v) const;  // h*(1+mu*T) v
  std::vector<double> precondition(const std::vector<double>& r) const;

  Grid1D grid_;
  SimulationParams params_;
  std::vector<double> h_, h3_, bx_, h2bx_;
  double mean_h_ = 1.0;
  std::shared_ptr<spectral::Workspace> ws_;  // periodic path
  std::vector<double> k_, pre_;              // wavenumbers, preconditioner symbol
  // wall path: tridiagonal h*(1+mu*T), raw bands plus LU factors
  std::vector<double> raw_dl_, raw_d_, raw_du_;
  std::vector<double> band_dl_, band_d_, band_du_, band_du2_;
  std::vector<int> band_ipiv_;
};

SgnOperator assemble_sgn_operator(const std::vector<double>& h, const Bathymetry& bathy,
                                  const SimulationParams& params, const Grid1D& grid);

// Same operator built on the still-water column h_b = 1 - beta*b (the
// weakly-nonlinear variant keeps the dispersion frozen at the rest state).
SgnOperator assemble_peregrine_operator(const Bathymetry& bathy, const SimulationParams& params,
                                        const Grid1D& grid);

// Coupled solve of the two-potential velocity system
//   [ 1          mu*h^2          ] [dt_phi0]   [rhs0]
//   [ (1/2)D2    1+(mu/10)h^2 D2 ] [dt_phi1] = [rhs1]
// on a periodic grid (D2 = spectral second derivative). Solved as one block
// system (BiCGSTAB with a constant-coefficient per-mode preconditioner,
// dense LU fallback); relative residual <= 1e-9 or SolveFailure.
void solve_ik_block(const std::vector<double>& h, const SimulationParams& params,
                    const Grid1D& grid, const std::vector<double>& rhs0,
                    const std::vector<double>& rhs1, std::vector<double>& dt_phi0,
                    std::vector<double>& dt_phi1);

}  // namespace swlab
