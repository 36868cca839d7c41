#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "swlab/errors.hpp"

// Shared vocabulary for the one-dimensional wave models. Everything is in the
// usual dimensionless long-wave variables: the still water depth is 1, the
// free surface sits at eps*zeta, the bottom at -1 + beta*b, so the water
// column height is h = 1 + eps*zeta - beta*b.

namespace swlab {

struct SimulationParams {
  double epsilon = 0.0;  // surface amplitude parameter, >= 0
  double mu = 1.0;       // shallowness parameter, in (0, 1]
  double beta = 0.0;     // bottom amplitude parameter, >= 0
  double h_min = 1e-6;   // admissibility floor for the water height

  void validate() const;
};

enum class GridBoundary { Periodic, Wall };

// Uniform cell-centered grid on [0, length): x_i = (i + 1/2) * dx.
struct Grid1D {
  int n_cells = 0;
  double length = 0.0;
  GridBoundary boundary = GridBoundary::Periodic;

  void validate() const;
  double dx() const { return length / n_cells; }
  std::vector<double> cell_centers() const;
};

struct Bathymetry {
  std::vector<double> b;  // normalized bottom variation, max |b| <= 1

  static Bathymetry flat(int n_cells) { return Bathymetry{std::vector<double>(n_cells, 0.0)}; }
  bool is_flat() const;
  void validate(const Grid1D& grid) const;
};

// Surface elevation and depth-averaged horizontal velocity.
struct HydroState {
  std::vector<double> zeta;
  std::vector<double> vbar;
  double t = 0.0;

  void validate(const Grid1D& grid) const;
};

// HydroState plus the scalar enstrophy phi = E / h^3 of the self-interaction
// tensor of the fluctuating (shear) velocity.
struct EnstrophyState {
  HydroState flow;
  std::vector<double> phi;  // >= 0 everywhere

  void validate(const Grid1D& grid) const;
};

// One surface elevation shared by N layers of relative thickness
// fractions[j], each carrying its own depth-averaged velocity.
struct MultiLayerState {
  std::vector<double> zeta;
  std::vector<std::vector<double>> vbar;  // [layer][cell]
  std::vector<double> fractions;          // positive, sums to 1

  int layers() const { return static_cast<int>(fractions.size()); }
  void validate(const Grid1D& grid) const;
};

// Surface elevation plus the two velocity-potential coefficients of the
// rank-one vertical expansion (phi0 + mu * (z-dependent) * phi1).
struct IKState {
  std::vector<double> zeta;
  std::vector<double> phi0;
  std::vector<double> phi1;
  double t = 0.0;

  void validate(const Grid1D& grid) const;
};

enum class ScalarFieldKind { SurfaceElevation, Velocity };

// Single evolved field of the unidirectional scalar models.
struct ScalarState {
  std::vector<double> u;
  ScalarFieldKind field_kind = ScalarFieldKind::SurfaceElevation;
  double t = 0.0;

  void validate(const Grid1D& grid, const SimulationParams& params) const;
};

// Scalar model dialects (shared by the dispersion table and the steppers).
enum class ScalarModelKind {
  BurgersZeta,      // surface form of the simple-wave transport equation
  BurgersV,         // velocity form
  LinearFullDisp,   // linear transport with the exact phase-speed symbol
  WhithamZeta,      // full dispersion + surface nonlinearity
  WhithamV,         // full dispersion + velocity nonlinearity
  Kdv,
  Bbm,
  KdvBbm,           // one-parameter family, p in the dispersive split
  ChV,              // Camassa-Holm-type velocity equation, parameter p
  ChZeta,           // same dispersive terms, unexpanded surface nonlinearity
  ChZetaExpanded,   // cubic-in-eps expansion of the surface nonlinearity
};

const char* scalar_model_name(ScalarModelKind kind);

// h = 1 + eps*zeta - beta*b. Throws DepthViolation below params.h_min.
std::vector<double> water_height(const std::vector<double>& zeta,
                                 const Bathymetry& bathy,
                                 const SimulationParams& params);
std::vector<double> water_height(const HydroState& state, const Bathymetry& bathy,
                                 const SimulationParams& params);

// Q = h * vbar and its inverse.
std::vector<double> discharge_from_velocity(const HydroState& state,
                                            const Bathymetry& bathy,
                                            const SimulationParams& params);
HydroState velocity_from_discharge(const std::vector<double>& zeta,
                                   const std::vector<double>& discharge,
                                   const Bathymetry& bathy,
                                   const SimulationParams& params);

}  // namespace swlab
