#include "swlab/core.hpp"

#include <cmath>
#include <numeric>

namespace swlab {

namespace {

bool all_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

void require_size(const std::vector<double>& v, const Grid1D& grid, const char* what) {
  if (static_cast<int>(v.size()) != grid.n_cells) {
    fail(ErrorKind::Validation,
         std::string(what) + " has " + std::to_string(v.size()) + " entries, grid has " +
             std::to_string(grid.n_cells) + " cells");
  }
}

}  // namespace

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Validation: return "Validation";
    case ErrorKind::DepthViolation: return "DepthViolation";
    case ErrorKind::IllPosedMode: return "IllPosedMode";
    case ErrorKind::SolveFailure: return "SolveFailure";
    case ErrorKind::EigenFailure: return "EigenFailure";
    case ErrorKind::CflViolation: return "CflViolation";
    case ErrorKind::NegativeEnstrophy: return "NegativeEnstrophy";
    case ErrorKind::ConstraintDrift: return "ConstraintDrift";
    case ErrorKind::BoundaryUnsupported: return "BoundaryUnsupported";
    case ErrorKind::OutOfColumn: return "OutOfColumn";
    case ErrorKind::NotZeroMean: return "NotZeroMean";
    case ErrorKind::MismatchedRuns: return "MismatchedRuns";
    case ErrorKind::DegenerateFit: return "DegenerateFit";
    case ErrorKind::FractionError: return "FractionError";
    case ErrorKind::StabilityViolation: return "StabilityViolation";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

const char* scalar_model_name(ScalarModelKind kind) {
  switch (kind) {
    case ScalarModelKind::BurgersZeta: return "burgers_zeta";
    case ScalarModelKind::BurgersV: return "burgers_v";
    case ScalarModelKind::LinearFullDisp: return "linear_fulldisp";
    case ScalarModelKind::WhithamZeta: return "whitham_zeta";
    case ScalarModelKind::WhithamV: return "whitham_v";
    case ScalarModelKind::Kdv: return "kdv";
    case ScalarModelKind::Bbm: return "bbm";
    case ScalarModelKind::KdvBbm: return "kdvbbm";
    case ScalarModelKind::ChV: return "ch_v";
    case ScalarModelKind::ChZeta: return "ch_zeta";
    case ScalarModelKind::ChZetaExpanded: return "ch_zeta_expanded";
  }
  return "unknown";
}

void SimulationParams::validate() const {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    fail(ErrorKind::Validation, "epsilon must be finite and >= 0");
  }
  if (!(mu > 0.0 && mu <= 1.0)) {
    fail(ErrorKind::Validation, "mu must lie in (0, 1]");
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    fail(ErrorKind::Validation, "beta must be finite and >= 0");
  }
  if (!(h_min > 0.0)) {
    fail(ErrorKind::Validation, "h_min must be positive");
  }
}

void Grid1D::validate() const {
  if (n_cells < 8) {
    fail(ErrorKind::Validation, "grid needs at least 8 cells, got " + std::to_string(n_cells));
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    fail(ErrorKind::Validation, "grid length must be positive");
  }
}

std::vector<double> Grid1D::cell_centers() const {
  std::vector<double> x(n_cells);
  const double h = dx();
  for (int i = 0; i < n_cells; ++i) x[i] = (i + 0.5) * h;
  return x;
}

bool Bathymetry::is_flat() const {
  for (double v : b) {
    if (v != 0.0) return false;
  }
  return true;
}

void Bathymetry::validate(const Grid1D& grid) const {
  require_size(b, grid, "bathymetry");
  if (!all_finite(b)) fail(ErrorKind::Validation, "bathymetry contains non-finite values");
  for (double v : b) {
    if (std::abs(v) > 1.0 + 1e-14) {
      fail(ErrorKind::Validation, "bathymetry must be normalized to max |b| <= 1");
    }
  }
}

void HydroState::validate(const Grid1D& grid) const {
  require_size(zeta, grid, "zeta");
  require_size(vbar, grid, "vbar");
  if (!all_finite(zeta) || !all_finite(vbar)) {
    fail(ErrorKind::Validation, "state contains non-finite values");
  }
}

void EnstrophyState::validate(const Grid1D& grid) const {
  flow.validate(grid);
  require_size(phi, grid, "phi");
  for (double v : phi) {
    if (!std::isfinite(v)) fail(ErrorKind::Validation, "phi contains non-finite values");
    if (v < 0.0) fail(ErrorKind::NegativeEnstrophy, "enstrophy must be >= 0 everywhere");
  }
}

void MultiLayerState::validate(const Grid1D& grid) const {
  require_size(zeta, grid, "zeta");
  if (fractions.empty()) fail(ErrorKind::FractionError, "no layers");
  if (vbar.size() != fractions.size()) {
    fail(ErrorKind::Validation, "layer velocity count does not match fraction count");
  }
  double sum = 0.0;
  for (double l : fractions) {
    if (!(l > 0.0 && l <= 1.0)) {
      fail(ErrorKind::FractionError, "layer fractions must lie in (0, 1]");
    }
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    fail(ErrorKind::FractionError, "layer fractions must sum to 1 (got " + std::to_string(sum) + ")");
  }
  for (const auto& v : vbar) {
    require_size(v, grid, "layer velocity");
    if (!all_finite(v)) fail(ErrorKind::Validation, "layer velocity contains non-finite values");
  }
  if (!all_finite(zeta)) fail(ErrorKind::Validation, "zeta contains non-finite values");
}

void IKState::validate(const Grid1D& grid) const {
  require_size(zeta, grid, "zeta");
  require_size(phi0, grid, "phi0");
  require_size(phi1, grid, "phi1");
  if (!all_finite(zeta) || !all_finite(phi0) || !all_finite(phi1)) {
    fail(ErrorKind::Validation, "state contains non-finite values");
  }
}

void ScalarState::validate(const Grid1D& grid, const SimulationParams& params) const {
  require_size(u, grid, "u");
  if (!all_finite(u)) fail(ErrorKind::Validation, "u contains non-finite values");
  if (field_kind == ScalarFieldKind::SurfaceElevation) {
    for (double z : u) {
      if (1.0 + params.epsilon * z < params.h_min) {
        fail(ErrorKind::DepthViolation, "surface elevation drives the column below h_min");
      }
    }
  }
}

std::vector<double> water_height(const std::vector<double>& zeta, const Bathymetry& bathy,
                                 const SimulationParams& params) {
  params.validate();
  if (zeta.size() != bathy.b.size()) {
    fail(ErrorKind::Validation, "zeta and bathymetry sizes differ");
  }
  std::vector<double> h(zeta.size());
  for (std::size_t i = 0; i < zeta.size(); ++i) {
    h[i] = 1.0 + params.epsilon * zeta[i] - params.beta * bathy.b[i];
    if (!(h[i] >= params.h_min)) {
      fail(ErrorKind::DepthViolation,
           "water height " + std::to_string(h[i]) + " below h_min at cell " + std::to_string(i));
    }
  }
  return h;
}

std::vector<double> water_height(const HydroState& state, const Bathymetry& bathy,
                                 const SimulationParams& params) {
  return water_height(state.zeta, bathy, params);
}

std::vector<double> discharge_from_velocity(const HydroState& state, const Bathymetry& bathy,
                                            const SimulationParams& params) {
  std::vector<double> q = water_height(state, bathy, params);
  for (std::size_t i = 0; i < q.size(); ++i) q[i] *= state.vbar[i];
  return q;
}

HydroState velocity_from_discharge(const std::vector<double>& zeta,
                                   const std::vector<double>& discharge,
                                   const Bathymetry& bathy, const SimulationParams& params) {
  if (zeta.size() != discharge.size()) {
    fail(ErrorKind::Validation, "zeta and discharge sizes differ");
  }
  HydroState out;
  out.zeta = zeta;
  out.vbar.resize(zeta.size());
  const std::vector<double> h = water_height(zeta, bathy, params);
  for (std::size_t i = 0; i < zeta.size(); ++i) out.vbar[i] = discharge[i] / h[i];
  return out;
}

}  // namespace swlab
