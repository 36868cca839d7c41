#include "swlab/models_scalar.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "swlab/dispersion.hpp"
#include "swlab/errors.hpp"
#include "swlab/fft.hpp"
#include "swlab/operators.hpp"
#include "swlab/timestep.hpp"

namespace swlab {

namespace {

using cplx = std::complex<double>;

void require_periodic(const Grid1D& grid) {
  if (grid.boundary != GridBoundary::Periodic)
    fail(ErrorKind::BoundaryUnsupported, "scalar models need a periodic grid");
}

// spectral scratchpad bound to the caller's thread cache
class ModeKit {
 public:
  explicit ModeKit(const Grid1D& grid)
      : ws_(spectral::thread_workspace(grid.n_cells)), k_(spectral::wavenumbers(grid)) {}

  int n() const { return ws_.n(); }

  // hat *= factor(k), real even symbol
  template <typename F>
  std::vector<double> even_scale(const std::vector<double>& u, F&& factor) const {
    std::vector<cplx> hat(ws_.n_modes());
    ws_.forward(u.data(), hat.data());
    for (int m = 0; m < ws_.n_modes(); ++m) hat[m] *= factor(k_[m]);
    std::vector<double> out(ws_.n());
    ws_.inverse(hat.data(), out.data());
    return out;
  }

  // hat *= i * factor(k), imaginary odd symbol, Nyquist dropped
  template <typename F>
  std::vector<double> odd_scale(const std::vector<double>& u, F&& factor) const {
    std::vector<cplx> hat(ws_.n_modes());
    ws_.forward(u.data(), hat.data());
    for (int m = 0; m < ws_.n_modes(); ++m) hat[m] *= cplx(0.0, factor(k_[m]));
    if (ws_.n() % 2 == 0) hat[ws_.n_modes() - 1] = 0.0;
    std::vector<double> out(ws_.n());
    ws_.inverse(hat.data(), out.data());
    return out;
  }

  std::vector<double> derivative(const std::vector<double>& u, int order) const {
    switch (order) {
      case 1: return odd_scale(u, [](double k) { return k; });
      case 2: return even_scale(u, [](double k) { return -k * k; });
      case 3: return odd_scale(u, [](double k) { return -k * k * k; });
      default: fail(ErrorKind::Validation, "unsupported derivative order");
    }
  }

  void dealias(std::vector<double>& u) const { dealias_23(u, ws_); }

 private:
  spectral::Workspace& ws_;
  std::vector<double> k_;
};

// 3*eps*u / (1 + sqrt(1+eps*u)), the unexpanded surface nonlinearity factor
std::vector<double> surface_ratio(const std::vector<double>& u, double eps) {
  std::vector<double> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double radicand = 1.0 + eps * u[i];
    if (!(radicand > 0.0))
      fail(ErrorKind::DepthViolation,
           "surface nonlinearity radicand 1+eps*u is not positive at cell " + std::to_string(i));
    out[i] = 3.0 * eps * u[i] / (1.0 + std::sqrt(radicand));
  }
  return out;
}

double max_abs(const std::vector<double>& u) {
  double m = 0.0;
  for (double v : u) m = std::max(m, std::abs(v));
  return m;
}

// (2/eps)(sqrt(1+eps*u) - 1); series u - eps u^2/4 + eps^2 u^3/8 near eps = 0,
// otherwise the rationalized form 2u/(sqrt(1+eps*u)+1) which never cancels
std::vector<double> sqrt_companion(const std::vector<double>& u, double eps) {
  std::vector<double> out(u.size());
  if (eps * max_abs(u) < 1e-8) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double z = u[i];
      out[i] = z - eps * z * z / 4.0 + eps * eps * z * z * z / 8.0;
    }
    return out;
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double radicand = 1.0 + eps * u[i];
    if (!(radicand > 0.0))
      fail(ErrorKind::DepthViolation,
           "companion radicand 1+eps*u is not positive at cell " + std::to_string(i));
    out[i] = 2.0 * u[i] / (std::sqrt(radicand) + 1.0);
  }
  return out;
}

// (2/eps)(sqrt(1+eps*u) - 1 - eps*u/2), the quadratic remainder of the above;
// series -eps u^2/4 + eps^2 u^3/8, otherwise -eps u^2/(sqrt(1+eps*u)+1)^2
std::vector<double> sqrt_companion_remainder(const std::vector<double>& u, double eps) {
  std::vector<double> out(u.size());
  if (eps * max_abs(u) < 1e-8) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      const double z = u[i];
      out[i] = -eps * z * z / 4.0 + eps * eps * z * z * z / 8.0;
    }
    return out;
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double radicand = 1.0 + eps * u[i];
    if (!(radicand > 0.0))
      fail(ErrorKind::DepthViolation,
           "companion radicand 1+eps*u is not positive at cell " + std::to_string(i));
    const double root1 = std::sqrt(radicand) + 1.0;
    out[i] = -eps * u[i] * u[i] / (root1 * root1);
  }
  return out;
}

enum class FamilyNonlin { ThreeHalves, Ratio, Expanded };

// shared core of the KdV/BBM and Camassa-Holm families:
// (1 + b mu d_xx) dt u = -d_x u - N(u) - mu a d_xxx u
//                        + eps mu (c u d_xxx u + d d_x u d_xx u)
std::vector<double> family_rhs(const std::vector<double>& u, double p, bool include_eps_mu,
                               FamilyNonlin nonlin, const SimulationParams& params,
                               const Grid1D& grid) {
  const ModeKit kit(grid);
  const ChCoefficients co = ch_coefficients(p);
  const double eps = params.epsilon;
  const double mu = params.mu;
  const int n = grid.n_cells;

  const std::vector<double> du = kit.derivative(u, 1);
  const std::vector<double> d3u = kit.derivative(u, 3);

  std::vector<double> rhs(n);
  for (int i = 0; i < n; ++i) rhs[i] = -du[i] - mu * co.a * d3u[i];

  std::vector<double> nl(n);
  switch (nonlin) {
    case FamilyNonlin::ThreeHalves:
      for (int i = 0; i < n; ++i) nl[i] = 1.5 * eps * u[i] * du[i];
      break;
    case FamilyNonlin::Ratio: {
      const std::vector<double> ratio = surface_ratio(u, eps);
      for (int i = 0; i < n; ++i) nl[i] = ratio[i] * du[i];
      break;
    }
    case FamilyNonlin::Expanded:
      for (int i = 0; i < n; ++i) {
        const double z = u[i];
        const double factor = 1.5 * eps * z - 0.375 * eps * eps * z * z +
                              0.1875 * eps * eps * eps * z * z * z;
        nl[i] = factor * du[i];
      }
      break;
  }
  kit.dealias(nl);
  for (int i = 0; i < n; ++i) rhs[i] -= nl[i];

  if (include_eps_mu && eps != 0.0) {
    const std::vector<double> d2u = kit.derivative(u, 2);
    std::vector<double> q(n);
    for (int i = 0; i < n; ++i) q[i] = co.c * u[i] * d3u[i] + co.d * du[i] * d2u[i];
    kit.dealias(q);
    for (int i = 0; i < n; ++i) rhs[i] += eps * mu * q[i];
  }

  // invert (1 + b mu d_xx): symbol 1 - b mu k^2 = 1 + (1/6 - p) mu k^2
  const double gamma = -co.b * mu;
  if (gamma == 0.0) return rhs;
  return kit.even_scale(rhs, [&](double k) {
    const double symbol = 1.0 + gamma * k * k;
    if (!(symbol > 0.0))
      fail(ErrorKind::IllPosedMode,
           "dispersive factor 1+(1/6-p)*mu*k^2 vanishes at k = " + std::to_string(k));
    return 1.0 / symbol;
  });
}

void check_state(const ScalarState& state, const ScalarModelSpec& spec, const Grid1D& grid) {
  grid.validate();
  require_periodic(grid);
  spec.validate();
  state.validate(grid, spec.params);
  if (state.field_kind != spec.evolved_field())
    fail(ErrorKind::Validation, std::string("model ") + scalar_model_name(spec.kind) +
                                    " evolves a different field kind than the supplied state");
}

}  // namespace

void ScalarModelSpec::validate() const {
  params.validate();
  if (!std::isfinite(p)) fail(ErrorKind::Validation, "family parameter p must be finite");
}

ScalarFieldKind ScalarModelSpec::evolved_field() const {
  switch (kind) {
    case ScalarModelKind::BurgersV:
    case ScalarModelKind::WhithamV:
    case ScalarModelKind::ChV:
      return ScalarFieldKind::Velocity;
    default:
      return ScalarFieldKind::SurfaceElevation;
  }
}

ChCoefficients ch_coefficients(double p) {
  return ChCoefficients{p, p - 1.0 / 6.0, -1.5 * p - 1.0 / 6.0, -4.5 * p - 23.0 / 24.0};
}

ChCompatibility ch_compatibility(double p) {
  const ChCoefficients co = ch_coefficients(p);
  ChCompatibility out;
  out.b_negative = co.b < 0.0;
  out.a_ne_b = std::abs(co.a - co.b) > 1e-12;
  out.b_eq_minus_2c = std::abs(co.b + 2.0 * co.c) < 1e-12;
  out.d_eq_2c = std::abs(co.d - 2.0 * co.c) < 1e-12;
  return out;
}

std::vector<double> rhs_burgers(const ScalarState& state, const ScalarModelSpec& spec,
                                const Grid1D& grid) {
  check_state(state, spec, grid);
  const ModeKit kit(grid);
  const int n = grid.n_cells;
  const double eps = spec.params.epsilon;
  const std::vector<double> du = kit.derivative(state.u, 1);
  std::vector<double> nl(n);
  if (spec.kind == ScalarModelKind::BurgersZeta) {
    const std::vector<double> ratio = surface_ratio(state.u, eps);
    for (int i = 0; i < n; ++i) nl[i] = ratio[i] * du[i];
  } else if (spec.kind == ScalarModelKind::BurgersV) {
    for (int i = 0; i < n; ++i) nl[i] = 1.5 * eps * state.u[i] * du[i];
  } else {
    fail(ErrorKind::Validation, "rhs_burgers expects a simple-wave model");
  }
  kit.dealias(nl);
  std::vector<double> rhs(n);
  for (int i = 0; i < n; ++i) rhs[i] = -du[i] - nl[i];
  return rhs;
}

std::vector<double> companion_field(const ScalarState& state, const ScalarModelSpec& spec,
                                    const Grid1D& grid) {
  check_state(state, spec, grid);
  const ModeKit kit(grid);
  const double eps = spec.params.epsilon;
  const double mu = spec.params.mu;
  const int n = grid.n_cells;
  switch (spec.kind) {
    case ScalarModelKind::BurgersZeta:
      return sqrt_companion(state.u, eps);
    case ScalarModelKind::BurgersV: {
      std::vector<double> zeta(n);
      for (int i = 0; i < n; ++i) zeta[i] = state.u[i] + 0.25 * eps * state.u[i] * state.u[i];
      return zeta;
    }
    case ScalarModelKind::LinearFullDisp:
      return kit.even_scale(state.u, [&](double k) { return phase_speed_ww(k, mu); });
    case ScalarModelKind::WhithamZeta: {
      std::vector<double> v = kit.even_scale(state.u, [&](double k) { return phase_speed_ww(k, mu); });
      const std::vector<double> rem = sqrt_companion_remainder(state.u, eps);
      for (int i = 0; i < n; ++i) v[i] += rem[i];
      return v;
    }
    case ScalarModelKind::WhithamV: {
      std::vector<double> zeta =
          kit.even_scale(state.u, [&](double k) { return 1.0 / phase_speed_ww(k, mu); });
      for (int i = 0; i < n; ++i) zeta[i] += 0.25 * eps * state.u[i] * state.u[i];
      return zeta;
    }
    default:
      fail(ErrorKind::Unsupported, std::string("no companion relation for ") +
                                       scalar_model_name(spec.kind));
  }
}

std::vector<double> rhs_kdv_bbm(const ScalarState& state, double p,
                                const SimulationParams& params, const Grid1D& grid) {
  ScalarModelSpec spec;
  spec.kind = ScalarModelKind::KdvBbm;
  spec.p = p;
  spec.params = params;
  check_state(state, spec, grid);
  return family_rhs(state.u, p, false, FamilyNonlin::ThreeHalves, params, grid);
}

std::vector<double> rhs_whitham(const ScalarState& state, const ScalarModelSpec& spec,
                                const Grid1D& grid) {
  check_state(state, spec, grid);
  const ModeKit kit(grid);
  const int n = grid.n_cells;
  const double eps = spec.params.epsilon;
  const double mu = spec.params.mu;
  // c_ww(D) d_x u in one pass
  std::vector<double> transport =
      kit.odd_scale(state.u, [&](double k) { return k * phase_speed_ww(k, mu); });
  std::vector<double> rhs(n);
  if (spec.kind == ScalarModelKind::LinearFullDisp) {
    for (int i = 0; i < n; ++i) rhs[i] = -transport[i];
    return rhs;
  }
  const std::vector<double> du = kit.derivative(state.u, 1);
  std::vector<double> nl(n);
  if (spec.kind == ScalarModelKind::WhithamZeta) {
    const std::vector<double> ratio = surface_ratio(state.u, eps);
    for (int i = 0; i < n; ++i) nl[i] = ratio[i] * du[i];
  } else if (spec.kind == ScalarModelKind::WhithamV) {
    for (int i = 0; i < n; ++i) nl[i] = 1.5 * eps * state.u[i] * du[i];
  } else {
    fail(ErrorKind::Validation, "rhs_whitham expects a full-dispersion model");
  }
  kit.dealias(nl);
  for (int i = 0; i < n; ++i) rhs[i] = -transport[i] - nl[i];
  return rhs;
}

std::vector<double> rhs_camassa_holm(const ScalarState& state, const ScalarModelSpec& spec,
                                     const Grid1D& grid) {
  check_state(state, spec, grid);
  FamilyNonlin nonlin;
  switch (spec.kind) {
    case ScalarModelKind::ChV: nonlin = FamilyNonlin::ThreeHalves; break;
    case ScalarModelKind::ChZeta: nonlin = FamilyNonlin::Ratio; break;
    case ScalarModelKind::ChZetaExpanded: nonlin = FamilyNonlin::Expanded; break;
    default:
      fail(ErrorKind::Validation, "rhs_camassa_holm expects a Camassa-Holm form");
  }
  return family_rhs(state.u, spec.p, spec.include_eps_mu, nonlin, spec.params, grid);
}

std::vector<double> rhs_scalar(const ScalarState& state, const ScalarModelSpec& spec,
                               const Grid1D& grid) {
  switch (spec.kind) {
    case ScalarModelKind::BurgersZeta:
    case ScalarModelKind::BurgersV:
      return rhs_burgers(state, spec, grid);
    case ScalarModelKind::LinearFullDisp:
    case ScalarModelKind::WhithamZeta:
    case ScalarModelKind::WhithamV:
      return rhs_whitham(state, spec, grid);
    case ScalarModelKind::Kdv:
      return rhs_kdv_bbm(state, 1.0 / 6.0, spec.params, grid);
    case ScalarModelKind::Bbm:
      return rhs_kdv_bbm(state, 0.0, spec.params, grid);
    case ScalarModelKind::KdvBbm:
      return rhs_kdv_bbm(state, spec.p, spec.params, grid);
    case ScalarModelKind::ChV:
    case ScalarModelKind::ChZeta:
    case ScalarModelKind::ChZetaExpanded:
      return rhs_camassa_holm(state, spec, grid);
  }
  fail(ErrorKind::Validation, "unhandled scalar model kind");
}

ScalarState step_scalar_rk4(const ScalarState& state, const ScalarModelSpec& spec,
                            const Grid1D& grid, double dt) {
  check_state(state, spec, grid);
  auto rhs = [&](const std::vector<double>& y, double t) {
    for (double v : y)
      if (!std::isfinite(v))
        fail(ErrorKind::StabilityViolation, "time step produced a non-finite value");
    ScalarState s;
    s.u = y;
    s.field_kind = state.field_kind;
    s.t = t;
    return rhs_scalar(s, spec, grid);
  };
  ScalarState out;
  out.u = rk4_step(state.u, state.t, dt, rhs);
  out.field_kind = state.field_kind;
  out.t = state.t + dt;
  return out;
}

RiemannInvariants riemann_invariants(const HydroState& state, const SimulationParams& params) {
  params.validate();
  if (state.zeta.size() != state.vbar.size())
    fail(ErrorKind::Validation, "zeta and vbar sizes differ");
  const std::size_t n = state.zeta.size();
  RiemannInvariants out;
  out.r_plus.resize(n);
  out.r_minus.resize(n);
  out.lambda_plus.resize(n);
  out.lambda_minus.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double h = 1.0 + params.epsilon * state.zeta[i];
    if (!(h >= params.h_min))
      fail(ErrorKind::DepthViolation,
           "water height below h_min at cell " + std::to_string(i));
    const double root = std::sqrt(h);
    const double ev = params.epsilon * state.vbar[i];
    out.r_plus[i] = 2.0 * (root - 1.0) + ev;
    out.r_minus[i] = 2.0 * (root - 1.0) - ev;
    out.lambda_plus[i] = ev + root;
    out.lambda_minus[i] = -ev + root;
  }
  return out;
}

}  // namespace swlab
