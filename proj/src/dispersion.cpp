#include "swlab/dispersion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "swlab/errors.hpp"

namespace swlab {

namespace {

void check_k_mu(double k, double mu) {
  if (!(k >= 0.0) || !std::isfinite(k)) fail(ErrorKind::Validation, "wavenumber must be >= 0");
  if (!(mu > 0.0) || !(mu <= 1.0)) fail(ErrorKind::Validation, "mu must lie in (0, 1]");
}

void check_fractions(const std::vector<double>& l) {
  if (l.empty()) fail(ErrorKind::FractionError, "layer fractions must be nonempty");
  double sum = 0.0;
  for (double lj : l) {
    if (!(lj > 0.0) || !std::isfinite(lj))
      fail(ErrorKind::FractionError, "layer fractions must be positive");
    sum += lj;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    fail(ErrorKind::FractionError,
         "layer fractions must sum to 1, got " + std::to_string(sum));
}

}  // namespace

void DispersionSpec::validate() const {
  switch (model) {
    case DispersionModel::AbcdBoussinesq:
      if (std::abs(a + b + c + d - 1.0 / 3.0) > 1e-12)
        fail(ErrorKind::Validation, "abcd parameters must satisfy a+b+c+d = 1/3");
      break;
    case DispersionModel::KdVBBMFamily:
      if (!(p <= 1.0 / 6.0 + 1e-15))
        fail(ErrorKind::Validation, "family parameter p must be <= 1/6");
      break;
    case DispersionModel::MultiLayerBoussinesq:
      check_fractions(fractions);
      break;
    default:
      break;
  }
}

const char* dispersion_model_name(DispersionModel model) {
  switch (model) {
    case DispersionModel::WaterWaves: return "water_waves";
    case DispersionModel::NSW: return "nsw";
    case DispersionModel::AbcdBoussinesq: return "abcd";
    case DispersionModel::SGN: return "sgn";
    case DispersionModel::IsobeKakinuma1: return "isobe_kakinuma";
    case DispersionModel::MultiLayerBoussinesq: return "multilayer";
    case DispersionModel::KdV: return "kdv";
    case DispersionModel::BBM: return "bbm";
    case DispersionModel::KdVBBMFamily: return "kdvbbm";
    case DispersionModel::Whitham: return "whitham";
  }
  return "unknown";
}

double phase_speed_ww(double k, double mu) {
  check_k_mu(k, mu);
  const double s = std::sqrt(mu) * k;
  if (s < 1e-8) {
    const double x = s * s;
    return std::sqrt(1.0 - x / 3.0 + 2.0 * x * x / 15.0);
  }
  return std::sqrt(std::tanh(s) / s);
}

double phase_speed_abcd(double k, double mu, double a, double b, double c, double d) {
  check_k_mu(k, mu);
  const double x = mu * k * k;
  const double f1 = 1.0 + b * x;
  const double f2 = 1.0 + d * x;
  if (!(f1 > 0.0) || !(f2 > 0.0))
    fail(ErrorKind::IllPosedMode,
         "abcd denominator vanishes at mu*k^2 = " + std::to_string(x));
  const double c2 = (1.0 - a * x) * (1.0 - c * x) / (f1 * f2);
  if (c2 < 0.0)
    fail(ErrorKind::IllPosedMode,
         "abcd squared speed is negative at mu*k^2 = " + std::to_string(x));
  return c2;
}

double phase_speed_ik(double k, double mu) {
  check_k_mu(k, mu);
  const double x = mu * k * k;
  return (1.0 + x / 15.0) / (1.0 + 2.0 * x / 5.0);
}

double pade22_cww2(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) fail(ErrorKind::Validation, "argument must be >= 0");
  // Taylor coefficients of tanh(s)/s in x = s^2 from the tanh' = 1 - tanh^2
  // recurrence, then the [1/1]-in-x (= [2/2]-in-s) Pade linear system.
  static const std::array<double, 2> coeffs = [] {
    double a[3];  // a[j] multiplies s^(2j+1) in tanh(s)
    a[0] = 1.0;
    for (int j = 1; j <= 2; ++j) {
      double conv = 0.0;
      for (int p = 0; p <= j - 1; ++p) conv += a[p] * a[j - 1 - p];
      a[j] = -conv / (2 * j + 1);
    }
    const double c0 = a[0], c1 = a[1], c2 = a[2];
    const double den = -c2 / c1;       // c2 + den*c1 = 0
    const double num = c1 + den * c0;  // matches the O(x) term
    return std::array<double, 2>{num, den};
  }();
  return (1.0 + coeffs[0] * x) / (1.0 + coeffs[1] * x);
}

std::vector<double> build_T_matrix(const std::vector<double>& fractions) {
  check_fractions(fractions);
  const int n = static_cast<int>(fractions.size());
  std::vector<double> suffix(n + 1, 0.0);  // suffix[j] = sum_{m >= j} l_m
  for (int j = n - 1; j >= 0; --j) suffix[j] = suffix[j + 1] + fractions[j];
  std::vector<double> T(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int kk = 0; kk < n; ++kk) {
      const int top = std::max(j, kk);
      double v = fractions[j] * fractions[kk] * (0.5 * fractions[top] + suffix[top + 1]);
      if (j == kk) v -= fractions[j] * fractions[j] * fractions[j] / 6.0;
      T[static_cast<std::size_t>(j) * n + kk] = v;
    }
  }
  return T;
}

std::vector<double> phase_speed_multilayer(double k, double mu,
                                           const std::vector<double>& fractions) {
  check_k_mu(k, mu);
  const std::vector<double> T = build_T_matrix(fractions);
  const int n = static_cast<int>(fractions.size());
  const double x = mu * k * k;

  // M = diag(l) + mu k^2 T is SPD; the mode problem c^2 v = M^{-1} l l^T v
  // has the single gravity branch c^2 = l^T M^{-1} l = |L^{-1} l|^2 and
  // n-1 zero branches.
  std::vector<double> L(static_cast<std::size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j)
    for (int kk = 0; kk <= j; ++kk) {
      double s = T[static_cast<std::size_t>(j) * n + kk] * x;
      if (j == kk) s += fractions[j];
      for (int m = 0; m < kk; ++m)
        s -= L[static_cast<std::size_t>(j) * n + m] * L[static_cast<std::size_t>(kk) * n + m];
      if (j == kk) {
        if (!(s > 0.0))
          fail(ErrorKind::EigenFailure, "layered mode matrix lost positive definiteness");
        L[static_cast<std::size_t>(j) * n + j] = std::sqrt(s);
      } else {
        L[static_cast<std::size_t>(j) * n + kk] = s / L[static_cast<std::size_t>(kk) * n + kk];
      }
    }
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) {
    double s = fractions[j];
    for (int m = 0; m < j; ++m) s -= L[static_cast<std::size_t>(j) * n + m] * w[m];
    w[j] = s / L[static_cast<std::size_t>(j) * n + j];
  }
  std::vector<double> roots(n, 0.0);
  roots[0] = std::inner_product(w.begin(), w.end(), w.begin(), 0.0);
  return roots;
}

double phase_speed_scalar(const DispersionSpec& spec, double k, double mu) {
  check_k_mu(k, mu);
  spec.validate();
  const double x = mu * k * k;
  switch (spec.model) {
    case DispersionModel::KdV:
      return 1.0 - x / 6.0;
    case DispersionModel::BBM:
      return 1.0 / (1.0 + x / 6.0);
    case DispersionModel::KdVBBMFamily: {
      const double den = 1.0 + (1.0 / 6.0 - spec.p) * x;
      if (!(den > 0.0))
        fail(ErrorKind::IllPosedMode,
             "family denominator vanishes at mu*k^2 = " + std::to_string(x));
      return (1.0 - spec.p * x) / den;
    }
    case DispersionModel::Whitham:
      return phase_speed_ww(k, mu);
    default:
      fail(ErrorKind::Validation, "phase_speed_scalar expects a unidirectional model");
  }
}

double phase_speed(const DispersionSpec& spec, double k, double mu) {
  check_k_mu(k, mu);
  spec.validate();
  switch (spec.model) {
    case DispersionModel::WaterWaves:
      return phase_speed_ww(k, mu);
    case DispersionModel::NSW:
      return 1.0;
    case DispersionModel::AbcdBoussinesq:
      return std::sqrt(phase_speed_abcd(k, mu, spec.a, spec.b, spec.c, spec.d));
    case DispersionModel::SGN:
      return std::sqrt(phase_speed_abcd(k, mu, 0.0, 0.0, 0.0, 1.0 / 3.0));
    case DispersionModel::IsobeKakinuma1:
      return std::sqrt(phase_speed_ik(k, mu));
    case DispersionModel::MultiLayerBoussinesq:
      return std::sqrt(phase_speed_multilayer(k, mu, spec.fractions).front());
    case DispersionModel::KdV:
    case DispersionModel::BBM:
    case DispersionModel::KdVBBMFamily:
    case DispersionModel::Whitham: {
      const double c = phase_speed_scalar(spec, k, mu);
      if (c < 0.0)
        fail(ErrorKind::IllPosedMode, "scalar model speed is negative at this wavenumber");
      return c;
    }
  }
  fail(ErrorKind::Validation, "unhandled dispersion model");
}

}  // namespace swlab
