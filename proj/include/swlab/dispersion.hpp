#pragma once

#include <vector>

// Linear dispersion relations of the model hierarchy. All speeds are
// nondimensional (long-wave limit c(0) = 1).

namespace swlab {

enum class DispersionModel {
  WaterWaves,
  NSW,
  AbcdBoussinesq,
  SGN,
  IsobeKakinuma1,
  MultiLayerBoussinesq,
  KdV,
  BBM,
  KdVBBMFamily,
  Whitham,
};

struct DispersionSpec {
  DispersionModel model = DispersionModel::WaterWaves;
  double a = 0.0, b = 0.0, c = 0.0, d = 1.0 / 3.0;  // AbcdBoussinesq
  double p = 0.0;                                   // KdVBBMFamily, p <= 1/6
  std::vector<double> fractions;                    // MultiLayerBoussinesq

  void validate() const;

  static DispersionSpec water_waves() { return {}; }
  static DispersionSpec nsw() { return {DispersionModel::NSW, 0, 0, 0, 0, 0, {}}; }
  static DispersionSpec abcd(double a, double b, double c, double d) {
    return {DispersionModel::AbcdBoussinesq, a, b, c, d, 0, {}};
  }
  static DispersionSpec sgn() { return {DispersionModel::SGN, 0, 0, 0, 0, 0, {}}; }
  static DispersionSpec isobe_kakinuma() {
    return {DispersionModel::IsobeKakinuma1, 0, 0, 0, 0, 0, {}};
  }
  static DispersionSpec multilayer(std::vector<double> fractions) {
    DispersionSpec s;
    s.model = DispersionModel::MultiLayerBoussinesq;
    s.fractions = std::move(fractions);
    return s;
  }
  static DispersionSpec kdv() { return {DispersionModel::KdV, 0, 0, 0, 0, 0, {}}; }
  static DispersionSpec bbm() { return {DispersionModel::BBM, 0, 0, 0, 0, 0, {}}; }
  static DispersionSpec kdvbbm(double p) { return {DispersionModel::KdVBBMFamily, 0, 0, 0, 0, p, {}}; }
  static DispersionSpec whitham() { return {DispersionModel::Whitham, 0, 0, 0, 0, 0, {}}; }
};

const char* dispersion_model_name(DispersionModel model);

// c(k) = sqrt(tanh(s)/s), s = sqrt(mu)*k, with the removable singularity at
// k=0 handled by a Taylor branch.
double phase_speed_ww(double k, double mu);

// Squared speed of the abcd Boussinesq family,
//   c^2 = (1 - mu*a*k^2)(1 - mu*c*k^2) / ((1 + mu*b*k^2)(1 + mu*d*k^2)).
// Throws IllPosedMode when a denominator factor <= 0 or c^2 < 0.
double phase_speed_abcd(double k, double mu, double a, double b, double c, double d);

// Squared speed of the two-potential column model,
//   c^2 = (1 + mu*k^2/15) / (1 + 2*mu*k^2/5).
double phase_speed_ik(double k, double mu);

// [2/2] Pade approximant (in s = sqrt(x)) of tanh(sqrt(x))/sqrt(x),
// built from the Taylor coefficients via the standard linear system.
double pade22_cww2(double x);

// Symmetric N x N matrix (row-major)
//   T_jk = -(1/6) l_j^3 delta_jk + l_j l_k ( (1/2) l_{j v k} + sum_{m > j v k} l_m ).
std::vector<double> build_T_matrix(const std::vector<double>& fractions);

// All N branch speeds c^2 of the layered Boussinesq system at wavenumber k,
// sorted descending: the gravity branch l^T (diag(l) + mu k^2 T)^{-1} l and
// N-1 zero branches.
std::vector<double> phase_speed_multilayer(double k, double mu,
                                           const std::vector<double>& fractions);

// Unidirectional scalar models: KdV, BBM, KdVBBMFamily(p), Whitham.
double phase_speed_scalar(const DispersionSpec& spec, double k, double mu);

// Dispatch for any spec; returns c >= 0.
double phase_speed(const DispersionSpec& spec, double k, double mu);

}  // namespace swlab
