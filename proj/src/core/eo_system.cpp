#include "core/eo_system.hpp"

#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"

namespace eaqt {

void EOParams::validate() const {
  if (!(g >= 0.0)) throw std::domain_error("coupling strength g must be >= 0");
  if (!(kappa_m_c >= 0.0) || !(kappa_m_i >= 0.0) || !(kappa_a_c >= 0.0) ||
      !(kappa_a_i >= 0.0))
    throw std::domain_error("loss rates must be >= 0");
  if (!(kappa_m_c + kappa_m_i > 0.0))
    throw std::domain_error("total microwave loss rate must be > 0");
  if (!(kappa_a_c + kappa_a_i > 0.0))
    throw std::domain_error("total optical loss rate must be > 0");
  if (!(omega_m > 0.0) || !(omega_o > 0.0))
    throw std::domain_error("resonance frequencies must be > 0");
  if (!(temperature >= 0.0)) throw std::domain_error("temperature must be >= 0");
}

double thermal_occupation(double omega, double temperature) {
  if (!(omega > 0.0)) throw std::domain_error("thermal_occupation: frequency must be > 0");
  if (!(temperature >= 0.0))
    throw std::domain_error("thermal_occupation: temperature must be >= 0");
  if (temperature == 0.0) return 0.0;
  const double x = hbar * omega / (boltzmann_k * temperature);
  // expm1 overflows to +inf for large x; 1/inf is the correct limit 0.
  return 1.0 / std::expm1(x);
}

DerivedEOQuantities derived_quantities(const EOParams& params) {
  params.validate();
  DerivedEOQuantities d;
  d.kappa_m = params.kappa_m_c + params.kappa_m_i;
  d.kappa_a = params.kappa_a_c + params.kappa_a_i;
  d.c_g = 4.0 * params.g * params.g / (d.kappa_m * d.kappa_a);
  d.zeta_m = params.kappa_m_c / d.kappa_m;
  d.zeta_a = params.kappa_a_c / d.kappa_a;
  d.n_m = thermal_occupation(params.omega_m, params.temperature);
  d.n_a = thermal_occupation(params.omega_o, params.temperature);
  return d;
}

TransferCoefficients transfer_coefficients(const EOParams& params, double detuning) {
  params.validate();
  const double kappa_m = params.kappa_m_c + params.kappa_m_i;
  const double kappa_a = params.kappa_a_c + params.kappa_a_i;
  const std::complex<double> chi_m_inv(0.5 * kappa_m, -detuning);
  const std::complex<double> chi_a_inv(0.5 * kappa_a, -detuning);
  const std::complex<double> denom = chi_m_inv * chi_a_inv + params.g * params.g;

  TransferCoefficients t;
  t.detuning = detuning;
  const std::complex<double> i_g(0.0, params.g);
  t.t_s = i_g * std::sqrt(params.kappa_m_c * params.kappa_a_c) / denom;
  t.t_p = params.kappa_m_c * chi_a_inv / denom - 1.0;
  t.t_em = std::sqrt(params.kappa_m_c * params.kappa_m_i) * chi_a_inv / denom;
  t.t_ea = i_g * std::sqrt(params.kappa_m_c * params.kappa_a_i) / denom;
  t.eta = std::norm(t.t_s);
  t.kappa_p = std::norm(t.t_p);
  t.kappa_em = std::norm(t.t_em);
  t.kappa_ea = std::norm(t.t_ea);
  return t;
}

double eta_resonant(double c_g, double zeta_m, double zeta_a) {
  if (!(c_g >= 0.0)) throw std::domain_error("eta_resonant: C_g must be >= 0");
  if (!(zeta_m >= 0.0 && zeta_m <= 1.0) || !(zeta_a >= 0.0 && zeta_a <= 1.0))
    throw std::domain_error("eta_resonant: coupling ratios must lie in [0, 1]");
  const double one_plus = 1.0 + c_g;
  return 4.0 * c_g / (one_plus * one_plus) * zeta_m * zeta_a;
}

double kappa_p_resonant(double c_g, double zeta_m) {
  if (!(c_g >= 0.0)) throw std::domain_error("kappa_p_resonant: C_g must be >= 0");
  if (!(zeta_m >= 0.0 && zeta_m <= 1.0))
    throw std::domain_error("kappa_p_resonant: coupling ratio must lie in [0, 1]");
  const double r = 2.0 * zeta_m / (1.0 + c_g) - 1.0;
  return r * r;
}

double cooperativity_for_eta(double eta, double zeta_m, double zeta_a) {
  const double zz = zeta_m * zeta_a;
  if (!(eta > 0.0) || !(eta <= zz))
    throw std::domain_error(
        "cooperativity_for_eta: need 0 < eta <= zeta_m * zeta_a (resonant maximum)");
  // The two roots of eta C^2 + (2 eta - 4 zz) C + eta = 0 have product 1;
  // the larger one is cancellation-free, so return its reciprocal.
  const double c_high = ((2.0 * zz - eta) + 2.0 * std::sqrt(zz * (zz - eta))) / eta;
  return 1.0 / c_high;
}

EOParams params_for_cooperativity(double c_g, double zeta_m, double zeta_a,
                                  double kappa_ref, double omega_m, double omega_o,
                                  double temperature) {
  if (!(c_g >= 0.0)) throw std::domain_error("cooperativity must be >= 0");
  if (!(zeta_m >= 0.0 && zeta_m <= 1.0) || !(zeta_a >= 0.0 && zeta_a <= 1.0))
    throw std::domain_error("coupling ratios must lie in [0, 1]");
  if (!(kappa_ref > 0.0)) throw std::domain_error("reference loss rate must be > 0");
  EOParams p;
  p.g = 0.5 * kappa_ref * std::sqrt(c_g);
  p.kappa_m_c = zeta_m * kappa_ref;
  p.kappa_m_i = (1.0 - zeta_m) * kappa_ref;
  p.kappa_a_c = zeta_a * kappa_ref;
  p.kappa_a_i = (1.0 - zeta_a) * kappa_ref;
  p.omega_m = omega_m;
  p.omega_o = omega_o;
  p.temperature = temperature;
  p.validate();
  return p;
}

}  // namespace eaqt
