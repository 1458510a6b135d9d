#pragma once

#include <complex>

#include "core/constants.hpp"

namespace eaqt {

/// Physical parameters of the cavity electro-optic transducer.
///
/// All rates and frequencies are angular (rad/s). Each mode's total loss
/// rate splits into an external coupling part (kappa_*_c) and an intrinsic
/// part (kappa_*_i); the intrinsic baths are thermally occupied at
/// `temperature`.
struct EOParams {
  double g = 0.0;          ///< pump-enhanced microwave-optical coupling
  double kappa_m_c = 0.0;  ///< microwave external coupling rate
  double kappa_m_i = 0.0;  ///< microwave intrinsic loss rate
  double kappa_a_c = 0.0;  ///< optical external coupling rate
  double kappa_a_i = 0.0;  ///< optical intrinsic loss rate
  double omega_m = default_omega_m;  ///< microwave resonance frequency
  double omega_o = default_omega_o;  ///< optical resonance frequency
  double temperature = 0.0;          ///< bath temperature, K

  /// Throws std::domain_error on negative rates, zero total loss on either
  /// mode, non-positive resonance frequencies, or negative temperature.
  void validate() const;
};

/// Dimensionless figures of merit and thermal occupations derived from
/// EOParams.
struct DerivedEOQuantities {
  double kappa_m = 0.0;  ///< total microwave loss rate
  double kappa_a = 0.0;  ///< total optical loss rate
  double c_g = 0.0;      ///< cooperativity 4 g^2 / (kappa_m kappa_a)
  double zeta_m = 0.0;   ///< microwave coupling ratio kappa_m_c / kappa_m
  double zeta_a = 0.0;   ///< optical coupling ratio kappa_a_c / kappa_a
  double n_m = 0.0;      ///< thermal occupation at omega_m
  double n_a = 0.0;      ///< thermal occupation at omega_o
};

/// Steady-state scattering amplitudes from the four input ports (signal,
/// probe, microwave intrinsic loss, optical intrinsic loss) to the converted
/// output at one detuning, plus their squared magnitudes.
///
/// The squared magnitudes satisfy eta + kappa_p + kappa_em + kappa_ea = 1.
struct TransferCoefficients {
  double detuning = 0.0;  ///< rad/s, relative to resonance
  std::complex<double> t_s;   ///< signal -> output amplitude
  std::complex<double> t_p;   ///< probe -> output amplitude
  std::complex<double> t_em;  ///< microwave loss bath -> output amplitude
  std::complex<double> t_ea;  ///< optical loss bath -> output amplitude
  double eta = 0.0;       ///< |t_s|^2, transduction efficiency
  double kappa_p = 0.0;   ///< |t_p|^2, probe transmissivity
  double kappa_em = 0.0;  ///< |t_em|^2
  double kappa_ea = 0.0;  ///< |t_ea|^2

  double kappa_e() const { return kappa_em + kappa_ea; }
};

/// Bose-Einstein occupation [exp(hbar omega / k_B T) - 1]^-1.
/// Returns exactly 0 at T = 0. Throws std::domain_error for omega <= 0 or
/// T < 0.
double thermal_occupation(double omega, double temperature);

/// Populates totals, cooperativity, coupling ratios and thermal occupations.
DerivedEOQuantities derived_quantities(const EOParams& params);

/// Solves the frequency-domain response in closed form and returns all four
/// port-to-output amplitudes at the given detuning.
TransferCoefficients transfer_coefficients(const EOParams& params, double detuning);

/// Resonant transduction efficiency 4 C_g / (1 + C_g)^2 * zeta_m * zeta_a.
double eta_resonant(double c_g, double zeta_m, double zeta_a);

/// Resonant probe transmissivity (2 zeta_m / (1 + C_g) - 1)^2.
double kappa_p_resonant(double c_g, double zeta_m);

/// Inverts eta_resonant for the cooperativity, returning the under-coupled
/// root (C_g <= 1). Requires 0 < eta <= zeta_m * zeta_a.
double cooperativity_for_eta(double eta, double zeta_m, double zeta_a);

/// Builds a concrete parameter set realizing the given cooperativity and
/// coupling ratios with kappa_m = kappa_a = kappa_ref.
EOParams params_for_cooperativity(double c_g, double zeta_m, double zeta_a,
                                  double kappa_ref = default_kappa_ref,
                                  double omega_m = default_omega_m,
                                  double omega_o = default_omega_o,
                                  double temperature = 0.0);

}  // namespace eaqt
