#pragma once

#include "core/eo_system.hpp"

namespace eaqt {

/// Width of the |tau - 1| band treated as a random-displacement channel.
/// Below this the 1/(1 - tau) noise formulas amplify double-precision noise.
inline constexpr double default_rdp_tolerance = 1e-9;

/// Two-mode squeezer gains. G = G' = 1 means no squeezing.
struct SqueezerPair {
  double g = 1.0;        ///< pre-squeezer gain (linear)
  double g_prime = 1.0;  ///< anti-squeezer gain (linear)

  /// Throws std::domain_error unless both gains are >= 1.
  void validate() const;
};

/// Mean photon occupations of the four noise input ports. Probe and ancilla
/// enter before the pre-squeezer; the loss baths couple inside the cavity.
struct PortOccupations {
  double n_p0 = 0.0;  ///< probe input
  double n_a0 = 0.0;  ///< ancilla input
  double n_em = 0.0;  ///< microwave intrinsic-loss bath
  double n_ea = 0.0;  ///< optical intrinsic-loss bath
};

/// Real amplitudes of the composed squeezer-transducer-antisqueezer map.
/// c_p and c_a may be negative; l_m, l_a and s are non-negative. The
/// Bogoliubov identity c_p^2 - c_a^2 + l_m^2 + l_a^2 = 1 - s^2 holds.
struct NoiseCoefficients {
  double s = 0.0;    ///< signal amplitude sqrt(eta G')
  double c_p = 0.0;  ///< probe coefficient
  double c_a = 0.0;  ///< ancilla (creation-operator) coefficient
  double l_m = 0.0;  ///< microwave-loss amplitude sqrt(kappa_em G')
  double l_a = 0.0;  ///< optical-loss amplitude sqrt(kappa_ea G')
  /// Magnitude sums of the two square-root terms whose difference forms c_p
  /// and c_a; the scale against which "coefficient eliminated" is decided.
  double c_p_scale = 0.0;
  double c_a_scale = 0.0;

  double tau() const { return s * s; }  ///< effective transmissivity/gain
};

enum class ChannelKind {
  generalized_loss,           ///< tau < 1
  generalized_amplification,  ///< tau > 1
  random_displacement,        ///< |tau - 1| within tolerance
};

enum class ChannelSpecial {
  none,
  pure_loss,
  thermal_loss,
  pure_amplification,
  thermal_amplification,
};

/// Classified effective single-mode Gaussian channel.
struct ChannelDescriptor {
  ChannelKind kind = ChannelKind::generalized_loss;
  ChannelSpecial special = ChannelSpecial::none;
  double tau = 0.0;     ///< G' * eta
  double n_e = 0.0;     ///< added thermal-equivalent noise (NaN for RDP)
  double sigma2 = 0.0;  ///< displacement-noise variance (NaN unless RDP)
};

const char* to_string(ChannelKind kind);
const char* to_string(ChannelSpecial special);

/// 10^(value_db / 10). Throws std::domain_error for negative dB (gains below
/// 1 are not meaningful squeezer settings).
double gain_from_db(double value_db);

/// Composes the transducer amplitudes with the squeezer pair. Uses the
/// magnitudes of the transfer amplitudes: single-mode Gaussian capacities are
/// invariant under port-local phase rotations, so the squeezing axis is taken
/// aligned with the scattering phase at every detuning.
NoiseCoefficients compose(const TransferCoefficients& transfer,
                          const SqueezerPair& squeezers);

/// Loss / amplification / random-displacement trichotomy on tau.
ChannelKind classify(double tau, double tolerance = default_rdp_tolerance);

/// Added noise N_e = <eps_e^dag eps_e> of the canonical-form environment mode
/// for the loss and amplification branches. Throws branch_error when
/// |tau - 1| <= tolerance.
double added_noise(const NoiseCoefficients& coeffs, const PortOccupations& occupations,
                   double tolerance = default_rdp_tolerance);

/// Displacement-noise variance of the random-displacement channel:
/// the symmetric-ordered added variance summed over both quadratures,
/// sigma^2 = sum_port coeff^2 (2 N + 1). This normalization makes the
/// capacity bound continuous across tau = 1. Throws branch_error when
/// |tau - 1| > tolerance.
double rdp_sigma2(const NoiseCoefficients& coeffs, const PortOccupations& occupations,
                  double tolerance = default_rdp_tolerance);

/// Anti-squeezer gain eliminating the ancilla term: G / [G (1 - kappa_p) + kappa_p].
/// The resulting channel is pure loss (vacuum baths) or thermal loss.
double gprime_pure_loss(double g, double kappa_p);

/// Anti-squeezer gain eliminating the probe term: (G - 1) / [G (1 - kappa_p) - 1].
/// Requires G (1 - kappa_p) > 1; throws std::domain_error otherwise.
double gprime_pure_amp(double g, double kappa_p);

/// Full classification: kind, special tag, tau, and the branch-appropriate
/// noise figure (n_e or sigma2; the inapplicable one is set to NaN).
ChannelDescriptor describe_channel(const NoiseCoefficients& coeffs,
                                   const PortOccupations& occupations,
                                   double tolerance = default_rdp_tolerance);

/// Default bath policy: probe and ancilla in vacuum, intrinsic-loss baths
/// thermal at the device temperature. With thermal_probe set, probe and
/// ancilla are additionally thermalized at the microwave occupation.
PortOccupations bath_occupations(const EOParams& params, bool thermal_probe = false);

}  // namespace eaqt
