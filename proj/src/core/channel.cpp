#include "core/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "core/errors.hpp"

namespace eaqt {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

// Elimination test for the special-channel tags: the coefficient is a
// difference of two square-root terms, so compare against their scale.
bool eliminated(double coeff, double term_scale) {
  return std::fabs(coeff) <= 1e-9 * std::max(1.0, term_scale);
}

}  // namespace

void SqueezerPair::validate() const {
  if (!(g >= 1.0) || !(g_prime >= 1.0))
    throw std::domain_error("squeezer gains must be >= 1 (G = 1 is the identity)");
}

const char* to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::generalized_loss: return "GL";
    case ChannelKind::generalized_amplification: return "GA";
    case ChannelKind::random_displacement: return "RDP";
  }
  return "?";
}

const char* to_string(ChannelSpecial special) {
  switch (special) {
    case ChannelSpecial::none: return "none";
    case ChannelSpecial::pure_loss: return "PL";
    case ChannelSpecial::thermal_loss: return "TL";
    case ChannelSpecial::pure_amplification: return "PA";
    case ChannelSpecial::thermal_amplification: return "TA";
  }
  return "?";
}

double gain_from_db(double value_db) {
  if (!(value_db >= 0.0))
    throw std::domain_error("gain_from_db: negative dB would mean gain < 1");
  return std::pow(10.0, value_db / 10.0);
}

NoiseCoefficients compose(const TransferCoefficients& transfer,
                          const SqueezerPair& squeezers) {
  squeezers.validate();
  const double g = squeezers.g;
  const double gp = squeezers.g_prime;
  NoiseCoefficients n;
  n.s = std::sqrt(transfer.eta * gp);
  const double p1 = std::sqrt(g * gp * transfer.kappa_p);
  const double p2 = std::sqrt((g - 1.0) * (gp - 1.0));
  const double a1 = std::sqrt((g - 1.0) * gp * transfer.kappa_p);
  const double a2 = std::sqrt(g * (gp - 1.0));
  n.c_p = p1 - p2;
  n.c_a = a1 - a2;
  n.c_p_scale = p1 + p2;
  n.c_a_scale = a1 + a2;
  n.l_m = std::sqrt(transfer.kappa_em * gp);
  n.l_a = std::sqrt(transfer.kappa_ea * gp);
  return n;
}

ChannelKind classify(double tau, double tolerance) {
  if (!(tau >= 0.0)) throw std::domain_error("classify: tau must be >= 0");
  if (!(tolerance > 0.0)) throw std::domain_error("classify: tolerance must be > 0");
  if (std::fabs(tau - 1.0) <= tolerance) return ChannelKind::random_displacement;
  return tau < 1.0 ? ChannelKind::generalized_loss
                   : ChannelKind::generalized_amplification;
}

double added_noise(const NoiseCoefficients& coeffs, const PortOccupations& occ,
                   double tolerance) {
  const double tau = coeffs.tau();
  if (std::fabs(tau - 1.0) <= tolerance)
    throw branch_error("added_noise: channel is random-displacement; use rdp_sigma2");
  const double cp2 = coeffs.c_p * coeffs.c_p;
  const double ca2 = coeffs.c_a * coeffs.c_a;
  const double lm2 = coeffs.l_m * coeffs.l_m;
  const double la2 = coeffs.l_a * coeffs.l_a;
  if (tau < 1.0) {
    return (cp2 * occ.n_p0 + ca2 * (occ.n_a0 + 1.0) + lm2 * occ.n_em + la2 * occ.n_ea) /
           (1.0 - tau);
  }
  return (cp2 * (occ.n_p0 + 1.0) + ca2 * occ.n_a0 + lm2 * (occ.n_em + 1.0) +
          la2 * (occ.n_ea + 1.0)) /
         (tau - 1.0);
}

double rdp_sigma2(const NoiseCoefficients& coeffs, const PortOccupations& occ,
                  double tolerance) {
  if (std::fabs(coeffs.tau() - 1.0) > tolerance)
    throw branch_error("rdp_sigma2: channel is not random-displacement; use added_noise");
  const double cp2 = coeffs.c_p * coeffs.c_p;
  const double ca2 = coeffs.c_a * coeffs.c_a;
  const double lm2 = coeffs.l_m * coeffs.l_m;
  const double la2 = coeffs.l_a * coeffs.l_a;
  return cp2 * (2.0 * occ.n_p0 + 1.0) + ca2 * (2.0 * occ.n_a0 + 1.0) +
         lm2 * (2.0 * occ.n_em + 1.0) + la2 * (2.0 * occ.n_ea + 1.0);
}

double gprime_pure_loss(double g, double kappa_p) {
  if (!(g >= 1.0)) throw std::domain_error("gprime_pure_loss: G must be >= 1");
  if (!(kappa_p >= 0.0 && kappa_p <= 1.0))
    throw std::domain_error("gprime_pure_loss: kappa_p must lie in [0, 1]");
  const double denom = g - kappa_p * (g - 1.0);  // = G (1 - kappa_p) + kappa_p
  if (!(denom > 0.0)) throw std::domain_error("gprime_pure_loss: non-positive denominator");
  return g / denom;
}

double gprime_pure_amp(double g, double kappa_p) {
  if (!(g >= 1.0)) throw std::domain_error("gprime_pure_amp: G must be >= 1");
  if (!(kappa_p >= 0.0 && kappa_p <= 1.0))
    throw std::domain_error("gprime_pure_amp: kappa_p must lie in [0, 1]");
  const double denom = (g - 1.0) - kappa_p * g;  // = G (1 - kappa_p) - 1
  if (!(denom > 0.0))
    throw std::domain_error(
        "gprime_pure_amp: G (1 - kappa_p) <= 1, probe elimination unreachable");
  return (g - 1.0) / denom;
}

ChannelDescriptor describe_channel(const NoiseCoefficients& coeffs,
                                   const PortOccupations& occ, double tolerance) {
  ChannelDescriptor d;
  d.tau = coeffs.tau();
  d.kind = classify(d.tau, tolerance);
  d.n_e = nan_value;
  d.sigma2 = nan_value;

  const double lm2 = coeffs.l_m * coeffs.l_m;
  const double la2 = coeffs.l_a * coeffs.l_a;
  if (d.kind == ChannelKind::random_displacement) {
    d.sigma2 = rdp_sigma2(coeffs, occ, tolerance);
    return d;
  }
  d.n_e = added_noise(coeffs, occ, tolerance);
  if (d.kind == ChannelKind::generalized_loss) {
    // Ancilla term absent: pure or thermal loss depending on whether any
    // surviving port is thermally occupied.
    if (eliminated(coeffs.c_a, coeffs.c_a_scale)) {
      const bool vacuum = occ.n_p0 == 0.0 && (lm2 == 0.0 || occ.n_em == 0.0) &&
                          (la2 == 0.0 || occ.n_ea == 0.0);
      d.special = vacuum ? ChannelSpecial::pure_loss : ChannelSpecial::thermal_loss;
    }
  } else {
    // Probe term absent: quantum-limited amplification additionally needs the
    // loss ports closed, since amplified loss-bath vacuum still adds noise.
    if (eliminated(coeffs.c_p, coeffs.c_p_scale)) {
      const bool quantum_limited = occ.n_a0 == 0.0 && lm2 == 0.0 && la2 == 0.0;
      d.special = quantum_limited ? ChannelSpecial::pure_amplification
                                  : ChannelSpecial::thermal_amplification;
    }
  }
  return d;
}

PortOccupations bath_occupations(const EOParams& params, bool thermal_probe) {
  PortOccupations occ;
  occ.n_em = thermal_occupation(params.omega_m, params.temperature);
  occ.n_ea = thermal_occupation(params.omega_o, params.temperature);
  if (thermal_probe) {
    occ.n_p0 = occ.n_em;
    occ.n_a0 = occ.n_em;
  }
  return occ;
}

}  // namespace eaqt
