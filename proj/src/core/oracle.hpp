#pragma once

#include <array>
#include <complex>

#include "core/capacity.hpp"
#include "core/channel.hpp"
#include "core/eo_system.hpp"

// Brute-force validation path: solves the frequency-domain mode equations
// numerically and propagates Gaussian second moments through numerically
// applied two-mode squeezing. No closed-form transfer or composition formula
// from the analytic modules is referenced.

namespace eaqt::oracle {

/// Noise/input port labels of the composed network, in storage order.
enum class Port { signal = 0, probe0 = 1, ancilla0 = 2, loss_m = 3, loss_a = 4 };
inline constexpr int port_count = 5;

/// Frequency-domain coefficient matrices of V = M1 V + M2 V_in + M3 V_i.
struct SystemMatrices {
  std::array<std::array<std::complex<double>, 2>, 2> m1{};
  std::array<std::array<std::complex<double>, 2>, 2> m2{};
  std::array<std::array<std::complex<double>, 2>, 2> m3{};
};

SystemMatrices system_matrices(const EOParams& params, double detuning);

/// Output amplitudes from each physical input port, obtained by a numeric
/// linear solve of (I - M1) V = M2 V_in + M3 V_i per unit input.
struct NumericTransfer {
  double detuning = 0.0;
  std::complex<double> t_s, t_p, t_em, t_ea;
};

/// Throws numerical_error if the 2x2 system is singular.
NumericTransfer numeric_transfer(const EOParams& params, double detuning);

/// Output mode expanded over the input ports: annihilation- and
/// creation-operator coefficients per port.
struct ModeCoefficients {
  std::array<std::complex<double>, port_count> annihilation{};
  std::array<std::complex<double>, port_count> creation{};
};

/// Second moments of the composed output mode.
struct MomentSet {
  double tau = 0.0;           ///< squared signal-transfer magnitude
  double noise_moment = 0.0;  ///< normal-ordered <eps^dag eps> with vacuum signal
  double bogoliubov_sum = 0.0;  ///< sum |ann|^2 - sum |cre|^2 (must be 1)
  std::array<double, port_count> annihilation_sq{};  ///< per-port |coeff|^2
  std::array<double, port_count> creation_sq{};
};

/// Applies S(G), the numeric scattering (phase-aligned magnitudes), and
/// S^dag(G') as sequential Bogoliubov maps on coefficient vectors, then
/// assembles moments from the per-port occupations.
MomentSet squeeze_compose_numeric(const NumericTransfer& transfer,
                                  const SqueezerPair& squeezers,
                                  const PortOccupations& occupations);

/// End-to-end numeric pipeline: moments -> (tau, n_e or sigma2) -> capacity.
CapacityResult oracle_capacity(const EOParams& params, double detuning,
                               const SqueezerPair& squeezers,
                               const PortOccupations& occupations,
                               double rdp_tolerance = default_rdp_tolerance);

}  // namespace eaqt::oracle
