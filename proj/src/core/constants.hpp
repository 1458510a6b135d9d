#pragma once

#include <numbers>

namespace eaqt {

// 2019 SI defining constants (exact by definition).
inline constexpr double planck_h = 6.62607015e-34;   // Planck constant, J s
inline constexpr double boltzmann_k = 1.380649e-23;  // Boltzmann constant, J / K
inline constexpr double hbar = planck_h / (2.0 * std::numbers::pi);  // J s

/// Constants bundle used by the thermal-occupation formula.
struct PhysicalConstants {
  double hbar = eaqt::hbar;
  double k_b = eaqt::boltzmann_k;
};

// Default operating frequencies: 10 GHz microwave mode, 300 THz optical mode.
inline constexpr double default_omega_m = 2.0 * std::numbers::pi * 1.0e10;  // rad/s
inline constexpr double default_omega_o = 2.0 * std::numbers::pi * 3.0e14;  // rad/s

// Reference total loss rate for dimensionless (cooperativity-based) setups.
inline constexpr double default_kappa_ref = 2.0 * std::numbers::pi * 1.0e6;  // rad/s

}  // namespace eaqt
