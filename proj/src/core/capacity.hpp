#pragma once

#include "core/channel.hpp"

namespace eaqt {

enum class CapacityBranch { loss, amplification, rdp };

const char* to_string(CapacityBranch branch);

/// Quantum-capacity lower bound in bits per channel use.
struct CapacityResult {
  double q_lb = 0.0;
  CapacityBranch branch = CapacityBranch::loss;
  bool clamped = false;  ///< raw bound was negative and clamped to 0
  /// Set when the near-boundary cross-check (branch formula vs RDP limit for
  /// 1e-9 < |tau - 1| < 1e-6) disagreed by more than 1e-3 bits.
  bool boundary_warning = false;
};

/// g(n) = (n + 1) log2(n + 1) - n log2 n, with g(0) = 0 handled exactly.
double g_func(double n);

/// max{0, log2(tau / |1 - tau|) - g(n_e)} for the loss (tau < 1) and
/// amplification (tau > 1) branches. Throws branch_error at tau == 1.
CapacityResult q_lb_loss_amp(double tau, double n_e);

/// max{0, log2(2 / (e sigma^2))} for the random-displacement branch.
/// Throws std::domain_error for sigma2 <= 0.
CapacityResult q_lb_rdp(double sigma2);

/// Branch dispatch on a classified channel. A random-displacement descriptor
/// with sigma2 == 0 is the identity channel and yields q_lb = +infinity.
CapacityResult q_lb(const ChannelDescriptor& channel);

}  // namespace eaqt
