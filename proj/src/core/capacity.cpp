#include "core/capacity.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "core/errors.hpp"

namespace eaqt {

namespace {

// Half-open band around tau = 1 where the branch formula is cross-checked
// against the RDP limit.
constexpr double boundary_check_width = 1e-6;
constexpr double boundary_check_bits = 1e-3;

double rdp_bound(double sigma2) {
  return std::log2(2.0 / (std::numbers::e * sigma2));
}

}  // namespace

const char* to_string(CapacityBranch branch) {
  switch (branch) {
    case CapacityBranch::loss: return "loss";
    case CapacityBranch::amplification: return "amplification";
    case CapacityBranch::rdp: return "rdp";
  }
  return "?";
}

double g_func(double n) {
  if (!(n >= 0.0)) throw std::domain_error("g_func: occupation must be >= 0");
  if (n == 0.0) return 0.0;
  if (n < 1.0) return (n + 1.0) * std::log2(n + 1.0) - n * std::log2(n);
  // For large n, n log2(1 + 1/n) needs log1p to avoid losing the +1.
  return std::log2(n + 1.0) + n * std::log1p(1.0 / n) / std::numbers::ln2;
}

CapacityResult q_lb_loss_amp(double tau, double n_e) {
  if (!(tau >= 0.0)) throw std::domain_error("q_lb_loss_amp: tau must be >= 0");
  if (!(n_e >= 0.0)) throw std::domain_error("q_lb_loss_amp: n_e must be >= 0");
  if (tau == 1.0)
    throw branch_error("q_lb_loss_amp: tau == 1 is the random-displacement branch");
  CapacityResult r;
  r.branch = tau < 1.0 ? CapacityBranch::loss : CapacityBranch::amplification;
  const double raw = std::log2(tau) - std::log2(std::fabs(1.0 - tau)) - g_func(n_e);
  r.clamped = !(raw > 0.0);
  r.q_lb = r.clamped ? 0.0 : raw;
  return r;
}

CapacityResult q_lb_rdp(double sigma2) {
  if (!(sigma2 > 0.0)) throw std::domain_error("q_lb_rdp: sigma2 must be > 0");
  CapacityResult r;
  r.branch = CapacityBranch::rdp;
  const double raw = rdp_bound(sigma2);
  r.clamped = !(raw > 0.0);
  r.q_lb = r.clamped ? 0.0 : raw;
  return r;
}

CapacityResult q_lb(const ChannelDescriptor& channel) {
  if (channel.kind == ChannelKind::random_displacement) {
    if (std::isnan(channel.sigma2) || channel.sigma2 < 0.0)
      throw std::invalid_argument("q_lb: random-displacement descriptor needs sigma2");
    if (channel.sigma2 == 0.0) {
      // Identity channel (perfectly matched, no noise ports open).
      CapacityResult r;
      r.branch = CapacityBranch::rdp;
      r.q_lb = std::numeric_limits<double>::infinity();
      return r;
    }
    return q_lb_rdp(channel.sigma2);
  }
  if (std::isnan(channel.n_e) || channel.n_e < 0.0)
    throw std::invalid_argument("q_lb: loss/amplification descriptor needs n_e");
  CapacityResult r = q_lb_loss_amp(channel.tau, channel.n_e);

  // Catastrophic cancellation guard near tau = 1: compare against the
  // limiting random-displacement value reconstructed from (tau, n_e).
  const double gap = std::fabs(channel.tau - 1.0);
  if (gap < boundary_check_width) {
    const double sigma2_limit = channel.tau < 1.0
                                    ? 2.0 * channel.n_e * (1.0 - channel.tau)
                                    : 2.0 * (channel.n_e + 1.0) * (channel.tau - 1.0);
    if (sigma2_limit > 0.0) {
      const double q_limit = std::max(0.0, rdp_bound(sigma2_limit));
      if (std::fabs(q_limit - r.q_lb) > boundary_check_bits) r.boundary_warning = true;
    }
  }
  return r;
}

}  // namespace eaqt
