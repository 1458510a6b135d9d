#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "core/capacity.hpp"
#include "core/errors.hpp"
#include "core/rng.hpp"

using namespace eaqt;

namespace {

ChannelDescriptor loss_amp_descriptor(double tau, double n_e) {
  ChannelDescriptor d;
  d.tau = tau;
  d.kind = classify(tau);
  d.n_e = n_e;
  d.sigma2 = std::numeric_limits<double>::quiet_NaN();
  return d;
}

ChannelDescriptor rdp_descriptor(double sigma2) {
  ChannelDescriptor d;
  d.tau = 1.0;
  d.kind = ChannelKind::random_displacement;
  d.n_e = std::numeric_limits<double>::quiet_NaN();
  d.sigma2 = sigma2;
  return d;
}

// Capacity of the composed channel at (eta, kappa_p split, G, G'), vacuum
// inputs; the path the sweeps take, reduced to its core.
double q_of(double eta, double kappa_p, double g, double gp) {
  TransferCoefficients t;
  t.eta = eta;
  t.kappa_p = kappa_p;
  t.kappa_em = 0.0;
  t.kappa_ea = 1.0 - eta - kappa_p;
  const auto n = compose(t, SqueezerPair{g, gp});
  return q_lb(describe_channel(n, PortOccupations{})).q_lb;
}

}  // namespace

TEST_CASE("g_func") {
  CHECK(g_func(0.0) == 0.0);
  CHECK(g_func(1.0) == doctest::Approx(2.0).epsilon(1e-15));
  // 4 log2 4 - 3 log2 3
  CHECK(g_func(3.0) == doctest::Approx(3.24511249783653146).epsilon(1e-15));
  // brute-force value; increases monotonically
  CHECK(g_func(0.5) == doctest::Approx(1.37744375108173427).epsilon(1e-15));
  double previous = 0.0;
  for (double n : {1e-6, 1e-3, 0.1, 0.5, 1.0, 2.0, 10.0, 1e4, 1e9}) {
    const double value = g_func(n);
    CHECK(value > previous);
    previous = value;
  }
  CHECK_THROWS_AS(g_func(-1e-12), std::domain_error);
}

TEST_CASE("q_lb_loss_amp") {
  SUBCASE("threshold and frozen fixtures") {
    const auto at_half = q_lb_loss_amp(0.5, 0.0);
    CHECK(at_half.q_lb == 0.0);
    CHECK(at_half.clamped);

    const auto pl = q_lb_loss_amp(0.7, 0.0);
    CHECK(pl.q_lb == doctest::Approx(1.22239242133644793).epsilon(1e-14));
    CHECK(pl.branch == CapacityBranch::loss);
    CHECK(!pl.clamped);

    // log2(7/3) < g(0.5), so the bound clamps to zero.
    const auto noisy = q_lb_loss_amp(0.7, 0.5);
    CHECK(noisy.q_lb == 0.0);
    CHECK(noisy.clamped);
  }
  SUBCASE("amplifier side") {
    const auto amp = q_lb_loss_amp(1.1, 0.0);
    CHECK(amp.branch == CapacityBranch::amplification);
    CHECK(amp.q_lb == doctest::Approx(std::log2(1.1 / 0.1)).epsilon(1e-13));
  }
  SUBCASE("monotonicity in n_e and tau") {
    UniformRng rng(31);
    for (int i = 0; i < 200; ++i) {
      const double tau = rng.in(0.55, 0.999);
      const double n1 = rng.in(0.0, 0.2);
      const double n2 = n1 + rng.in(0.001, 0.2);
      CHECK(q_lb_loss_amp(tau, n2).q_lb <= q_lb_loss_amp(tau, n1).q_lb);
      const double tau2 = tau + rng.in(1e-4, 0.999 - tau + 1e-4);
      CHECK(q_lb_loss_amp(std::min(tau2, 0.9999), 0.0).q_lb >=
            q_lb_loss_amp(tau, 0.0).q_lb);
    }
  }
  SUBCASE("positivity iff tau above one half at zero noise") {
    UniformRng rng(32);
    for (int i = 0; i < 300; ++i) {
      const double tau = rng.in(0.0, 0.9999);
      const bool positive = q_lb_loss_amp(tau, 0.0).q_lb > 0.0;
      CHECK(positive == (tau > 0.5));
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(q_lb_loss_amp(1.0, 0.0), branch_error);
    CHECK_THROWS_AS(q_lb_loss_amp(-0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(q_lb_loss_amp(0.5, -1.0), std::domain_error);
  }
}

TEST_CASE("q_lb_rdp") {
  CHECK(q_lb_rdp(2.0 / std::exp(1.0)).q_lb == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(q_lb_rdp(1.0 / std::exp(1.0)).q_lb == doctest::Approx(1.0).epsilon(1e-12));
  // halving sigma^2 adds exactly one bit
  const double q1 = q_lb_rdp(0.01).q_lb;
  const double q2 = q_lb_rdp(0.005).q_lb;
  CHECK(q2 - q1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(q_lb_rdp(5.0).clamped);
  CHECK_THROWS_AS(q_lb_rdp(0.0), std::domain_error);
  CHECK_THROWS_AS(q_lb_rdp(-1.0), std::domain_error);
}

TEST_CASE("q_lb dispatch") {
  SUBCASE("bare loss channel fixture") {
    const auto r = q_lb(loss_amp_descriptor(0.6, 0.0));
    CHECK(r.q_lb == doctest::Approx(0.584962500721156181).epsilon(1e-14));
    CHECK(r.branch == CapacityBranch::loss);
  }
  SUBCASE("below threshold clamps with flag") {
    const auto r = q_lb(loss_amp_descriptor(0.4, 0.0));
    CHECK(r.q_lb == 0.0);
    CHECK(r.clamped);
  }
  SUBCASE("rdp dispatch and identity channel") {
    CHECK(q_lb(rdp_descriptor(0.1)).branch == CapacityBranch::rdp);
    const auto ideal = q_lb(rdp_descriptor(0.0));
    CHECK(std::isinf(ideal.q_lb));
    CHECK(ideal.q_lb > 0);
  }
  SUBCASE("inconsistent descriptors rejected") {
    ChannelDescriptor d = rdp_descriptor(0.1);
    d.sigma2 = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(q_lb(d), std::invalid_argument);
    ChannelDescriptor d2 = loss_amp_descriptor(0.5, 0.0);
    d2.n_e = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(q_lb(d2), std::invalid_argument);
  }
  SUBCASE("never negative") {
    UniformRng rng(77);
    for (int i = 0; i < 300; ++i) {
      const double tau = rng.in(0.0, 3.0);
      if (std::fabs(tau - 1.0) <= 1e-9) continue;
      const auto r = q_lb(loss_amp_descriptor(tau, rng.in(0.0, 2.0)));
      CHECK(r.q_lb >= 0.0);
    }
  }
}

TEST_CASE("near-boundary cross-check flags inconsistent descriptors") {
  // A physically composed channel never trips the warning; a descriptor with
  // a noise figure that cannot belong to its tau does.
  ChannelDescriptor d;
  d.tau = 1.0 + 1e-7;
  d.kind = ChannelKind::generalized_amplification;
  d.n_e = 0.0;
  d.sigma2 = std::numeric_limits<double>::quiet_NaN();
  const auto r = q_lb(d);
  CHECK(r.boundary_warning);
}

TEST_CASE("capacity is continuous across the RDP boundary") {
  // eta = 0.1, kappa_p = 0.9, G = 100; drive tau through 1 by varying G'.
  const double eta = 0.1;
  const double q_rdp = q_of(eta, 0.9, 100.0, 1.0 / eta);
  CHECK(q_rdp == doctest::Approx(4.02399547043288126).epsilon(1e-12));
  for (double delta : {1e-6, -1e-6}) {
    const double q_branch = q_of(eta, 0.9, 100.0, (1.0 + delta) / eta);
    CHECK(std::fabs(q_branch - q_rdp) < 1e-3);
  }
  // Same pin along a thermal path.
  TransferCoefficients t;
  t.eta = eta;
  t.kappa_p = 0.85;
  t.kappa_em = 0.05;
  t.kappa_ea = 0.0;
  PortOccupations occ;
  occ.n_em = 0.21;
  const auto rdp = q_lb(describe_channel(compose(t, SqueezerPair{50.0, 10.0}), occ));
  for (double delta : {1e-6, -1e-6}) {
    const auto branch =
        q_lb(describe_channel(compose(t, SqueezerPair{50.0, (1.0 + delta) / eta}), occ));
    CHECK(std::fabs(branch.q_lb - rdp.q_lb) < 1e-3);
    CHECK(!branch.boundary_warning);
  }
}

TEST_CASE("positive capacity window in cooperativity matches the analytic roots") {
  // Bare channel at T = 0: Q > 0 iff 4 C / (1 + C)^2 > 1/2, i.e. between
  // 3 - 2 sqrt(2) and 3 + 2 sqrt(2).
  const double lo = 3.0 - 2.0 * std::sqrt(2.0);
  const double hi = 3.0 + 2.0 * std::sqrt(2.0);
  auto q_bare = [](double c) {
    const double eta = eta_resonant(c, 1.0, 1.0);
    return q_lb(loss_amp_descriptor(eta, 0.0)).q_lb;
  };
  CHECK(q_bare(lo * 0.999) == 0.0);
  CHECK(q_bare(lo * 1.001) > 0.0);
  CHECK(q_bare(hi * 0.999) > 0.0);
  CHECK(q_bare(hi * 1.001) == 0.0);

  // Bisect the lower edge and compare with the closed-form root.
  double a = 0.01, b = 1.0;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (a + b);
    (q_bare(mid) > 0.0 ? b : a) = mid;
  }
  CHECK(std::fabs(0.5 * (a + b) - lo) < 1e-9);

  // Same agreement for each coupling-ratio family: onset where the resonant
  // efficiency crosses one half, root of C^2 + (2 - 8 z^2) C + 1 = 0.
  for (double z : {1.0, 0.95, 0.9}) {
    auto q_zeta = [z](double c) {
      const double eta = eta_resonant(c, z, z);
      const double kp = kappa_p_resonant(c, z);
      const double kappa_e = std::max(0.0, 1.0 - eta - kp);
      TransferCoefficients t;
      t.eta = eta;
      t.kappa_p = kp;
      t.kappa_em = kappa_e * 0.5;
      t.kappa_ea = kappa_e * 0.5;
      return q_lb(describe_channel(compose(t, SqueezerPair{1.0, 1.0}),
                                   PortOccupations{}))
          .q_lb;
    };
    const double zz = z * z;
    const double analytic = (4.0 * zz - 1.0) - std::sqrt((4.0 * zz - 1.0) * (4.0 * zz - 1.0) - 1.0);
    double lo_c = 0.01, hi_c = 1.0;
    for (int i = 0; i < 100; ++i) {
      const double mid = 0.5 * (lo_c + hi_c);
      (q_zeta(mid) > 0.0 ? hi_c : lo_c) = mid;
    }
    CHECK(std::fabs(0.5 * (lo_c + hi_c) - analytic) < 1e-9);
  }
}
