#include "core/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace eaqt::oracle {

namespace {

using Matrix2c = Eigen::Matrix2cd;
using Vector2c = Eigen::Vector2cd;
using Complex = std::complex<double>;

Matrix2c to_eigen(const std::array<std::array<Complex, 2>, 2>& m) {
  Matrix2c out;
  out << m[0][0], m[0][1], m[1][0], m[1][1];
  return out;
}

}  // namespace

SystemMatrices system_matrices(const EOParams& params, double detuning) {
  params.validate();
  const double kappa_m = params.kappa_m_c + params.kappa_m_i;
  const double kappa_a = params.kappa_a_c + params.kappa_a_i;
  const Complex den_m(0.5 * kappa_m, -detuning);  // -i omega + kappa_m / 2
  const Complex den_a(0.5 * kappa_a, -detuning);
  const Complex i_g(0.0, params.g);

  SystemMatrices s;
  s.m1[0][1] = i_g / den_m;
  s.m1[1][0] = i_g / den_a;
  s.m2[0][0] = std::sqrt(params.kappa_m_c) / den_m;
  s.m2[1][1] = std::sqrt(params.kappa_a_c) / den_a;
  s.m3[0][0] = std::sqrt(params.kappa_m_i) / den_m;
  s.m3[1][1] = std::sqrt(params.kappa_a_i) / den_a;
  return s;
}

NumericTransfer numeric_transfer(const EOParams& params, double detuning) {
  const SystemMatrices s = system_matrices(params, detuning);
  const Matrix2c m1 = to_eigen(s.m1);
  const Matrix2c m2 = to_eigen(s.m2);
  const Matrix2c m3 = to_eigen(s.m3);
  const Matrix2c a = Matrix2c::Identity() - m1;

  Eigen::PartialPivLU<Matrix2c> lu(a);
  if (std::fabs(lu.determinant()) < 1e-300)
    throw numerical_error("numeric_transfer: singular frequency-domain system");

  const double sqrt_kmc = std::sqrt(params.kappa_m_c);
  // Output extraction: sqrt(kappa_m_c) m(omega), minus the direct probe
  // reflection from the input-output relation.
  auto respond = [&](const Vector2c& drive, bool probe_port) {
    const Vector2c v = lu.solve(drive);
    Complex amp = sqrt_kmc * v(0);
    if (probe_port) amp -= 1.0;
    if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag()))
      throw numerical_error("numeric_transfer: non-finite response");
    return amp;
  };

  NumericTransfer t;
  t.detuning = detuning;
  t.t_p = respond(m2 * Vector2c(1.0, 0.0), true);
  t.t_s = respond(m2 * Vector2c(0.0, 1.0), false);
  t.t_em = respond(m3 * Vector2c(1.0, 0.0), false);
  t.t_ea = respond(m3 * Vector2c(0.0, 1.0), false);
  return t;
}

MomentSet squeeze_compose_numeric(const NumericTransfer& transfer,
                                  const SqueezerPair& squeezers,
                                  const PortOccupations& occupations) {
  squeezers.validate();
  const double sq_g = std::sqrt(squeezers.g);
  const double sq_g1 = std::sqrt(squeezers.g - 1.0);
  const double sq_gp = std::sqrt(squeezers.g_prime);
  const double sq_gp1 = std::sqrt(squeezers.g_prime - 1.0);

  // Pre-squeezer S(G) outputs as coefficient vectors over the ports.
  ModeCoefficients probe_in;  // eps_P_in = sqrt(G) P0 + sqrt(G-1) A0^dag
  probe_in.annihilation[int(Port::probe0)] = sq_g;
  probe_in.creation[int(Port::ancilla0)] = sq_g1;
  ModeCoefficients ancilla_dag;  // eps_A^dag = sqrt(G-1) P0 + sqrt(G) A0^dag
  ancilla_dag.annihilation[int(Port::probe0)] = sq_g1;
  ancilla_dag.creation[int(Port::ancilla0)] = sq_g;

  // Scattering with the squeezing axis aligned to the transfer phase at this
  // detuning, so only the amplitude magnitudes enter.
  const double m_s = std::abs(transfer.t_s);
  const double m_p = std::abs(transfer.t_p);
  const double m_em = std::abs(transfer.t_em);
  const double m_ea = std::abs(transfer.t_ea);

  ModeCoefficients out;  // transducer output before the anti-squeezer
  out.annihilation[int(Port::signal)] = m_s;
  out.annihilation[int(Port::loss_m)] = m_em;
  out.annihilation[int(Port::loss_a)] = m_ea;
  for (int p = 0; p < port_count; ++p) {
    out.annihilation[p] += m_p * probe_in.annihilation[p];
    out.creation[p] += m_p * probe_in.creation[p];
  }

  // Anti-squeezer: eps_final = sqrt(G') out - sqrt(G'-1) eps_A^dag.
  ModeCoefficients fin;
  for (int p = 0; p < port_count; ++p) {
    fin.annihilation[p] = sq_gp * out.annihilation[p] - sq_gp1 * ancilla_dag.annihilation[p];
    fin.creation[p] = sq_gp * out.creation[p] - sq_gp1 * ancilla_dag.creation[p];
  }

  const std::array<double, port_count> occ = {0.0, occupations.n_p0, occupations.n_a0,
                                              occupations.n_em, occupations.n_ea};
  MomentSet m;
  for (int p = 0; p < port_count; ++p) {
    m.annihilation_sq[p] = std::norm(fin.annihilation[p]);
    m.creation_sq[p] = std::norm(fin.creation[p]);
    m.bogoliubov_sum += m.annihilation_sq[p] - m.creation_sq[p];
    if (p != int(Port::signal)) m.noise_moment += m.annihilation_sq[p] * occ[p];
    m.noise_moment += m.creation_sq[p] * (occ[p] + 1.0);
  }
  m.tau = m.annihilation_sq[int(Port::signal)];
  return m;
}

CapacityResult oracle_capacity(const EOParams& params, double detuning,
                               const SqueezerPair& squeezers,
                               const PortOccupations& occupations,
                               double rdp_tolerance) {
  const NumericTransfer t = numeric_transfer(params, detuning);
  const MomentSet m = squeeze_compose_numeric(t, squeezers, occupations);
  ChannelDescriptor d;
  d.tau = m.tau;
  d.kind = classify(m.tau, rdp_tolerance);
  d.n_e = std::numeric_limits<double>::quiet_NaN();
  d.sigma2 = std::numeric_limits<double>::quiet_NaN();
  if (d.kind == ChannelKind::random_displacement) {
    d.sigma2 = 2.0 * m.noise_moment;
  } else if (d.kind == ChannelKind::generalized_loss) {
    d.n_e = m.noise_moment / (1.0 - m.tau);
  } else {
    d.n_e = m.noise_moment / (m.tau - 1.0) - 1.0;
  }
  return q_lb(d);
}

}  // namespace eaqt::oracle
