#include "eaqt/eaqt.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "core/capacity.hpp"
#include "core/channel.hpp"
#include "core/config.hpp"
#include "core/csv.hpp"
#include "core/eo_system.hpp"
#include "core/errors.hpp"
#include "core/oracle.hpp"
#include "core/sweep.hpp"

namespace {

thread_local std::string last_error_message;

void set_error(const std::string& message) { last_error_message = message; }

/// Runs the body, translating C++ exceptions to status codes.
template <typename Fn>
eaqt_status guarded(Fn&& fn) {
  try {
    fn();
    last_error_message.clear();
    return EAQT_OK;
  } catch (const eaqt::branch_error& e) {
    set_error(e.what());
    return EAQT_ERR_BRANCH;
  } catch (const eaqt::config_error& e) {
    set_error(e.what());
    return EAQT_ERR_CONFIG;
  } catch (const eaqt::numerical_error& e) {
    set_error(e.what());
    return EAQT_ERR_NUMERICAL;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return EAQT_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return EAQT_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return EAQT_ERR_NUMERICAL;
  }
}

eaqt_status null_argument(const char* what) {
  set_error(std::string("null argument: ") + what);
  return EAQT_ERR_INVALID_ARGUMENT;
}

eaqt::EOParams to_core(const eaqt_params& p) {
  eaqt::EOParams out;
  out.g = p.g;
  out.kappa_m_c = p.kappa_m_c;
  out.kappa_m_i = p.kappa_m_i;
  out.kappa_a_c = p.kappa_a_c;
  out.kappa_a_i = p.kappa_a_i;
  out.omega_m = p.omega_m;
  out.omega_o = p.omega_o;
  out.temperature = p.temperature;
  return out;
}

eaqt_transfer to_c(const eaqt::TransferCoefficients& t) {
  eaqt_transfer out;
  out.detuning = t.detuning;
  out.t_s[0] = t.t_s.real();
  out.t_s[1] = t.t_s.imag();
  out.t_p[0] = t.t_p.real();
  out.t_p[1] = t.t_p.imag();
  out.t_em[0] = t.t_em.real();
  out.t_em[1] = t.t_em.imag();
  out.t_ea[0] = t.t_ea.real();
  out.t_ea[1] = t.t_ea.imag();
  out.eta = t.eta;
  out.kappa_p = t.kappa_p;
  out.kappa_em = t.kappa_em;
  out.kappa_ea = t.kappa_ea;
  return out;
}

eaqt::TransferCoefficients from_c(const eaqt_transfer& t) {
  eaqt::TransferCoefficients out;
  out.detuning = t.detuning;
  out.t_s = {t.t_s[0], t.t_s[1]};
  out.t_p = {t.t_p[0], t.t_p[1]};
  out.t_em = {t.t_em[0], t.t_em[1]};
  out.t_ea = {t.t_ea[0], t.t_ea[1]};
  out.eta = t.eta;
  out.kappa_p = t.kappa_p;
  out.kappa_em = t.kappa_em;
  out.kappa_ea = t.kappa_ea;
  return out;
}

eaqt::SqueezerPair from_c(const eaqt_squeezers& s) { return {s.g, s.g_prime}; }

eaqt::PortOccupations from_c(const eaqt_occupations& o) {
  return {o.n_p0, o.n_a0, o.n_em, o.n_ea};
}

eaqt_capacity to_c(const eaqt::CapacityResult& r) {
  eaqt_capacity out;
  out.q_lb = r.q_lb;
  out.branch = static_cast<int>(r.branch);
  out.clamped = r.clamped ? 1 : 0;
  out.boundary_warning = r.boundary_warning ? 1 : 0;
  return out;
}

double resolve_rdp_tol(double tolerance) {
  return tolerance > 0.0 ? tolerance : eaqt::default_rdp_tolerance;
}

}  // namespace

struct eaqt_system {
  eaqt::EOParams params;
};

struct eaqt_sweep {
  eaqt::ConfigMap config;
};

extern "C" {

const char* eaqt_status_name(eaqt_status status) {
  switch (status) {
    case EAQT_OK: return "EAQT_OK";
    case EAQT_ERR_INVALID_ARGUMENT: return "EAQT_ERR_INVALID_ARGUMENT";
    case EAQT_ERR_DOMAIN: return "EAQT_ERR_DOMAIN";
    case EAQT_ERR_BRANCH: return "EAQT_ERR_BRANCH";
    case EAQT_ERR_NUMERICAL: return "EAQT_ERR_NUMERICAL";
    case EAQT_ERR_CONFIG: return "EAQT_ERR_CONFIG";
    case EAQT_ERR_IO: return "EAQT_ERR_IO";
  }
  return "EAQT_ERR_UNKNOWN";
}

const char* eaqt_last_error(void) { return last_error_message.c_str(); }

const char* eaqt_version(void) { return "1.0.0"; }

eaqt_status eaqt_thermal_occupation(double omega, double temperature, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = eaqt::thermal_occupation(omega, temperature); });
}

eaqt_status eaqt_gain_from_db(double value_db, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = eaqt::gain_from_db(value_db); });
}

eaqt_status eaqt_eta_resonant(double c_g, double zeta_m, double zeta_a, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = eaqt::eta_resonant(c_g, zeta_m, zeta_a); });
}

eaqt_status eaqt_kappa_p_resonant(double c_g, double zeta_m, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = eaqt::kappa_p_resonant(c_g, zeta_m); });
}

eaqt_status eaqt_gprime_pure_loss(double g, double kappa_p, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = eaqt::gprime_pure_loss(g, kappa_p); });
}

eaqt_status eaqt_gprime_pure_amp(double g, double kappa_p, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = eaqt::gprime_pure_amp(g, kappa_p); });
}

eaqt_status eaqt_g_func(double n, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = eaqt::g_func(n); });
}

eaqt_status eaqt_system_create(const eaqt_params* params, eaqt_system** out) {
  if (!params) return null_argument("params");
  if (!out) return null_argument("out");
  return guarded([&] {
    eaqt::EOParams p = to_core(*params);
    p.validate();
    *out = new eaqt_system{p};
  });
}

eaqt_status eaqt_system_create_resonant(double c_g, double zeta_m, double zeta_a,
                                        double temperature, eaqt_system** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new eaqt_system{eaqt::params_for_cooperativity(
        c_g, zeta_m, zeta_a, eaqt::default_kappa_ref, eaqt::default_omega_m,
        eaqt::default_omega_o, temperature)};
  });
}

eaqt_status eaqt_system_create_from_eta(double eta, double zeta_m, double zeta_a,
                                        double temperature, eaqt_system** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    const double c_g = eaqt::cooperativity_for_eta(eta, zeta_m, zeta_a);
    *out = new eaqt_system{eaqt::params_for_cooperativity(
        c_g, zeta_m, zeta_a, eaqt::default_kappa_ref, eaqt::default_omega_m,
        eaqt::default_omega_o, temperature)};
  });
}

void eaqt_system_destroy(eaqt_system* system) { delete system; }

eaqt_status eaqt_system_params(const eaqt_system* system, eaqt_params* out) {
  if (!system) return null_argument("system");
  if (!out) return null_argument("out");
  const eaqt::EOParams& p = system->params;
  *out = {p.g,       p.kappa_m_c, p.kappa_m_i, p.kappa_a_c,
          p.kappa_a_i, p.omega_m,   p.omega_o,   p.temperature};
  last_error_message.clear();
  return EAQT_OK;
}

eaqt_status eaqt_system_derived(const eaqt_system* system, eaqt_derived* out) {
  if (!system) return null_argument("system");
  if (!out) return null_argument("out");
  return guarded([&] {
    const eaqt::DerivedEOQuantities d = eaqt::derived_quantities(system->params);
    *out = {d.kappa_m, d.kappa_a, d.c_g, d.zeta_m, d.zeta_a, d.n_m, d.n_a};
  });
}

eaqt_status eaqt_system_transfer(const eaqt_system* system, double detuning,
                                 eaqt_transfer* out) {
  if (!system) return null_argument("system");
  if (!out) return null_argument("out");
  return guarded(
      [&] { *out = to_c(eaqt::transfer_coefficients(system->params, detuning)); });
}

eaqt_status eaqt_system_occupations(const eaqt_system* system, int thermal_probe,
                                    eaqt_occupations* out) {
  if (!system) return null_argument("system");
  if (!out) return null_argument("out");
  return guarded([&] {
    const eaqt::PortOccupations o =
        eaqt::bath_occupations(system->params, thermal_probe != 0);
    *out = {o.n_p0, o.n_a0, o.n_em, o.n_ea};
  });
}

eaqt_status eaqt_compose(const eaqt_transfer* transfer, const eaqt_squeezers* squeezers,
                         eaqt_noise_coefficients* out) {
  if (!transfer) return null_argument("transfer");
  if (!squeezers) return null_argument("squeezers");
  if (!out) return null_argument("out");
  return guarded([&] {
    const eaqt::NoiseCoefficients n = eaqt::compose(from_c(*transfer), from_c(*squeezers));
    *out = {n.s, n.c_p, n.c_a, n.l_m, n.l_a};
  });
}

eaqt_status eaqt_describe_channel(const eaqt_transfer* transfer,
                                  const eaqt_squeezers* squeezers,
                                  const eaqt_occupations* occupations,
                                  double rdp_tolerance, eaqt_channel* out) {
  if (!transfer) return null_argument("transfer");
  if (!squeezers) return null_argument("squeezers");
  if (!occupations) return null_argument("occupations");
  if (!out) return null_argument("out");
  return guarded([&] {
    const eaqt::NoiseCoefficients n = eaqt::compose(from_c(*transfer), from_c(*squeezers));
    const eaqt::ChannelDescriptor d =
        eaqt::describe_channel(n, from_c(*occupations), resolve_rdp_tol(rdp_tolerance));
    *out = {static_cast<int>(d.kind), static_cast<int>(d.special), d.tau, d.n_e,
            d.sigma2};
  });
}

eaqt_status eaqt_capacity_from_channel(const eaqt_channel* channel, eaqt_capacity* out) {
  if (!channel) return null_argument("channel");
  if (!out) return null_argument("out");
  return guarded([&] {
    eaqt::ChannelDescriptor d;
    if (channel->kind < 0 || channel->kind > 2)
      throw std::invalid_argument("eaqt_channel.kind out of range");
    d.kind = static_cast<eaqt::ChannelKind>(channel->kind);
    d.special = static_cast<eaqt::ChannelSpecial>(channel->special);
    d.tau = channel->tau;
    d.n_e = channel->n_e;
    d.sigma2 = channel->sigma2;
    *out = to_c(eaqt::q_lb(d));
  });
}

eaqt_status eaqt_oracle_capacity(const eaqt_system* system, double detuning,
                                 const eaqt_squeezers* squeezers, int thermal_probe,
                                 double rdp_tolerance, eaqt_capacity* out) {
  if (!system) return null_argument("system");
  if (!squeezers) return null_argument("squeezers");
  if (!out) return null_argument("out");
  return guarded([&] {
    const eaqt::PortOccupations occ =
        eaqt::bath_occupations(system->params, thermal_probe != 0);
    *out = to_c(eaqt::oracle::oracle_capacity(system->params, detuning,
                                              from_c(*squeezers), occ,
                                              resolve_rdp_tol(rdp_tolerance)));
  });
}

eaqt_status eaqt_sweep_create(eaqt_sweep** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new eaqt_sweep; });
}

void eaqt_sweep_destroy(eaqt_sweep* sweep) { delete sweep; }

eaqt_status eaqt_sweep_load_file(eaqt_sweep* sweep, const char* path) {
  if (!sweep) return null_argument("sweep");
  if (!path) return null_argument("path");
  return guarded(
      [&] { sweep->config.merge_from(eaqt::parse_config_file(path)); });
}

eaqt_status eaqt_sweep_set(eaqt_sweep* sweep, const char* key, const char* value) {
  if (!sweep) return null_argument("sweep");
  if (!key) return null_argument("key");
  if (!value) return null_argument("value");
  return guarded([&] {
    if (std::strlen(key) == 0) throw std::invalid_argument("empty configuration key");
    sweep->config.set(key, value);
  });
}

eaqt_status eaqt_sweep_get(const eaqt_sweep* sweep, const char* key, char* buffer,
                           size_t buffer_length) {
  if (!sweep) return null_argument("sweep");
  if (!key) return null_argument("key");
  if (!buffer) return null_argument("buffer");
  const std::optional<std::string> value = sweep->config.peek(key);
  const std::string& text = value ? *value : std::string();
  if (text.size() + 1 > buffer_length) {
    set_error("buffer too small for value of '" + std::string(key) + "'");
    return EAQT_ERR_INVALID_ARGUMENT;
  }
  std::memcpy(buffer, text.c_str(), text.size() + 1);
  last_error_message.clear();
  return EAQT_OK;
}

eaqt_status eaqt_sweep_run_to_file(eaqt_sweep* sweep, const char* out_path) {
  if (!sweep) return null_argument("sweep");
  if (!out_path) return null_argument("out_path");
  eaqt::SweepOutput output;
  const eaqt_status status = guarded([&] { output = eaqt::run_sweep(sweep->config); });
  if (status != EAQT_OK) return status;
  const eaqt_status write_status =
      guarded([&] { eaqt::write_file(out_path, output.text); });
  if (write_status != EAQT_OK) return EAQT_ERR_IO;
  if (!output.ok) {
    set_error(output.message);
    return EAQT_ERR_NUMERICAL;
  }
  return EAQT_OK;
}

eaqt_status eaqt_sweep_run_to_buffer(eaqt_sweep* sweep, char** out_text,
                                     size_t* out_length) {
  if (!sweep) return null_argument("sweep");
  if (!out_text) return null_argument("out_text");
  eaqt::SweepOutput output;
  const eaqt_status status = guarded([&] { output = eaqt::run_sweep(sweep->config); });
  if (status != EAQT_OK) return status;
  char* buffer = static_cast<char*>(std::malloc(output.text.size() + 1));
  if (!buffer) {
    set_error("out of memory");
    return EAQT_ERR_NUMERICAL;
  }
  std::memcpy(buffer, output.text.data(), output.text.size());
  buffer[output.text.size()] = '\0';
  *out_text = buffer;
  if (out_length) *out_length = output.text.size();
  if (!output.ok) {
    set_error(output.message);
    return EAQT_ERR_NUMERICAL;
  }
  return EAQT_OK;
}

void eaqt_buffer_free(char* buffer) { std::free(buffer); }

}  // extern "C"
