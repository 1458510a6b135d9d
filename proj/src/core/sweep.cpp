#include "core/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <vector>

#include "core/capacity.hpp"
#include "core/channel.hpp"
#include "core/csv.hpp"
#include "core/eo_system.hpp"
#include "core/errors.hpp"
#include "core/oracle.hpp"
#include "core/rng.hpp"

namespace eaqt {

namespace {

constexpr double row_sum_check = 1e-9;
constexpr double commutator_check = 1e-10;

// ---------------------------------------------------------------------------
// axes

struct AxisSpec {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
  enum class Spacing { linear, log, db } spacing = Spacing::linear;

  std::vector<double> values() const {
    std::vector<double> v(points);
    if (spacing == Spacing::log) {
      const double l0 = std::log(min), l1 = std::log(max);
      for (int i = 0; i < points; ++i)
        v[i] = std::exp(l0 + (l1 - l0) * i / (points - 1));
    } else {
      for (int i = 0; i < points; ++i) v[i] = min + (max - min) * i / (points - 1);
      if (spacing == Spacing::db)
        for (double& x : v) x = gain_from_db(x);
    }
    return v;
  }

  double step() const { return (max - min) / (points - 1); }
};

AxisSpec read_axis(ConfigMap& cfg, const std::string& name, double def_min,
                   double def_max, int def_points, AxisSpec::Spacing def_spacing,
                   bool allow_db = false) {
  AxisSpec a;
  const std::string prefix = "axis." + name + ".";
  a.min = cfg.get_double(prefix + "min", def_min);
  a.max = cfg.get_double(prefix + "max", def_max);
  a.points = cfg.get_int(prefix + "points", def_points);
  std::string spacing = cfg.get_string(prefix + "spacing", "");
  if (spacing.empty()) {
    a.spacing = def_spacing;
  } else if (spacing == "linear") {
    a.spacing = AxisSpec::Spacing::linear;
  } else if (spacing == "log") {
    a.spacing = AxisSpec::Spacing::log;
  } else if (spacing == "db" && allow_db) {
    a.spacing = AxisSpec::Spacing::db;
  } else {
    throw config_error("axis '" + name + "': unsupported spacing '" + spacing + "'");
  }
  if (!(a.min < a.max))
    throw config_error("axis '" + name + "': min must be < max");
  if (a.points < 2) throw config_error("axis '" + name + "': need at least 2 points");
  if (a.spacing == AxisSpec::Spacing::log && !(a.min > 0.0))
    throw config_error("axis '" + name + "': log spacing needs min > 0");
  return a;
}

// ---------------------------------------------------------------------------
// shared run context

struct RunSettings {
  double rdp_tol = default_rdp_tolerance;
  bool oracle = false;
  bool thermal_probe = false;
  double omega_m = default_omega_m;
  double omega_o = default_omega_o;
};

RunSettings read_settings(ConfigMap& cfg) {
  RunSettings s;
  s.rdp_tol = cfg.get_double("sweep.rdp_tol", default_rdp_tolerance);
  if (!(s.rdp_tol > 0.0)) throw config_error("sweep.rdp_tol must be > 0");
  s.oracle = cfg.get_bool("sweep.oracle", false);
  s.thermal_probe = cfg.get_bool("sweep.thermal_probe", false);
  s.omega_m = cfg.get_double("system.omega_m", default_omega_m);
  s.omega_o = cfg.get_double("system.omega_o", default_omega_o);
  cfg.get_string("sweep.out", "");  // resolved by the caller
  return s;
}

/// One grid point of the composed transducer channel.
struct PointEval {
  TransferCoefficients transfer;
  NoiseCoefficients coeffs;
  ChannelDescriptor descriptor;
  CapacityResult capacity;
  double comm_residual = 0.0;
};

double commutator_residual(const NoiseCoefficients& c) {
  const double cp2 = c.c_p * c.c_p;
  const double ca2 = c.c_a * c.c_a;
  const double l2 = c.l_m * c.l_m + c.l_a * c.l_a;
  const double lhs = cp2 - ca2 + l2;
  const double rhs = 1.0 - c.tau();
  const double scale = std::max({1.0, cp2, ca2, l2, std::fabs(rhs)});
  return std::fabs(lhs - rhs) / scale;
}

PointEval evaluate_point(const EOParams& params, double detuning,
                         const SqueezerPair& squeezers, const PortOccupations& occ,
                         double rdp_tol) {
  PointEval e;
  e.transfer = transfer_coefficients(params, detuning);
  const double row_sum =
      e.transfer.eta + e.transfer.kappa_p + e.transfer.kappa_em + e.transfer.kappa_ea;
  if (std::fabs(row_sum - 1.0) > row_sum_check)
    throw numerical_error("transfer normalization violated at emit time");
  e.coeffs = compose(e.transfer, squeezers);
  e.comm_residual = commutator_residual(e.coeffs);
  if (e.comm_residual > commutator_check)
    throw numerical_error("commutator invariant violated at emit time");
  e.descriptor = describe_channel(e.coeffs, occ, rdp_tol);
  e.capacity = q_lb(e.descriptor);
  return e;
}

// Relative agreement with an absolute floor for quantities that vanish.
bool agree(double a, double b, double rel_tol) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  if (scale <= 1e-12) return true;
  return std::fabs(a - b) <= rel_tol * scale;
}

/// Cross-validates one emitted row against the numeric pipeline. The probe
/// and ancilla coefficients (and the noise figures built from them) are
/// differences of large square-root terms, so near an elimination point they
/// are only defined up to roundoff of that term scale; the comparison gets an
/// absolute floor scaled accordingly, on top of the relative tolerance.
void cross_validate(const EOParams& params, double detuning,
                    const SqueezerPair& squeezers, const PortOccupations& occ,
                    const PointEval& row, double rdp_tol) {
  const auto nt = oracle::numeric_transfer(params, detuning);
  const auto mom = oracle::squeeze_compose_numeric(nt, squeezers, occ);
  const double rel = 1e-9;
  const bool transfer_ok =
      agree(row.transfer.eta, std::norm(nt.t_s), rel) &&
      agree(row.transfer.kappa_p, std::norm(nt.t_p), rel) &&
      agree(row.transfer.kappa_em, std::norm(nt.t_em), rel) &&
      agree(row.transfer.kappa_ea, std::norm(nt.t_ea), rel);
  const double term_scale =
      std::max({1.0, row.coeffs.c_p_scale * row.coeffs.c_p_scale,
                row.coeffs.c_a_scale * row.coeffs.c_a_scale});
  auto agree_cancelling = [&](double a, double b, double scale) {
    return agree(a, b, rel) || std::fabs(a - b) <= 1e-12 * scale;
  };
  const bool coeff_ok =
      agree_cancelling(row.coeffs.c_p * row.coeffs.c_p,
                       mom.annihilation_sq[int(oracle::Port::probe0)], term_scale) &&
      agree_cancelling(row.coeffs.c_a * row.coeffs.c_a,
                       mom.creation_sq[int(oracle::Port::ancilla0)], term_scale);
  bool noise_ok = true;
  if (row.descriptor.kind == ChannelKind::random_displacement) {
    noise_ok = agree_cancelling(row.descriptor.sigma2, 2.0 * mom.noise_moment,
                                2.0 * term_scale);
  } else {
    const double n_e_numeric = row.descriptor.tau < 1.0
                                   ? mom.noise_moment / (1.0 - mom.tau)
                                   : mom.noise_moment / (mom.tau - 1.0) - 1.0;
    noise_ok = agree_cancelling(row.descriptor.n_e, n_e_numeric,
                                term_scale / std::fabs(1.0 - row.descriptor.tau));
  }
  const CapacityResult oq = oracle::oracle_capacity(params, detuning, squeezers, occ, rdp_tol);
  const bool q_ok = (std::isinf(row.capacity.q_lb) && std::isinf(oq.q_lb)) ||
                    std::fabs(row.capacity.q_lb - oq.q_lb) <= 1e-9;
  if (!transfer_ok || !coeff_ok || !noise_ok || !q_ok) {
    std::string which = !transfer_ok ? "transfer"
                        : (!coeff_ok ? "coefficients" : (!noise_ok ? "noise" : "q_lb"));
    throw numerical_error(
        "oracle cross-validation failed (" + which + ") at detuning " +
        CsvBuilder::format_double(detuning) + ", G = " +
        CsvBuilder::format_double(squeezers.g) + ", G' = " +
        CsvBuilder::format_double(squeezers.g_prime) + " (dQ = " +
        CsvBuilder::format_double(row.capacity.q_lb - oq.q_lb) + ")");
  }
}

// ---------------------------------------------------------------------------
// system setup

struct SystemSetup {
  EOParams params;
  double c_g = 0.0;
  double zeta_m = 1.0;
  double zeta_a = 1.0;
  /// Exact configured efficiency target when parameterized by eta.
  std::optional<double> eta_target;
};

bool has_device_params(const ConfigMap& cfg) { return cfg.contains("device.g"); }

EOParams read_device_params(ConfigMap& cfg, const RunSettings& s, double temperature) {
  EOParams p;
  p.g = cfg.get_double("device.g", 0.0);
  p.kappa_m_c = cfg.get_double("device.kappa_m_c", 0.0);
  p.kappa_m_i = cfg.get_double("device.kappa_m_i", 0.0);
  p.kappa_a_c = cfg.get_double("device.kappa_a_c", 0.0);
  p.kappa_a_i = cfg.get_double("device.kappa_a_i", 0.0);
  p.omega_m = s.omega_m;
  p.omega_o = s.omega_o;
  p.temperature = temperature;
  p.validate();
  return p;
}

/// Grid/slice/boundary parameterization: explicit device rates, or synthetic
/// rates realizing a target resonant efficiency at the under-coupled
/// cooperativity root.
SystemSetup read_eta_system(ConfigMap& cfg, const RunSettings& s) {
  SystemSetup out;
  const double temperature = cfg.get_double("system.temperature", 0.0);
  if (has_device_params(cfg)) {
    out.params = read_device_params(cfg, s, temperature);
    const auto d = derived_quantities(out.params);
    out.c_g = d.c_g;
    out.zeta_m = d.zeta_m;
    out.zeta_a = d.zeta_a;
    return out;
  }
  out.zeta_m = cfg.get_double("system.zeta_m", 1.0);
  out.zeta_a = cfg.get_double("system.zeta_a", 1.0);
  const double kappa_ref = cfg.get_double("system.kappa_ref", default_kappa_ref);
  const double eta = cfg.get_double("system.eta", 0.1);
  out.eta_target = eta;
  out.c_g = cooperativity_for_eta(eta, out.zeta_m, out.zeta_a);
  out.params = params_for_cooperativity(out.c_g, out.zeta_m, out.zeta_a, kappa_ref,
                                        s.omega_m, s.omega_o, temperature);
  return out;
}

// ---------------------------------------------------------------------------
// row emission

const std::vector<std::string> core_columns = {
    "c_g",   "zeta_m",  "zeta_a", "temperature", "omega", "eta",
    "kappa_p", "kappa_em", "kappa_ea", "g_db",  "g_lin", "gprime",
    "tau",   "kind",    "special", "n_e",        "sigma2", "q_lb",
    "clamped", "comm_residual"};

void emit_core_fields(CsvBuilder& csv, const SystemSetup& sys, double temperature,
                      double omega, const SqueezerPair& sq, const PointEval& e) {
  csv.field(sys.c_g)
      .field(sys.zeta_m)
      .field(sys.zeta_a)
      .field(temperature)
      .field(omega)
      .field(e.transfer.eta)
      .field(e.transfer.kappa_p)
      .field(e.transfer.kappa_em)
      .field(e.transfer.kappa_ea)
      .field(10.0 * std::log10(sq.g))
      .field(sq.g)
      .field(sq.g_prime)
      .field(e.descriptor.tau)
      .field(std::string(to_string(e.descriptor.kind)))
      .field(std::string(to_string(e.descriptor.special)));
  if (e.descriptor.kind == ChannelKind::random_displacement)
    csv.blank().field(e.descriptor.sigma2);
  else
    csv.field(e.descriptor.n_e).blank();
  csv.field(e.capacity.q_lb)
      .field(e.capacity.clamped ? 1 : 0)
      .field(e.comm_residual);
}

void emit_preamble(CsvBuilder& csv, SweepMode mode, const ConfigMap& cfg) {
  csv.comment(std::string("mode=") + to_string(mode));
  for (const std::string& entry : cfg.effective_entries()) csv.comment(entry);
}

std::string format_compact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// mode runners

SweepOutput run_resonant(ConfigMap& cfg, const RunSettings& s, CsvBuilder& csv) {
  const AxisSpec c_axis =
      read_axis(cfg, "c_g", 0.01, 10.0, 201, AxisSpec::Spacing::log);

  std::vector<std::pair<double, double>> zeta_pairs;
  if (cfg.contains("system.zeta_m") || cfg.contains("system.zeta_a")) {
    zeta_pairs.emplace_back(cfg.get_double("system.zeta_m", 1.0),
                            cfg.get_double("system.zeta_a", 1.0));
  } else {
    for (double z : cfg.get_double_list("resonant.zeta_list", {1.0, 0.95, 0.9}))
      zeta_pairs.emplace_back(z, z);
  }
  std::vector<double> temps;
  if (cfg.contains("system.temperature"))
    temps = {cfg.get_double("system.temperature", 0.0)};
  else
    temps = cfg.get_double_list("resonant.temp_list", {0.0, 0.01, 0.3});

  const double kappa_ref = cfg.get_double("system.kappa_ref", default_kappa_ref);
  cfg.reject_unconsumed();

  csv.columns(core_columns);
  const SqueezerPair bare{1.0, 1.0};
  for (const auto& [zm, za] : zeta_pairs) {
    for (double temperature : temps) {
      for (double c : c_axis.values()) {
        SystemSetup sys;
        sys.c_g = c;
        sys.zeta_m = zm;
        sys.zeta_a = za;
        sys.params = params_for_cooperativity(c, zm, za, kappa_ref, s.omega_m,
                                              s.omega_o, temperature);
        const PortOccupations occ = bath_occupations(sys.params, s.thermal_probe);
        const PointEval e = evaluate_point(sys.params, 0.0, bare, occ, s.rdp_tol);
        if (s.oracle) cross_validate(sys.params, 0.0, bare, occ, e, s.rdp_tol);
        emit_core_fields(csv, sys, temperature, 0.0, bare, e);
        csv.end_row();
      }
    }
  }
  return {csv.str(), true, ""};
}

SweepOutput run_grid(ConfigMap& cfg, const RunSettings& s, CsvBuilder& csv) {
  const SystemSetup sys = read_eta_system(cfg, s);
  const AxisSpec g_axis = read_axis(cfg, "g_db", 0.0, 30.0, 201, AxisSpec::Spacing::linear);
  const AxisSpec gp_axis =
      read_axis(cfg, "gprime", 1.0, 20.0, 201, AxisSpec::Spacing::linear, true);
  cfg.reject_unconsumed();

  const PortOccupations occ = bath_occupations(sys.params, s.thermal_probe);
  csv.columns(core_columns);
  for (double g_db : g_axis.values()) {
    const double g_lin = gain_from_db(g_db);
    for (double gp : gp_axis.values()) {
      const SqueezerPair sq{g_lin, gp};
      const PointEval e = evaluate_point(sys.params, 0.0, sq, occ, s.rdp_tol);
      if (s.oracle) cross_validate(sys.params, 0.0, sq, occ, e, s.rdp_tol);
      emit_core_fields(csv, sys, sys.params.temperature, 0.0, sq, e);
      csv.end_row();
    }
  }
  return {csv.str(), true, ""};
}

SweepOutput run_slice(ConfigMap& cfg, const RunSettings& s, CsvBuilder& csv) {
  const SystemSetup sys = read_eta_system(cfg, s);
  const std::string fix = cfg.get_string("slice.fix", "g_db");
  if (fix != "g_db" && fix != "gprime")
    throw config_error("slice.fix must be 'g_db' or 'gprime'");
  const bool fix_g = fix == "g_db";
  const double fixed_value = cfg.get_double("slice.value", fix_g ? 20.0 : 7.0);
  const AxisSpec axis =
      fix_g ? read_axis(cfg, "gprime", 1.0, 20.0, 201, AxisSpec::Spacing::linear, true)
            : read_axis(cfg, "g_db", 0.0, 30.0, 201, AxisSpec::Spacing::linear);
  cfg.reject_unconsumed();

  const PortOccupations occ = bath_occupations(sys.params, s.thermal_probe);
  const TransferCoefficients t0 = transfer_coefficients(sys.params, 0.0);
  const double eta0 = sys.eta_target.value_or(t0.eta);
  const double kp0 = t0.kappa_p;

  // Special squeezer settings in linear-gain units of the free axis.
  std::optional<double> pl_target, rdp_target, pa_target;
  if (fix_g) {
    const double g_fixed = gain_from_db(fixed_value);
    pl_target = gprime_pure_loss(g_fixed, kp0);
    rdp_target = 1.0 / eta0;
    const double pa_denom = (g_fixed - 1.0) - kp0 * g_fixed;
    if (pa_denom > 0.0) pa_target = (g_fixed - 1.0) / pa_denom;
  } else {
    const double gp_fixed = fixed_value;
    const double pl_denom = 1.0 - gp_fixed * (1.0 - kp0);
    if (pl_denom > 0.0 && gp_fixed * kp0 / pl_denom >= 1.0)
      pl_target = gp_fixed * kp0 / pl_denom;
    const double pa_denom = gp_fixed * (1.0 - kp0) - 1.0;
    if (pa_denom > 0.0 && (gp_fixed - 1.0) / pa_denom >= 1.0)
      pa_target = (gp_fixed - 1.0) / pa_denom;
  }

  const std::vector<double> values = axis.values();
  // Row index nearest each special value, for the marker flags. Targets are
  // linear gains; the g_db axis stores dB coordinates.
  auto nearest = [&](std::optional<double> target) -> int {
    if (!target) return -1;
    const double coord = fix_g ? *target : 10.0 * std::log10(*target);
    if (coord < values.front() || coord > values.back()) return -1;
    int best = 0;
    for (size_t i = 1; i < values.size(); ++i)
      if (std::fabs(values[i] - coord) < std::fabs(values[best] - coord)) best = int(i);
    return best;
  };
  const int pl_row = nearest(pl_target);
  const int rdp_row = fix_g ? nearest(rdp_target) : -1;
  const int pa_row = nearest(pa_target);

  std::vector<std::string> cols = core_columns;
  for (const char* extra : {"marker_pl", "marker_rdp", "marker_pa", "pl_target",
                            "rdp_target", "pa_target"})
    cols.push_back(extra);
  csv.columns(cols);

  for (size_t i = 0; i < values.size(); ++i) {
    const SqueezerPair sq = fix_g
                                ? SqueezerPair{gain_from_db(fixed_value), values[i]}
                                : SqueezerPair{gain_from_db(values[i]), fixed_value};
    const PointEval e = evaluate_point(sys.params, 0.0, sq, occ, s.rdp_tol);
    if (s.oracle) cross_validate(sys.params, 0.0, sq, occ, e, s.rdp_tol);
    emit_core_fields(csv, sys, sys.params.temperature, 0.0, sq, e);
    csv.field(int(i) == pl_row ? 1 : 0)
        .field(int(i) == rdp_row ? 1 : 0)
        .field(int(i) == pa_row ? 1 : 0);
    if (pl_target) csv.field(*pl_target); else csv.blank();
    if (fix_g && rdp_target) csv.field(*rdp_target); else csv.blank();
    if (pa_target) csv.field(*pa_target); else csv.blank();
    csv.end_row();
  }
  return {csv.str(), true, ""};
}

SweepOutput run_bandwidth(ConfigMap& cfg, const RunSettings& s, CsvBuilder& csv) {
  const double zeta_m = cfg.get_double("system.zeta_m", 0.999);
  const double zeta_a = cfg.get_double("system.zeta_a", 0.8);
  const double kappa_ref = cfg.get_double("system.kappa_ref", default_kappa_ref);
  const double temperature = cfg.get_double("system.temperature", 0.0);
  std::vector<double> c_list = cfg.get_double_list("bandwidth.c_g_list", {0.2, 0.5, 1.0});
  std::vector<double> g_db_list = cfg.get_double_list("bandwidth.g_db_list", {0.0, 20.0});
  const std::optional<double> fixed_gprime = cfg.maybe_double("bandwidth.fixed_gprime");
  const AxisSpec w_axis =
      read_axis(cfg, "omega", -3.0, 3.0, 201, AxisSpec::Spacing::linear);
  cfg.reject_unconsumed();
  if (fixed_gprime && !(*fixed_gprime >= 1.0))
    throw config_error("bandwidth.fixed_gprime must be >= 1");

  std::vector<std::string> cols = {"curve", "assisted"};
  cols.insert(cols.end(), core_columns.begin(), core_columns.end());
  cols.push_back("omega_over_kappa");
  cols.push_back("bandwidth_over_kappa");
  csv.columns(cols);

  const std::vector<double> w_units = w_axis.values();
  for (double c_g : c_list) {
    for (double g_db : g_db_list) {
      SystemSetup sys;
      sys.c_g = c_g;
      sys.zeta_m = zeta_m;
      sys.zeta_a = zeta_a;
      sys.params = params_for_cooperativity(c_g, zeta_m, zeta_a, kappa_ref, s.omega_m,
                                            s.omega_o, temperature);
      const PortOccupations occ = bath_occupations(sys.params, s.thermal_probe);
      const double kappa = kappa_ref;
      const double g_lin = gain_from_db(g_db);
      const std::string curve = "cg" + format_compact(c_g) + "_g" +
                                format_compact(g_db) + "dB";
      const bool assisted = g_lin > 1.0;

      // Two passes: bandwidth first (it is a per-curve column), then rows.
      std::vector<PointEval> evals;
      evals.reserve(w_units.size());
      std::vector<SqueezerPair> sqs(w_units.size());
      int positive = 0;
      for (size_t i = 0; i < w_units.size(); ++i) {
        const double detuning = w_units[i] * kappa;
        const TransferCoefficients t = transfer_coefficients(sys.params, detuning);
        const double gp = fixed_gprime ? *fixed_gprime
                                       : gprime_pure_loss(g_lin, t.kappa_p);
        sqs[i] = SqueezerPair{g_lin, gp};
        evals.push_back(evaluate_point(sys.params, detuning, sqs[i], occ, s.rdp_tol));
        if (evals.back().capacity.q_lb > 0.0) ++positive;
      }
      const double bandwidth = positive * w_axis.step();

      for (size_t i = 0; i < w_units.size(); ++i) {
        const double detuning = w_units[i] * kappa;
        if (s.oracle)
          cross_validate(sys.params, detuning, sqs[i], occ, evals[i], s.rdp_tol);
        csv.field(curve).field(assisted ? 1 : 0);
        emit_core_fields(csv, sys, temperature, detuning, sqs[i], evals[i]);
        csv.field(w_units[i]).field(bandwidth);
        csv.end_row();
      }
    }
  }
  return {csv.str(), true, ""};
}

SweepOutput run_boundary(ConfigMap& cfg, const RunSettings& s, CsvBuilder& csv) {
  const SystemSetup sys = read_eta_system(cfg, s);
  const AxisSpec g_axis = read_axis(cfg, "g_db", 0.0, 30.0, 201, AxisSpec::Spacing::linear);
  const AxisSpec gp_axis =
      read_axis(cfg, "gprime", 1.0, 20.0, 201, AxisSpec::Spacing::linear, true);
  const double tol = cfg.get_double("boundary.tol", 1e-6);
  if (!(tol > 0.0)) throw config_error("boundary.tol must be > 0");
  cfg.reject_unconsumed();

  const PortOccupations occ = bath_occupations(sys.params, s.thermal_probe);
  csv.columns({"g_db", "g_lin", "branch", "gprime", "tau", "q_lb", "status"});

  const std::vector<double> gps = gp_axis.values();
  for (double g_db : g_axis.values()) {
    const double g_lin = gain_from_db(g_db);
    auto q_at = [&](double gp) {
      const SqueezerPair sq{g_lin, gp};
      return evaluate_point(sys.params, 0.0, sq, occ, s.rdp_tol).capacity.q_lb;
    };
    std::vector<bool> positive(gps.size());
    for (size_t i = 0; i < gps.size(); ++i) positive[i] = q_at(gps[i]) > 0.0;

    std::vector<std::pair<double, double>> brackets;
    for (size_t i = 0; i + 1 < gps.size(); ++i)
      if (positive[i] != positive[i + 1]) brackets.emplace_back(gps[i], gps[i + 1]);

    auto emit_missing = [&](const char* branch) {
      csv.field(g_db).field(g_lin).field(std::string(branch));
      csv.blank().blank().blank();
      csv.field(std::string("no_crossing"));
      csv.end_row();
    };
    auto emit_root = [&](const char* branch, std::pair<double, double> bracket) {
      double lo = bracket.first, hi = bracket.second;
      const bool lo_positive = q_at(lo) > 0.0;
      for (int it = 0; it < 80 && (hi - lo) > 1e-13 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((q_at(mid) > 0.0) == lo_positive)
          lo = mid;
        else
          hi = mid;
      }
      const double root = 0.5 * (lo + hi);
      const SqueezerPair sq_root{g_lin, root};
      const PointEval at_root = evaluate_point(sys.params, 0.0, sq_root, occ, s.rdp_tol);
      if (!(std::fabs(at_root.capacity.q_lb) < tol))
        throw numerical_error("boundary bisection did not converge below tolerance");
      if (s.oracle) cross_validate(sys.params, 0.0, sq_root, occ, at_root, s.rdp_tol);
      csv.field(g_db).field(g_lin).field(std::string(branch));
      csv.field(root).field(at_root.descriptor.tau).field(at_root.capacity.q_lb);
      csv.field(std::string("ok"));
      csv.end_row();
    };

    const bool any_positive = std::any_of(positive.begin(), positive.end(),
                                          [](bool b) { return b; });
    if (brackets.empty()) {
      emit_missing(any_positive ? "lower" : "none");
      if (any_positive) emit_missing("upper");
      continue;
    }
    if (positive.front())
      emit_missing("lower");
    else
      emit_root("lower", brackets.front());
    if (positive.back())
      emit_missing("upper");
    else
      emit_root("upper", brackets.back());
  }
  return {csv.str(), true, ""};
}

SweepOutput run_oracle_check(ConfigMap& cfg, const RunSettings& s, CsvBuilder& csv) {
  const int draws = cfg.get_int("oracle.draws", 1000);
  const std::uint64_t seed =
      static_cast<std::uint64_t>(cfg.get_int("oracle.seed", 20250809));
  const double tol_rel = cfg.get_double("oracle.tol_rel", 1e-9);
  const double tol_bits = cfg.get_double("oracle.tol_bits", 1e-9);
  cfg.reject_unconsumed();
  if (draws < 1) throw config_error("oracle.draws must be >= 1");

  struct Tracker {
    std::string name;
    double tolerance;
    bool relative;
    double max_abs = 0.0;
    double max_rel = 0.0;
    int count = 0;
    void record(double a, double b) {
      ++count;
      const double abs_err = std::fabs(a - b);
      const double scale = std::max(std::fabs(a), std::fabs(b));
      max_abs = std::max(max_abs, abs_err);
      if (scale > 1e-12) max_rel = std::max(max_rel, abs_err / scale);
    }
    bool pass() const { return (relative ? max_rel : max_abs) <= tolerance; }
  };
  std::vector<Tracker> trackers = {
      {"eta", tol_rel, true},     {"kappa_p", tol_rel, true},
      {"kappa_em", tol_rel, true}, {"kappa_ea", tol_rel, true},
      {"c_p_sq", tol_rel, true},  {"c_a_sq", tol_rel, true},
      {"n_e", tol_rel, true},     {"sigma2", tol_rel, true},
      {"q_lb", tol_bits, false},
  };

  UniformRng rng(seed);
  for (int i = 0; i < draws; ++i) {
    const double c_g = rng.log_in(0.01, 10.0);
    const double zm = rng.in(0.5, 1.0);
    const double za = rng.in(0.5, 1.0);
    const double km = rng.log_in(2e5 * std::numbers::pi, 2e7 * std::numbers::pi);
    const double ka = rng.log_in(2e5 * std::numbers::pi, 2e7 * std::numbers::pi);
    EOParams p;
    p.g = 0.5 * std::sqrt(c_g * km * ka);
    p.kappa_m_c = zm * km;
    p.kappa_m_i = (1.0 - zm) * km;
    p.kappa_a_c = za * ka;
    p.kappa_a_i = (1.0 - za) * ka;
    p.omega_m = s.omega_m;
    p.omega_o = s.omega_o;
    p.temperature = (i % 2 == 0) ? 0.0 : rng.in(0.001, 0.3);
    const double w = rng.in(-5.0, 5.0) * std::max(km, ka);
    const SqueezerPair sq{rng.log_in(1.0, 1e3), rng.log_in(1.0, 1e3)};
    const PortOccupations occ = bath_occupations(p, s.thermal_probe);

    const PointEval a = evaluate_point(p, w, sq, occ, s.rdp_tol);
    const auto nt = oracle::numeric_transfer(p, w);
    const auto mom = oracle::squeeze_compose_numeric(nt, sq, occ);
    const CapacityResult oq = oracle::oracle_capacity(p, w, sq, occ, s.rdp_tol);

    trackers[0].record(a.transfer.eta, std::norm(nt.t_s));
    trackers[1].record(a.transfer.kappa_p, std::norm(nt.t_p));
    trackers[2].record(a.transfer.kappa_em, std::norm(nt.t_em));
    trackers[3].record(a.transfer.kappa_ea, std::norm(nt.t_ea));
    trackers[4].record(a.coeffs.c_p * a.coeffs.c_p,
                       mom.annihilation_sq[int(oracle::Port::probe0)]);
    trackers[5].record(a.coeffs.c_a * a.coeffs.c_a,
                       mom.creation_sq[int(oracle::Port::ancilla0)]);
    if (a.descriptor.kind != ChannelKind::random_displacement) {
      const double n_e_numeric =
          a.descriptor.tau < 1.0 ? mom.noise_moment / (1.0 - mom.tau)
                                 : mom.noise_moment / (mom.tau - 1.0) - 1.0;
      trackers[6].record(a.descriptor.n_e, n_e_numeric);
    } else {
      trackers[7].record(a.descriptor.sigma2, 2.0 * mom.noise_moment);
    }
    if (!(std::isinf(a.capacity.q_lb) && std::isinf(oq.q_lb)))
      trackers[8].record(a.capacity.q_lb, oq.q_lb);
  }

  csv.columns({"quantity", "draws", "max_abs_err", "max_rel_err", "tolerance", "pass"});
  bool all_pass = true;
  std::string failed;
  for (const Tracker& t : trackers) {
    csv.field(t.name)
        .field(t.count)
        .field(t.max_abs)
        .field(t.max_rel)
        .field(t.tolerance)
        .field(std::string(t.pass() ? "1" : "0"));
    csv.end_row();
    if (!t.pass()) {
      all_pass = false;
      if (!failed.empty()) failed += ", ";
      failed += t.name;
    }
  }
  return {csv.str(), all_pass,
          all_pass ? "" : "oracle cross-validation exceeded tolerance for: " + failed};
}

}  // namespace

SweepMode sweep_mode_from_string(const std::string& name) {
  if (name == "resonant") return SweepMode::resonant;
  if (name == "grid") return SweepMode::grid;
  if (name == "slice") return SweepMode::slice;
  if (name == "bandwidth") return SweepMode::bandwidth;
  if (name == "boundary") return SweepMode::boundary;
  if (name == "oracle-check") return SweepMode::oracle_check;
  throw config_error("unknown sweep mode '" + name +
                     "' (expected resonant, grid, slice, bandwidth, boundary, "
                     "or oracle-check)");
}

const char* to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::resonant: return "resonant";
    case SweepMode::grid: return "grid";
    case SweepMode::slice: return "slice";
    case SweepMode::bandwidth: return "bandwidth";
    case SweepMode::boundary: return "boundary";
    case SweepMode::oracle_check: return "oracle-check";
  }
  return "?";
}

SweepOutput run_sweep(ConfigMap cfg) {
  const std::string mode_name = cfg.get_string("sweep.mode", "");
  if (mode_name.empty()) throw config_error("sweep.mode is required");
  const SweepMode mode = sweep_mode_from_string(mode_name);
  const RunSettings settings = read_settings(cfg);

  const char* schema = mode == SweepMode::boundary
                           ? "eaqt.boundary.v1"
                           : (mode == SweepMode::oracle_check ? "eaqt.oracle.v1"
                                                              : "eaqt.sweep.v1");
  CsvBuilder csv(schema);
  emit_preamble(csv, mode, cfg);

  switch (mode) {
    case SweepMode::resonant: return run_resonant(cfg, settings, csv);
    case SweepMode::grid: return run_grid(cfg, settings, csv);
    case SweepMode::slice: return run_slice(cfg, settings, csv);
    case SweepMode::bandwidth: return run_bandwidth(cfg, settings, csv);
    case SweepMode::boundary: return run_boundary(cfg, settings, csv);
    case SweepMode::oracle_check: return run_oracle_check(cfg, settings, csv);
  }
  throw config_error("unreachable sweep mode");
}

}  // namespace eaqt
