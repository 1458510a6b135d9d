// Command-line front end for the transducer channel toolkit. Subcommands map
// one-to-one onto sweep modes; everything runs through the shared-library C
// interface.

#include <CLI11.hpp>
#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "eaqt/eaqt.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_config_error = 2;
constexpr int exit_numerical_error = 3;

struct SweepDeleter {
  void operator()(eaqt_sweep* s) const { eaqt_sweep_destroy(s); }
};
using SweepHandle = std::unique_ptr<eaqt_sweep, SweepDeleter>;

struct PendingOption {
  std::string key;
  std::string value;
};

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Flags shared by every subcommand plus a per-mode key mapping.
struct CommandSpec {
  CLI::App* app = nullptr;
  std::string mode;
  std::string config_path;
  std::string out_path;
  std::vector<PendingOption> pending;

  void add_key_option(const std::string& flag, const std::string& key,
                      const std::string& description) {
    app->add_option_function<std::string>(
        flag,
        [this, key](const std::string& value) {
          pending.push_back({key, value});
        },
        description);
  }

  void add_key_flag(const std::string& flag, const std::string& key,
                    const std::string& description) {
    app->add_flag_function(
        flag,
        [this, key](std::int64_t count) {
          if (count > 0) pending.push_back({key, "true"});
        },
        description);
  }
};

int fail(eaqt_status status) {
  std::fprintf(stderr, "error: %s (%s)\n", eaqt_last_error(), eaqt_status_name(status));
  switch (status) {
    case EAQT_ERR_NUMERICAL:
      return exit_numerical_error;
    default:
      return exit_config_error;
  }
}

int run_command(const CommandSpec& cmd) {
  eaqt_sweep* raw = nullptr;
  if (eaqt_status s = eaqt_sweep_create(&raw); s != EAQT_OK) return fail(s);
  SweepHandle sweep(raw);

  if (!cmd.config_path.empty())
    if (eaqt_status s = eaqt_sweep_load_file(sweep.get(), cmd.config_path.c_str());
        s != EAQT_OK)
      return fail(s);
  if (eaqt_status s = eaqt_sweep_set(sweep.get(), "sweep.mode", cmd.mode.c_str());
      s != EAQT_OK)
    return fail(s);
  for (const PendingOption& opt : cmd.pending)
    if (eaqt_status s = eaqt_sweep_set(sweep.get(), opt.key.c_str(), opt.value.c_str());
        s != EAQT_OK)
      return fail(s);

  std::string out_path = cmd.out_path;
  if (out_path.empty()) {
    char buffer[4096];
    if (eaqt_status s = eaqt_sweep_get(sweep.get(), "sweep.out", buffer, sizeof buffer);
        s != EAQT_OK)
      return fail(s);
    out_path = buffer;
  }

  if (out_path.empty()) {
    char* text = nullptr;
    size_t length = 0;
    const eaqt_status s = eaqt_sweep_run_to_buffer(sweep.get(), &text, &length);
    if (text) {
      std::fwrite(text, 1, length, stdout);
      eaqt_buffer_free(text);
    }
    if (s != EAQT_OK) return fail(s);
    return exit_ok;
  }
  if (eaqt_status s = eaqt_sweep_run_to_file(sweep.get(), out_path.c_str());
      s != EAQT_OK)
    return fail(s);
  return exit_ok;
}

CommandSpec* make_command(CLI::App& app, std::vector<std::unique_ptr<CommandSpec>>& out,
                          const std::string& name, const std::string& description) {
  auto spec = std::make_unique<CommandSpec>();
  spec->app = app.add_subcommand(name, description);
  spec->mode = name;
  spec->app->add_option("--config", spec->config_path,
                        "Run-configuration file (key = value with [section] headers)");
  spec->app->add_option("--out", spec->out_path,
                        "Output path (default: sweep.out from config, else stdout)");
  spec->add_key_option("--rdp-tol", "sweep.rdp_tol",
                       "Half-width of the |tau-1| band classified as RDP");
  spec->add_key_flag("--oracle", "sweep.oracle",
                     "Cross-validate every row against the numeric pipeline");
  spec->add_key_flag("--thermal-probe", "sweep.thermal_probe",
                     "Thermalize probe and ancilla at the microwave occupation");
  out.push_back(std::move(spec));
  return out.back().get();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement-assisted electro-optic transducer channel sweeps"};
  app.set_version_flag("--version", std::string(eaqt_version()));
  app.require_subcommand(1);

  std::vector<std::unique_ptr<CommandSpec>> specs;

  CommandSpec* resonant = make_command(
      app, specs, "resonant", "Bare-channel efficiency and capacity vs cooperativity");
  resonant->add_key_option("--temp", "system.temperature", "Bath temperature (K)");
  resonant->add_key_option("--zeta-m", "system.zeta_m", "Microwave coupling ratio");
  resonant->add_key_option("--zeta-a", "system.zeta_a", "Optical coupling ratio");

  CommandSpec* grid = make_command(
      app, specs, "grid", "Capacity over the (G in dB, G') squeezer-strength grid");
  grid->add_key_option("--eta", "system.eta", "Resonant transduction efficiency");
  grid->add_key_option("--temp", "system.temperature", "Bath temperature (K)");
  grid->add_key_option("--zeta-m", "system.zeta_m", "Microwave coupling ratio");
  grid->add_key_option("--zeta-a", "system.zeta_a", "Optical coupling ratio");

  CommandSpec* slice = make_command(
      app, specs, "slice",
      "Capacity along one squeezer axis with the other fixed; marks PL/RDP/PA");
  slice->add_key_option("--eta", "system.eta", "Resonant transduction efficiency");
  slice->add_key_option("--temp", "system.temperature", "Bath temperature (K)");
  slice->add_key_option("--zeta-m", "system.zeta_m", "Microwave coupling ratio");
  slice->add_key_option("--zeta-a", "system.zeta_a", "Optical coupling ratio");
  slice->app->add_option_function<double>(
      "--g-db",
      [slice](double v) {
        slice->pending.push_back({"slice.fix", "g_db"});
        slice->pending.push_back({"slice.value", format_value(v)});
      },
      "Fix G at this dB value and sweep G'");
  slice->app->add_option_function<double>(
      "--gprime",
      [slice](double v) {
        slice->pending.push_back({"slice.fix", "gprime"});
        slice->pending.push_back({"slice.value", format_value(v)});
      },
      "Fix G' at this linear value and sweep G");

  CommandSpec* bandwidth = make_command(
      app, specs, "bandwidth",
      "Capacity vs detuning for bare and assisted operation (per-omega PL tuning)");
  bandwidth->add_key_option("--temp", "system.temperature", "Bath temperature (K)");
  bandwidth->add_key_option("--zeta-m", "system.zeta_m", "Microwave coupling ratio");
  bandwidth->add_key_option("--zeta-a", "system.zeta_a", "Optical coupling ratio");
  bandwidth->add_key_option("--g-db", "bandwidth.g_db_list",
                            "Comma-separated squeezer strengths in dB");
  bandwidth->add_key_option("--gprime", "bandwidth.fixed_gprime",
                            "Use this fixed G' instead of per-omega PL tuning");

  CommandSpec* boundary = make_command(
      app, specs, "boundary", "Bisect the Q_LB > 0 boundary in G' per G column");
  boundary->add_key_option("--eta", "system.eta", "Resonant transduction efficiency");
  boundary->add_key_option("--temp", "system.temperature", "Bath temperature (K)");
  boundary->add_key_option("--zeta-m", "system.zeta_m", "Microwave coupling ratio");
  boundary->add_key_option("--zeta-a", "system.zeta_a", "Optical coupling ratio");

  CommandSpec* oracle = make_command(
      app, specs, "oracle-check",
      "Random-draw equivalence report: analytic vs numeric pipelines");
  oracle->add_key_option("--draws", "oracle.draws", "Number of random draws");
  oracle->add_key_option("--seed", "oracle.seed", "Random seed");

  CLI11_PARSE(app, argc, argv);

  for (const auto& spec : specs)
    if (spec->app->parsed()) return run_command(*spec);
  return exit_config_error;
}
