#pragma once

#include <string>

#include "core/config.hpp"

namespace eaqt {

enum class SweepMode { resonant, grid, slice, bandwidth, boundary, oracle_check };

SweepMode sweep_mode_from_string(const std::string& name);
const char* to_string(SweepMode mode);

/// Result of a sweep run. `ok` is false only when an oracle cross-validation
/// exceeded its tolerances; the report text is still complete in that case.
struct SweepOutput {
  std::string text;
  bool ok = true;
  std::string message;
};

/// Runs the sweep described by the configuration and returns the flat-file
/// text. Identical configurations produce byte-identical output. Throws
/// config_error for unknown/invalid keys and numerical_error when an emitted
/// row violates the normalization or commutator invariants.
SweepOutput run_sweep(ConfigMap config);

}  // namespace eaqt
