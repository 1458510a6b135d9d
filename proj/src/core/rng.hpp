#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace eaqt {

/// Deterministic uniform generator. Draws come straight from the
/// standard-specified mt19937_64 stream, so sequences are reproducible
/// across compilers and platforms (std distributions are not).
class UniformRng {
 public:
  explicit UniformRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double in(double lo, double hi) { return lo + (hi - lo) * next(); }

  /// Log-uniform in [lo, hi), lo > 0.
  double log_in(double lo, double hi) {
    return std::exp(in(std::log(lo), std::log(hi)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace eaqt
