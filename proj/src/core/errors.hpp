#pragma once

#include <stdexcept>
#include <string>

namespace eaqt {

/// A quantity was requested from the wrong channel branch (e.g. the
/// loss/amplification noise formula on a random-displacement channel).
class branch_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Configuration parse or validation failure. Carries the 1-based source
/// line when the offending entry came from a file.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& message, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Numerical failure: singular linear system, non-finite intermediate, or a
/// cross-validation mismatch between the analytic and numeric pipelines.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eaqt
