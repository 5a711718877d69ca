#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace heavenlift {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Branch-cut or zero-argument violation in an analytic operation, or an
// evaluation request at a point outside a family's domain of definition.
// Carries the offending constant term so callers can log or resample.
struct SingularPointError : Error {
  std::complex<double> offending;
  SingularPointError(const std::string& what, std::complex<double> value)
      : Error(what + " (offending value " + std::to_string(value.real()) + "+" +
              std::to_string(value.imag()) + "i)"),
        offending(value) {}
};

struct ChartMismatchError : Error {
  using Error::Error;
};

// Newton or quadrature failed to reach tolerance within its budget.
struct ConvergenceError : Error {
  using Error::Error;
};

// Configuration validation failure; `issues` lists every violation with its
// config path so users can fix them all in one pass.
struct ConfigError : Error {
  std::vector<std::string> issues;
  explicit ConfigError(std::vector<std::string> list)
      : Error(join(list)), issues(std::move(list)) {}

 private:
  static std::string join(const std::vector<std::string>& list) {
    std::string s = "invalid configuration:";
    for (const auto& item : list) s += "\n  - " + item;
    return s;
  }
};

}  // namespace heavenlift
