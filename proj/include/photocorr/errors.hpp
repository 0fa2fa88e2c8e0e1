#pragma once

#include <stdexcept>
#include <string>

namespace photocorr {

/// Input outside the mathematical domain of an operation (bad angle, odd N
/// passed to an even-only routine, empty range, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A computation refused because its size exceeds a configured cap
/// (factorial or exponential cost).
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure: degenerate least-squares system, too few statistics.
class FitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent scenario / command-line configuration.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace photocorr
