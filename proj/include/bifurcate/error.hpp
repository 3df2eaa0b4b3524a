#pragma once

#include <stdexcept>
#include <string>

namespace bifurcate {

/// Malformed or contract-violating input supplied by the caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input violating a problem's non-degeneracy assumption, such as a tower
/// pair that sees each other at every positive height.
class DegenerateError : public InputError {
 public:
  using InputError::InputError;
};

/// Input is well formed but the optimization problem has no meaningful
/// answer (rank out of range, zero-potential tower pair, ...).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ProblemInstance broke its capability contract, e.g. a simulation that
/// does not replay deterministically.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The engine could not finish (round caps exhausted and similar).
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bifurcate
