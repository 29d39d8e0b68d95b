#pragma once

#include <stdexcept>
#include <string>

namespace genalg {

/// Malformed or out-of-contract input (bad parameters, field mismatch,
/// dimension mismatch, unparsable files). The CLI maps it to exit code 3.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A budgeted computation ran out of budget before reaching a verdict.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always a bug or a corrupted input
/// that slipped past validation.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace genalg
