#pragma once

#include <stdexcept>
#include <string>

namespace nilalg {

/// Malformed or out-of-range input (bad parameters, mismatched fields or dimensions).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size guard was exceeded before or during a search.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nilalg
