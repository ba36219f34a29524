#pragma once

#include <stdexcept>
#include <string>

namespace starcut {

/// Malformed or out-of-range input (bad vertex id, disconnected graph where a
/// connected one is required, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is well formed but an operation's precondition does not hold,
/// e.g. asking for a diameter cut of a graph with diameter below 4.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// Text that does not parse as graph6 / edge-list.
class FormatError : public InputError {
 public:
  using InputError::InputError;
};

/// A file could not be opened or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructive procedure reached a state its correctness argument rules
/// out. Never swallowed: it signals a gap between the construction and the
/// combinatorial claim it implements.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace starcut
