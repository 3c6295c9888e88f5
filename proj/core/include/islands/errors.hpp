#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace islands {

// Caller-side problems: malformed input, violated preconditions.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input that is not in general position. `witness` holds an affinely
// dependent subset of point ids.
class DegenerateInputError : public PreconditionError {
 public:
  DegenerateInputError(const std::string& what, std::vector<std::size_t> witness)
      : PreconditionError(what), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

// Request exceeds a compiled-in capacity (dimension bound, mask width).
class CapacityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A branch that valid input can never reach was taken.
// Always a bug; the CLI maps it to exit code 3.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace islands
