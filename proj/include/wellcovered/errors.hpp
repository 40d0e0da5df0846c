#pragma once

#include <stdexcept>
#include <string>

namespace wellcovered {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad graph6 text, vertex out of range, loops, bad permutations.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A configured size cap (graph6 order, enumeration order, product order) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

enum class Precondition {
  kHostMismatch,
  kNotIndependent,
  kNotMaximal,
  kNotMaximum,
  kNotMember,
  kRemainderTooSmall,
  kInvalidIsolatableWitness,
  kNotStrictlyLarger,
  kInvalidDecomposition,
};

const char* to_string(Precondition p) noexcept;

/// A documented precondition of an operation does not hold for its arguments.
class PreconditionError : public Error {
 public:
  PreconditionError(Precondition which, const std::string& detail)
      : Error(std::string(to_string(which)) + ": " + detail), which_(which) {}

  Precondition which() const noexcept { return which_; }

 private:
  Precondition which_;
};

}  // namespace wellcovered
