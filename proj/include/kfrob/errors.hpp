#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kfrob {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different Grothendieck rings.
class DescriptorMismatch : public Error {
 public:
  using Error::Error;
};

// The rank is not a unit of Z[1/k], or the augmentation part is not
// nilpotent so the inversion series does not terminate.
class NonUnitRank : public Error {
 public:
  using Error::Error;
};

// A denominator that is not a power of the ring's inverted prime.
// Always an implementation bug, never a user error.
class DenominatorContract : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An input violates an operation's precondition (e.g. a singular sample).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace kfrob
