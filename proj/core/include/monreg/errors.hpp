#pragma once

#include <stdexcept>
#include <string>

namespace monreg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in rings with different variable counts.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on an argument was violated (t = 0, bad permutation, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An operation whose correctness rests on a theorem was called outside the
/// theorem's hypotheses.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// A desk-scale guard (term bound, subset bound, lattice bound) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Exponent arithmetic left the representable range.
class Overflow : public Error {
 public:
  using Error::Error;
};

}  // namespace monreg
