#pragma once

#include <stdexcept>
#include <string>

namespace dormant {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on user-supplied data was violated (bad modulus, wrong
/// arity, out-of-range residue, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The operation is well defined but not implemented for this input, e.g.
/// the elimination oracle on an operator with generic parameters.
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

}  // namespace dormant
