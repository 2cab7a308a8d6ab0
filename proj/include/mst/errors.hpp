#pragma once

#include <stdexcept>
#include <string>

namespace mst {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (|a| >= 1, bad degree, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A rational function acquired a pole within pole_tolerance of the unit circle.
class PoleOnCircle : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Poles inside and outside the disk are numerically indistinguishable.
class ClusteredPoles : public Error {
 public:
  using Error::Error;
};

/// No bounded invertible multiplier exists between two model spaces.
class NoMultiplier : public Error {
 public:
  using Error::Error;
};

/// a * domain is not contained in the requested codomain.
class MultiplierRangeViolation : public Error {
 public:
  using Error::Error;
};

/// Operands live on different model spaces.
class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

class SingularOperator : public Error {
 public:
  using Error::Error;
};

/// A constructed kernel element failed its membership verification.
class FormulaMismatch : public Error {
 public:
  using Error::Error;
};

/// The 2x2 symbol has no canonical factorization (the operator is not invertible).
class NoCanonicalFactorization : public Error {
 public:
  using Error::Error;
};

/// The degree-bound search hit its cap while the direct operator is invertible.
class FactorizationUndetermined : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mst
