#pragma once

#include <stdexcept>
#include <string>

namespace vgt {

// Root of the library's exception hierarchy.  Everything thrown on purpose
// derives from this, so callers can catch vgt::Error at the boundary and
// treat anything else as a bug.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Division by the zero element of a finite field.
class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

// An element was handed to a field it does not belong to (wrong
// characteristic, wrong degree, or coordinates out of canonical range).
class FieldMismatch : public Error {
 public:
  explicit FieldMismatch(const std::string& what) : Error(what) {}
};

// Square root requested for a quadratic nonresidue.
class NotASquare : public Error {
 public:
  explicit NotASquare(const std::string& what) : Error(what) {}
};

// A rational with zero denominator, or a reduction of a rational whose
// denominator vanishes modulo the target prime.
class BadDenominator : public Error {
 public:
  explicit BadDenominator(const std::string& what) : Error(what) {}
};

// A modulus that is not an odd prime in the supported range.
class BadPrime : public Error {
 public:
  explicit BadPrime(const std::string& what) : Error(what) {}
};

// A surface parameter outside the allowed family (a = 1 or a = -1), a
// non-squarefree sieve discriminant, or a similar caller error.
class BadParameter : public Error {
 public:
  explicit BadParameter(const std::string& what) : Error(what) {}
};

// The brute-force counting oracle was asked for a field larger than its
// configured bound.
class OracleBoundExceeded : public Error {
 public:
  explicit OracleBoundExceeded(const std::string& what) : Error(what) {}
};

// Evaluation of a quantity that has no value at t = 0 or t = infinity.
class UndefinedAtZeroOrInfinity : public Error {
 public:
  explicit UndefinedAtZeroOrInfinity(const std::string& what) : Error(what) {}
};

}  // namespace vgt
