#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quotient by a power of (1-q) left a nonzero remainder.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration was asked for a size above its configured bound.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, int requested, int bound)
      : Error(what + ": size " + std::to_string(requested) + " exceeds bound " +
              std::to_string(bound)),
        requested_(requested),
        bound_(bound) {}
  int requested() const { return requested_; }
  int bound() const { return bound_; }

 private:
  int requested_;
  int bound_;
};

class OddCrossingCount : public Error {
 public:
  using Error::Error;
};

class InvalidTranspose : public Error {
 public:
  using Error::Error;
};

/// Negative q-powers survived where the result must be an ordinary polynomial.
class NotPolynomial : public Error {
 public:
  using Error::Error;
};

/// An odd power of s = q^{1/2} survived a conversion back to q.
class HalfPowerResidue : public Error {
 public:
  using Error::Error;
};

class RelationMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace qeuler
