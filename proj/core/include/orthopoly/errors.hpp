#pragma once

#include <stdexcept>
#include <string>

namespace orthopoly {

/// Base class for every error raised by the library. Exceptions are reserved
/// for malformed inputs; mathematical check failures are reported through
/// return values, never thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// a = b = c = 0: the data defines no polynomial phi.
class InvalidPhi : public Error {
 public:
  InvalidPhi() : Error("InvalidPhi: a, b, c are all zero") {}
};

/// n*a + d = 0 for some n in the working range, so the moment recurrence
/// cannot produce mu_{n+1}.
class DegenerateRecurrence : public Error {
 public:
  explicit DegenerateRecurrence(long n)
      : Error("DegenerateRecurrence at n=" + std::to_string(n)), index_(n) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

class ZeroMu0 : public Error {
 public:
  ZeroMu0() : Error("ZeroMu0: mu_0 must be nonzero") {}
};

class TooShort : public Error {
 public:
  explicit TooShort(const std::string& detail) : Error("TooShort: " + detail) {}
};

class DimensionMismatch : public Error {
 public:
  explicit DimensionMismatch(const std::string& detail)
      : Error("DimensionMismatch: " + detail) {}
};

/// det G_order = 0 (equivalently h_order = 0): the sequence stops being
/// quasi-definite at this order and the factorization cannot be extended.
class QuasiDefiniteViolation : public Error {
 public:
  explicit QuasiDefiniteViolation(long order)
      : Error("QuasiDefiniteViolation at order " + std::to_string(order)),
        order_(order) {}
  long order() const noexcept { return order_; }

 private:
  long order_;
};

/// A structure-relation expansion carries coefficients outside the allowed
/// band, or a coefficient that must be nonzero vanished.
class StructureViolation : public Error {
 public:
  explicit StructureViolation(const std::string& detail)
      : Error("StructureViolation: " + detail) {}
};

/// A derived sequence failed its own three-term recurrence; the input it was
/// derived from was not pre-classical.
class RecurrenceViolation : public Error {
 public:
  explicit RecurrenceViolation(long n)
      : Error("RecurrenceViolation at n=" + std::to_string(n)), index_(n) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

}  // namespace orthopoly
