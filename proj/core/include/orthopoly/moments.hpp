#pragma once

#include <optional>

#include "orthopoly/errors.hpp"
#include "orthopoly/rational.hpp"

namespace orthopoly {

/// Pearson data (a, b, c, d, e): the coefficients of phi(x) = a x^2 + b x + c
/// and psi(x) = d x + e. They drive the second-order moment recurrence
///
///   (n a + d) mu_{n+1} + (n b + e) mu_n + n c mu_{n-1} = 0,   n >= 0,
///
/// as well as every structured operator built downstream.
struct PearsonData {
  Rat a, b, c;  ///< phi coefficients
  Rat d, e;     ///< psi coefficients
  long range = 0;  ///< largest n for which n*a + d != 0 has been certified

  /// The coefficient n*a + d multiplying mu_{n+1} in the recurrence.
  Rat leading(long n) const { return Rat(n) * a + d; }

  int phi_degree() const;

  bool same_coefficients(const PearsonData& other) const {
    return a == other.a && b == other.b && c == other.c && d == other.d &&
           e == other.e;
  }
};

enum class Family { Hermite, Laguerre, Jacobi, Bessel, Custom };

/// Classification of the data by the degree and root structure of phi.
/// deg phi = 0 -> Hermite, deg phi = 1 -> Laguerre, deg phi = 2 with distinct
/// roots -> Jacobi, deg phi = 2 with a double root -> Bessel. Every valid phi
/// falls in exactly one class.
struct FamilyTag {
  Family family = Family::Custom;
  int phi_degree = 0;
  int discriminant_sign = 0;  ///< sign of b^2 - 4ac; meaningful when deg phi = 2
};

const char* family_name(Family family);

/// Checks |a|+|b|+|c| > 0 and n*a + d != 0 for 0 <= n <= range_N.
/// Throws InvalidPhi or DegenerateRecurrence(n) naming the offending index.
/// For a != 0 the range condition is decided by testing whether -d/a is a
/// nonnegative integer <= range_N; a root beyond the range is accepted.
PearsonData validate_pearson(const Rat& a, const Rat& b, const Rat& c,
                             const Rat& d, const Rat& e, long range_N);

FamilyTag classify_family(const PearsonData& p);

/// A moment sequence at level k. Level 0 holds mu_0..mu_N; level k >= 1 holds
/// the derived sigma^(k) values. `source` is the level's own Pearson data,
/// already shifted, so the recurrence invariant reads directly off it.
struct MomentSequence {
  RatVector values;
  PearsonData source;
  long level = 0;

  long size() const { return static_cast<long>(values.size()); }
};

/// Generates mu_0..mu_{2N} (enough for the Gram matrix G_N). Throws ZeroMu0
/// when mu0 = 0 and DegenerateRecurrence when p is not valid through 2N.
MomentSequence generate_moments(const PearsonData& p, const Rat& mu0, long N);

/// Level shift: (a, b, c, d + 2ka, e + kb), re-validated for the range the
/// shifted sequence can still serve (two indices shorter per level).
PearsonData pearson_shift(const PearsonData& p, long k);

/// sigma_n = a mu_{n+2} + b mu_{n+1} + c mu_n. The output is two entries
/// shorter, carries level + 1 and the shifted Pearson data, and is eagerly
/// checked against its own recurrence (RecurrenceViolation when the input
/// was not pre-classical).
MomentSequence derive_sigma(const MomentSequence& m);

/// Pure check of the recurrence invariant at every index.
bool verify_recurrence(const MomentSequence& m);

/// Index of the first violated recurrence row, if any.
std::optional<long> first_recurrence_violation(const MomentSequence& m);

}  // namespace orthopoly
