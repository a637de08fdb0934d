#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace orthopoly {

/// Exact rational scalar. Kept in canonical form everywhere: lowest terms,
/// positive denominator. All arithmetic in this library is exact; there is
/// no floating-point mode.
using Rat = mpq_class;
using Int = mpz_class;
using RatVector = std::vector<Rat>;

/// Parses "p" or "p/q" with optional sign and arbitrary precision.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& text);

/// Canonical rendering; the "/q" suffix is omitted when q == 1.
std::string to_string(const Rat& value);

/// True when value is an integer n >= 0.
bool is_nonnegative_integer(const Rat& value);

/// Exact conversion to long. Throws std::overflow_error when the value is
/// not an integer fitting in long.
long to_long(const Rat& value);

/// Rising factorial nu (nu+1) ... (nu+k-1), with (nu)_0 = 1.
Rat pochhammer(long nu, long k);

Int factorial(long n);

}  // namespace orthopoly
