#pragma once

#include "orthopoly/orthopoly.hpp"

// Canonical Pearson data sets used across the suites, plus the closed-form
// moment oracles they are validated against.
namespace fixtures {

using namespace orthopoly;

inline PearsonData hermite(long range = 40) {
  return validate_pearson(Rat(0), Rat(0), Rat(1), Rat(-2), Rat(0), range);
}

inline PearsonData laguerre(long range = 60) {
  return validate_pearson(Rat(0), Rat(1), Rat(0), Rat(-1), Rat(1), range);
}

inline PearsonData legendre(long range = 40) {
  return validate_pearson(Rat(-1), Rat(0), Rat(1), Rat(-2), Rat(0), range);
}

inline PearsonData bessel(const Rat& alpha = Rat(1), long range = 40) {
  return validate_pearson(Rat(1), Rat(0), Rat(0), alpha, Rat(2), range);
}

inline PearsonData delta(long range = 40) {
  return validate_pearson(Rat(0), Rat(1), Rat(0), Rat(1), Rat(0), range);
}

inline MomentSequence hermite_moments(long n) {
  return generate_moments(hermite(2 * n), Rat(1), n);
}

inline MomentSequence laguerre_moments(long n) {
  return generate_moments(laguerre(2 * n), Rat(1), n);
}

inline MomentSequence legendre_moments(long n) {
  return generate_moments(legendre(2 * n), Rat(2), n);
}

inline MomentSequence bessel_moments(long n, const Rat& alpha = Rat(1)) {
  return generate_moments(bessel(alpha, 2 * n), Rat(1), n);
}

inline MomentSequence delta_moments(long n) {
  return generate_moments(delta(2 * n), Rat(1), n);
}

// Gaussian weight: mu_{2m} = (2m-1)!! / 2^m, odd moments vanish.
inline Rat hermite_moment_oracle(long n) {
  if (n % 2 == 1) return Rat(0);
  Int double_factorial(1);
  for (long i = n - 1; i >= 1; i -= 2) double_factorial *= i;
  Int two_pow(1);
  for (long i = 0; i < n / 2; ++i) two_pow *= 2;
  Rat value(double_factorial, two_pow);
  value.canonicalize();
  return value;
}

// Exponential weight on (0, inf): mu_n = n!.
inline Rat laguerre_moment_oracle(long n) { return Rat(factorial(n)); }

// Unit weight on (-1, 1): mu_n = 2/(n+1) for even n, 0 otherwise.
inline Rat legendre_moment_oracle(long n) {
  if (n % 2 == 1) return Rat(0);
  Rat value(2, n + 1);
  value.canonicalize();
  return value;
}

}  // namespace fixtures
