#pragma once

#include <string>
#include <vector>

#include "orthopoly/hankel.hpp"
#include "orthopoly/moments.hpp"

namespace orthopoly {

/// Dense exact-rational polynomial, coefficients stored ascending by degree
/// (matching the monomial column-vector convention). The zero polynomial has
/// an empty coefficient list; otherwise the leading coefficient is nonzero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RatVector ascending);

  static Polynomial monomial(long degree, const Rat& coefficient = Rat(1));

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  const RatVector& coefficients() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the stored range.
  Rat coefficient(long i) const;

  Polynomial derivative() const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rat& scalar) const;
  bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

 private:
  RatVector coeffs_;
};

/// P_j for j = 0..n from the columns of S^T: P_j(x) = s_{j,0} + s_{j,1} x +
/// ... + x^j. Monic by construction.
std::vector<Polynomial> extract_polynomials(const CholeskyState& st);

/// Q_{n,k} = P_{n+k}^(k) / (n+1)_k, monic of degree n, for
/// n = 0..polys.size()-1-k. Throws TooShort when the list has no room.
std::vector<Polynomial> derivative_family(const std::vector<Polynomial>& polys,
                                          long k);

/// Horner evaluation, exact.
Rat evaluate(const Polynomial& q, const Rat& x);

/// phi q'' + psi q', exact coefficient computation.
Polynomial apply_D(const Polynomial& q, const PearsonData& p);

/// Deterministic rendering, terms in descending degree, rationals as p/q:
/// "x^3 - 3/5 x", "x^2 - 4 x + 2", "0".
std::string format_polynomial(const Polynomial& q);

}  // namespace orthopoly
