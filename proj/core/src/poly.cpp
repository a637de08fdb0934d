#include "orthopoly/poly.hpp"

#include <algorithm>
#include <sstream>

namespace orthopoly {

Polynomial::Polynomial(RatVector ascending) : coeffs_(std::move(ascending)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(long degree, const Rat& coefficient) {
  if (coefficient == 0) return Polynomial();
  RatVector coeffs(static_cast<std::size_t>(degree + 1), Rat(0));
  coeffs.back() = coefficient;
  return Polynomial(std::move(coeffs));
}

Rat Polynomial::coefficient(long i) const {
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rat(0);
  return coeffs_[i];
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  RatVector out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = Rat(static_cast<long>(i)) * coeffs_[i];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  RatVector out(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  RatVector out(std::max(coeffs_.size(), other.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return Polynomial();
  RatVector out(coeffs_.size() + other.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rat& scalar) const {
  if (scalar == 0) return Polynomial();
  RatVector out(coeffs_);
  for (Rat& value : out) value *= scalar;
  return Polynomial(std::move(out));
}

std::vector<Polynomial> extract_polynomials(const CholeskyState& st) {
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(st.order() + 1));
  for (long j = 0; j <= st.order(); ++j) {
    out.emplace_back(Polynomial(st.column(j)));
  }
  return out;
}

std::vector<Polynomial> derivative_family(const std::vector<Polynomial>& polys,
                                          long k) {
  if (k < 1) throw DimensionMismatch("derivative_family requires k >= 1");
  if (static_cast<long>(polys.size()) <= k) {
    throw TooShort("derivative_family at depth " + std::to_string(k) +
                   " needs more than " + std::to_string(k) + " polynomials");
  }
  std::vector<Polynomial> out;
  out.reserve(polys.size() - static_cast<std::size_t>(k));
  for (std::size_t n = 0; n + static_cast<std::size_t>(k) < polys.size(); ++n) {
    Polynomial q = polys[n + k];
    for (long i = 0; i < k; ++i) q = q.derivative();
    out.push_back(q * (Rat(1) / pochhammer(static_cast<long>(n) + 1, k)));
  }
  return out;
}

Rat evaluate(const Polynomial& q, const Rat& x) {
  Rat acc(0);
  const RatVector& coeffs = q.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial apply_D(const Polynomial& q, const PearsonData& p) {
  Polynomial phi(RatVector{p.c, p.b, p.a});
  Polynomial psi(RatVector{p.e, p.d});
  Polynomial d1 = q.derivative();
  return phi * d1.derivative() + psi * d1;
}

std::string format_polynomial(const Polynomial& q) {
  if (q.is_zero()) return "0";
  std::ostringstream out;
  bool leading = true;
  for (long d = q.degree(); d >= 0; --d) {
    Rat coeff = q.coefficient(d);
    if (coeff == 0) continue;
    bool negative = coeff < 0;
    Rat magnitude = negative ? Rat(-coeff) : coeff;
    if (leading) {
      if (negative) out << "-";
      leading = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (d == 0) {
      out << to_string(magnitude);
    } else {
      if (magnitude != 1) out << to_string(magnitude) << " ";
      out << (d == 1 ? "x" : "x^" + std::to_string(d));
    }
  }
  return out.str();
}

}  // namespace orthopoly
