#include "orthopoly/moments.hpp"

#include <stdexcept>

namespace orthopoly {

int PearsonData::phi_degree() const {
  if (a != 0) return 2;
  if (b != 0) return 1;
  return 0;
}

const char* family_name(Family family) {
  switch (family) {
    case Family::Hermite:
      return "hermite";
    case Family::Laguerre:
      return "laguerre";
    case Family::Jacobi:
      return "jacobi";
    case Family::Bessel:
      return "bessel";
    case Family::Custom:
      break;
  }
  return "custom";
}

PearsonData validate_pearson(const Rat& a, const Rat& b, const Rat& c,
                             const Rat& d, const Rat& e, long range_N) {
  if (a == 0 && b == 0 && c == 0) throw InvalidPhi();
  if (a == 0) {
    // n*a + d is the constant d.
    if (d == 0) throw DegenerateRecurrence(0);
  } else {
    // n*a + d = 0 only at n = -d/a; reject when that lands inside the range.
    Rat root = -d / a;
    if (is_nonnegative_integer(root) && root <= Rat(range_N)) {
      throw DegenerateRecurrence(to_long(root));
    }
  }
  return PearsonData{a, b, c, d, e, range_N};
}

FamilyTag classify_family(const PearsonData& p) {
  FamilyTag tag;
  tag.phi_degree = p.phi_degree();
  if (tag.phi_degree == 2) {
    Rat disc = p.b * p.b - Rat(4) * p.a * p.c;
    tag.discriminant_sign = disc > 0 ? 1 : (disc < 0 ? -1 : 0);
    tag.family = tag.discriminant_sign == 0 ? Family::Bessel : Family::Jacobi;
  } else if (tag.phi_degree == 1) {
    tag.family = Family::Laguerre;
  } else {
    tag.family = Family::Hermite;
  }
  return tag;
}

MomentSequence generate_moments(const PearsonData& p, const Rat& mu0, long N) {
  if (mu0 == 0) throw ZeroMu0();
  if (N < 0) throw std::invalid_argument("generate_moments: negative order");
  // G_N needs mu_0..mu_{2N}; re-certify the range when the caller's data was
  // validated for less.
  PearsonData data = p.range >= 2 * N
                         ? p
                         : validate_pearson(p.a, p.b, p.c, p.d, p.e, 2 * N);
  MomentSequence m;
  m.source = data;
  m.level = 0;
  m.values.reserve(static_cast<std::size_t>(2 * N + 1));
  m.values.push_back(mu0);
  for (long n = 0; n < 2 * N; ++n) {
    Rat next = (Rat(n) * data.b + data.e) * m.values[n];
    if (n >= 1) next += Rat(n) * data.c * m.values[n - 1];
    next = -next / data.leading(n);
    m.values.push_back(next);
  }
  return m;
}

PearsonData pearson_shift(const PearsonData& p, long k) {
  if (k < 0) throw std::invalid_argument("pearson_shift: negative level");
  long shifted_range = p.range > 2 * k ? p.range - 2 * k : 0;
  return validate_pearson(p.a, p.b, p.c, p.d + Rat(2 * k) * p.a,
                          p.e + Rat(k) * p.b, shifted_range);
}

MomentSequence derive_sigma(const MomentSequence& m) {
  if (m.size() < 3) throw TooShort("derive_sigma needs at least 3 values");
  MomentSequence out;
  out.source = pearson_shift(m.source, 1);
  out.level = m.level + 1;
  const RatVector& v = m.values;
  const PearsonData& p = m.source;
  out.values.reserve(v.size() - 2);
  for (std::size_t n = 0; n + 2 < v.size(); ++n) {
    out.values.emplace_back(p.a * v[n + 2] + p.b * v[n + 1] + p.c * v[n]);
  }
  if (auto bad = first_recurrence_violation(out)) {
    throw RecurrenceViolation(*bad);
  }
  return out;
}

std::optional<long> first_recurrence_violation(const MomentSequence& m) {
  const RatVector& v = m.values;
  const PearsonData& p = m.source;
  for (long n = 0; n + 1 < m.size(); ++n) {
    Rat lhs = p.leading(n) * v[n + 1] + (Rat(n) * p.b + p.e) * v[n];
    if (n >= 1) lhs += Rat(n) * p.c * v[n - 1];
    if (lhs != 0) return n;
  }
  return std::nullopt;
}

bool verify_recurrence(const MomentSequence& m) {
  return !first_recurrence_violation(m).has_value();
}

}  // namespace orthopoly
