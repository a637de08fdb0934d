#include "support/oracles.hpp"

namespace oracles {

DenseMatrix dense_gram(const GramMatrix& g) {
  const long n = g.order();
  DenseMatrix out(n + 1, RatVector(n + 1));
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; j <= n; ++j) out[i][j] = g.entry(i, j);
  }
  return out;
}

DenseMatrix multiply(const DenseMatrix& x, const DenseMatrix& y) {
  const std::size_t rows = x.size();
  const std::size_t inner = y.size();
  const std::size_t cols = y[0].size();
  DenseMatrix out(rows, RatVector(cols, Rat(0)));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += x[i][k] * y[k][j];
    }
  }
  return out;
}

DenseMatrix transpose(const DenseMatrix& m) {
  DenseMatrix out(m[0].size(), RatVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  }
  return out;
}

DenseLdlt dense_unit_ldlt(const DenseMatrix& g) {
  const long n = static_cast<long>(g.size());
  DenseLdlt result;
  result.lower.assign(n, RatVector(n, Rat(0)));
  result.diag.assign(n, Rat(0));
  for (long j = 0; j < n; ++j) {
    Rat pivot = g[j][j];
    for (long k = 0; k < j; ++k) {
      pivot -= result.lower[j][k] * result.lower[j][k] * result.diag[k];
    }
    if (pivot == 0) throw QuasiDefiniteViolation(j);
    result.diag[j] = pivot;
    result.lower[j][j] = Rat(1);
    for (long i = j + 1; i < n; ++i) {
      Rat value = g[i][j];
      for (long k = 0; k < j; ++k) {
        value -= result.lower[i][k] * result.lower[j][k] * result.diag[k];
      }
      result.lower[i][j] = value / pivot;
    }
  }
  return result;
}

DenseMatrix invert_unit_lower(const DenseMatrix& lower) {
  const long n = static_cast<long>(lower.size());
  DenseMatrix inv(n, RatVector(n, Rat(0)));
  for (long c = 0; c < n; ++c) {
    inv[c][c] = Rat(1);
    for (long i = c + 1; i < n; ++i) {
      Rat acc(0);
      for (long k = c; k < i; ++k) acc += lower[i][k] * inv[k][c];
      inv[i][c] = -acc;
    }
  }
  return inv;
}

Rat cofactor_determinant(const DenseMatrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rat total(0);
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] != 0) {
      DenseMatrix minor(n - 1, RatVector(n - 1));
      for (std::size_t r = 1; r < n; ++r) {
        std::size_t cc = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          minor[r - 1][cc++] = m[r][c];
        }
      }
      Rat term = m[0][j] * cofactor_determinant(minor);
      total += sign > 0 ? term : Rat(-term);
    }
    sign = -sign;
  }
  return total;
}

DenseMatrix recursive_R(const PearsonData& p, long n) {
  DenseMatrix r{{p.e, p.d}};
  for (long m = 2; m <= n; ++m) {
    for (auto& row : r) row.push_back(Rat(0));
    RatVector last(m + 1, Rat(0));
    last[m - 2] = Rat(m - 1) * p.c;
    last[m - 1] = Rat(m - 1) * p.b + p.e;
    last[m] = Rat(m - 1) * p.a + p.d;
    r.push_back(std::move(last));
  }
  return r;
}

DenseMatrix recursive_N(long n) {
  DenseMatrix out{{Rat(0), Rat(1)}};
  for (long m = 2; m <= n; ++m) {
    for (auto& row : out) row.push_back(Rat(0));
    RatVector last(m + 1, Rat(0));
    last[m] = Rat(m);
    out.push_back(std::move(last));
  }
  return out;
}

DenseMatrix recursive_D(const PearsonData& p, long n) {
  DenseMatrix d{{Rat(0)}};
  for (long m = 1; m <= n; ++m) {
    for (auto& row : d) row.push_back(Rat(0));
    if (m >= 2) d[m - 2][m] = Rat(m) * Rat(m - 1) * p.c;
    d[m - 1][m] = Rat(m) * (Rat(m - 1) * p.b + p.e);
    RatVector last(m + 1, Rat(0));
    last[m] = Rat(m) * (Rat(m - 1) * p.a + p.d);
    d.push_back(std::move(last));
  }
  return d;
}

DenseMatrix recursive_Phi(const PearsonData& p, long n) {
  DenseMatrix phi{{p.c}, {p.b}, {p.a}};
  for (long m = 1; m <= n; ++m) {
    // new column on the right: zeros, then c, b above the new bottom row a
    for (auto& row : phi) row.push_back(Rat(0));
    phi[m][m] = p.c;
    phi[m + 1][m] = p.b;
    RatVector bottom(m + 1, Rat(0));
    bottom[m] = p.a;
    phi.push_back(std::move(bottom));
  }
  return phi;
}

Rat Rng::rational(long magnitude, long max_den) {
  std::uniform_int_distribution<long> num(-magnitude, magnitude);
  std::uniform_int_distribution<long> den(1, max_den);
  Rat value(num(engine_), den(engine_));
  value.canonicalize();
  return value;
}

Rat Rng::nonzero_rational(long magnitude, long max_den) {
  for (;;) {
    Rat value = rational(magnitude, max_den);
    if (value != 0) return value;
  }
}

PearsonData Rng::pearson(long range) {
  for (;;) {
    Rat a = rational(3, 3);
    Rat b = rational(3, 3);
    Rat c = rational(3, 3);
    Rat d = rational(5, 3);
    Rat e = rational(5, 3);
    if (a == 0 && b == 0 && c == 0) continue;
    try {
      return validate_pearson(a, b, c, d, e, range);
    } catch (const Error&) {
      continue;
    }
  }
}

}  // namespace oracles
