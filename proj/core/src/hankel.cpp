#include "orthopoly/hankel.hpp"

#include <algorithm>
#include <utility>

namespace orthopoly {

GramMatrix::GramMatrix(const MomentSequence& m, long order) {
  if (order < 0) throw DimensionMismatch("Gram order must be nonnegative");
  if (m.size() < 2 * order + 1) {
    throw TooShort("Gram matrix of order " + std::to_string(order) +
                   " needs " + std::to_string(2 * order + 1) + " values, got " +
                   std::to_string(m.size()));
  }
  auto backing = std::make_shared<RatVector>(m.values.begin(),
                                             m.values.begin() + 2 * order + 1);
  values_ = std::move(backing);
  order_ = order;
  level_ = m.level;
}

GramMatrix build_gram(const MomentSequence& m, long order) {
  return GramMatrix(m, order);
}

Rat bilinear(const GramMatrix& g, std::span<const Rat> u,
             std::span<const Rat> v) {
  const long n = g.order();
  if (static_cast<long>(u.size()) != n + 1 ||
      static_cast<long>(v.size()) != n + 1) {
    throw DimensionMismatch("bilinear arguments must have length " +
                            std::to_string(n + 1));
  }
  Rat total(0);
  for (long i = 0; i <= n; ++i) {
    if (u[i] == 0) continue;
    Rat row(0);
    for (long j = 0; j <= n; ++j) row += g.entry(i, j) * v[j];
    total += u[i] * row;
  }
  return total;
}

RatVector CholeskyState::column_padded(long j, long length) const {
  if (j < 0 || j > order()) throw DimensionMismatch("column index out of range");
  if (length < j + 1) {
    throw DimensionMismatch("padded length shorter than column " +
                            std::to_string(j));
  }
  RatVector out(*columns_[j]);
  out.resize(static_cast<std::size_t>(length), Rat(0));
  return out;
}

CholeskyState CholeskyState::truncated(long order) const {
  if (order < 0 || order > this->order()) {
    throw DimensionMismatch("truncation order out of range");
  }
  CholeskyState out;
  out.columns_.assign(columns_.begin(), columns_.begin() + order + 1);
  out.h_.assign(h_.begin(), h_.begin() + order + 1);
  return out;
}

CholeskyState CholeskyState::from_parts(std::vector<RatVector> columns,
                                        RatVector h) {
  if (columns.empty() || columns.size() != h.size()) {
    throw DimensionMismatch("from_parts needs matching columns and diagonal");
  }
  CholeskyState st;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != j + 1 || columns[j].back() != 1) {
      throw DimensionMismatch("column " + std::to_string(j) +
                              " is not unit upper triangular");
    }
    if (h[j] == 0) throw QuasiDefiniteViolation(static_cast<long>(j));
    st.columns_.push_back(
        std::make_shared<RatVector>(std::move(columns[j])));
  }
  st.h_ = std::move(h);
  return st;
}

CholeskyState cholesky_init(const GramMatrix& g0) {
  if (g0.order() != 0) throw DimensionMismatch("cholesky_init expects order 0");
  const Rat& mu0 = g0.entry(0, 0);
  if (mu0 == 0) throw QuasiDefiniteViolation(0);
  CholeskyState st;
  st.columns_.push_back(std::make_shared<RatVector>(RatVector{Rat(1)}));
  st.h_.push_back(mu0);
  return st;
}

CholeskyState cholesky_extend(const CholeskyState& st, const MomentSequence& m) {
  const long n = st.order();
  if (m.size() < 2 * n + 3) {
    throw TooShort("extension to order " + std::to_string(n + 1) + " needs " +
                   std::to_string(2 * n + 3) + " values, got " +
                   std::to_string(m.size()));
  }
  const RatVector& mu = m.values;

  // Solve G_n s = -[mu_{n+1} .. mu_{2n+1}]^T as s = -S^T H^{-1} S rhs.
  RatVector w(static_cast<std::size_t>(n + 1));
  for (long j = 0; j <= n; ++j) {
    const RatVector& col = st.column(j);
    Rat dot(0);
    for (long i = 0; i <= j; ++i) dot += col[i] * mu[n + 1 + i];
    w[j] = dot / st.h(j);
  }
  auto next = std::make_shared<RatVector>(static_cast<std::size_t>(n + 2));
  RatVector& s = *next;
  for (long i = 0; i <= n; ++i) {
    Rat acc(0);
    for (long j = i; j <= n; ++j) acc += st.column(j)[i] * w[j];
    s[i] = -acc;
  }
  s[n + 1] = Rat(1);

  Rat h_next = mu[2 * n + 2];
  for (long i = 0; i <= n; ++i) h_next += s[i] * mu[n + 1 + i];
  if (h_next == 0) throw QuasiDefiniteViolation(n + 1);

  CholeskyState out;
  out.columns_ = st.columns_;
  out.columns_.push_back(std::move(next));
  out.h_ = st.h_;
  out.h_.push_back(std::move(h_next));
  return out;
}

CholeskyState cholesky_chain(const MomentSequence& m, long order) {
  CholeskyState st = cholesky_init(build_gram(m, 0));
  for (long n = 0; n < order; ++n) st = cholesky_extend(st, m);
  return st;
}

bool verify_factorization(const CholeskyState& st, const GramMatrix& g) {
  const long n = st.order();
  if (g.order() != n) {
    throw DimensionMismatch("state order " + std::to_string(n) +
                            " vs Gram order " + std::to_string(g.order()));
  }
  std::vector<RatVector> cols;
  cols.reserve(static_cast<std::size_t>(n + 1));
  for (long j = 0; j <= n; ++j) cols.push_back(st.column_padded(j, n + 1));
  for (long i = 0; i <= n; ++i) {
    for (long j = i; j <= n; ++j) {
      Rat value = bilinear(g, cols[i], cols[j]);
      if (i == j ? value != st.h(j) : value != 0) return false;
    }
  }
  return true;
}

namespace {

// Bareiss elimination over the integers after clearing denominators row by
// row. Returns det of the rational Hankel matrix exactly.
Rat bareiss_determinant(const RatVector& values, long order) {
  const long n = order + 1;
  std::vector<std::vector<Int>> m(static_cast<std::size_t>(n),
                                  std::vector<Int>(static_cast<std::size_t>(n)));
  Int scale(1);
  for (long i = 0; i < n; ++i) {
    Int row_lcm(1);
    for (long j = 0; j < n; ++j) {
      Int den = values[i + j].get_den();
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (long j = 0; j < n; ++j) {
      const Rat& v = values[i + j];
      m[i][j] = v.get_num() * (row_lcm / v.get_den());
    }
    scale *= row_lcm;
  }

  int sign = 1;
  Int prev(1);
  for (long k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      long pivot = -1;
      for (long r = k + 1; r < n; ++r) {
        if (m[r][k] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return Rat(0);
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Int num = m[n - 1][n - 1];
  if (sign < 0) num = -num;
  Rat det(num, scale);
  det.canonicalize();
  return det;
}

}  // namespace

Rat hankel_determinant(const MomentSequence& m, long order) {
  if (order < 0) throw DimensionMismatch("determinant order must be nonnegative");
  if (m.size() < 2 * order + 1) {
    throw TooShort("determinant of order " + std::to_string(order) + " needs " +
                   std::to_string(2 * order + 1) + " values");
  }
  return bareiss_determinant(m.values, order);
}

bool det_ratio_check(const CholeskyState& st, const MomentSequence& m) {
  Rat previous(1);  // det G_{-1}
  for (long j = 0; j <= st.order(); ++j) {
    Rat current = hankel_determinant(m, j);
    if (st.h(j) * previous != current) return false;
    previous = current;
  }
  return true;
}

}  // namespace orthopoly
