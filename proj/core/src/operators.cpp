#include "orthopoly/operators.hpp"

#include <algorithm>
#include <map>

namespace orthopoly {

StructuredMatrix::StructuredMatrix(OperatorKind kind, long rows, long cols,
                                   std::vector<Entry> entries)
    : kind_(kind), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& x, const Entry& y) {
              return x.row != y.row ? x.row < y.row : x.col < y.col;
            });
}

Rat StructuredMatrix::at(long i, long j) const {
  for (const Entry& entry : entries_) {
    if (entry.row == i && entry.col == j) return entry.value;
    if (entry.row > i) break;
  }
  return Rat(0);
}

RatVector StructuredMatrix::apply(std::span<const Rat> v) const {
  if (static_cast<long>(v.size()) != cols_) {
    throw DimensionMismatch("apply expects length " + std::to_string(cols_));
  }
  RatVector out(static_cast<std::size_t>(rows_), Rat(0));
  for (const Entry& entry : entries_) {
    out[entry.row] += entry.value * v[entry.col];
  }
  return out;
}

RatVector StructuredMatrix::apply_transpose(std::span<const Rat> v) const {
  if (static_cast<long>(v.size()) != rows_) {
    throw DimensionMismatch("apply_transpose expects length " +
                            std::to_string(rows_));
  }
  RatVector out(static_cast<std::size_t>(cols_), Rat(0));
  for (const Entry& entry : entries_) {
    out[entry.col] += entry.value * v[entry.row];
  }
  return out;
}

std::vector<std::vector<std::pair<long, Rat>>> StructuredMatrix::columns() const {
  std::vector<std::vector<std::pair<long, Rat>>> by_col(
      static_cast<std::size_t>(cols_));
  for (const Entry& entry : entries_) {
    by_col[entry.col].emplace_back(entry.row, entry.value);
  }
  return by_col;
}

std::vector<RatVector> StructuredMatrix::dense() const {
  std::vector<RatVector> out(static_cast<std::size_t>(rows_),
                             RatVector(static_cast<std::size_t>(cols_), Rat(0)));
  for (const Entry& entry : entries_) out[entry.row][entry.col] = entry.value;
  return out;
}

namespace {

void push_nonzero(std::vector<StructuredMatrix::Entry>& entries, long row,
                  long col, Rat value) {
  if (value != 0) entries.push_back({row, col, std::move(value)});
}

}  // namespace

StructuredMatrix build_R(const PearsonData& p, long n) {
  if (n < 1) throw DimensionMismatch("R_n requires n >= 1");
  std::vector<StructuredMatrix::Entry> entries;
  for (long k = 0; k < n; ++k) {
    if (k >= 1) push_nonzero(entries, k, k - 1, Rat(k) * p.c);
    push_nonzero(entries, k, k, Rat(k) * p.b + p.e);
    push_nonzero(entries, k, k + 1, Rat(k) * p.a + p.d);
  }
  return StructuredMatrix(OperatorKind::R, n, n + 1, std::move(entries));
}

StructuredMatrix build_N(long n) {
  if (n < 1) throw DimensionMismatch("N_n requires n >= 1");
  std::vector<StructuredMatrix::Entry> entries;
  for (long k = 0; k < n; ++k) entries.push_back({k, k + 1, Rat(k + 1)});
  return StructuredMatrix(OperatorKind::N, n, n + 1, std::move(entries));
}

StructuredMatrix build_D(const PearsonData& p, long n) {
  if (n < 0) throw DimensionMismatch("D_n requires n >= 0");
  std::vector<StructuredMatrix::Entry> entries;
  if (n >= 1) {
    // (R^T N)(i, j) = sum_k R(k, i) N(k, j): join the entry lists on the row
    // index they share.
    StructuredMatrix r = build_R(p, n);
    StructuredMatrix nn = build_N(n);
    std::vector<std::vector<std::pair<long, Rat>>> n_by_row(
        static_cast<std::size_t>(n));
    for (const auto& ne : nn.entries()) {
      n_by_row[ne.row].emplace_back(ne.col, ne.value);
    }
    std::map<std::pair<long, long>, Rat> accumulated;
    for (const auto& re : r.entries()) {
      for (const auto& [col, value] : n_by_row[re.row]) {
        accumulated[{re.col, col}] += re.value * value;
      }
    }
    for (auto& [pos, value] : accumulated) {
      push_nonzero(entries, pos.first, pos.second, std::move(value));
    }
  }
  return StructuredMatrix(OperatorKind::D, n + 1, n + 1, std::move(entries));
}

StructuredMatrix build_Phi(const PearsonData& p, long n) {
  if (n < 0) throw DimensionMismatch("Phi_n requires n >= 0");
  std::vector<StructuredMatrix::Entry> entries;
  for (long j = 0; j <= n; ++j) {
    push_nonzero(entries, j, j, p.c);
    push_nonzero(entries, j + 1, j, p.b);
    push_nonzero(entries, j + 2, j, p.a);
  }
  return StructuredMatrix(OperatorKind::Phi, n + 3, n + 1, std::move(entries));
}

bool check_self_adjoint(const PearsonData& p, const GramMatrix& g) {
  const long n = g.order();
  StructuredMatrix d = build_D(p, n);
  auto cols = d.columns();
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; j <= n; ++j) {
      Rat lhs(0);  // (D^T G)(i, j) = sum_k D(k, i) G(k, j)
      for (const auto& [k, value] : cols[i]) lhs += value * g.entry(k, j);
      Rat rhs(0);  // (G D)(i, j) = sum_k G(i, k) D(k, j)
      for (const auto& [k, value] : cols[j]) rhs += g.entry(i, k) * value;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool check_moment_kernel(const PearsonData& p, const MomentSequence& m) {
  const long n = m.size() - 1;
  if (n < 1) return true;  // R_n has no rows to check
  StructuredMatrix r = build_R(p, n);
  RatVector product = r.apply(m.values);
  return std::all_of(product.begin(), product.end(),
                     [](const Rat& value) { return value == 0; });
}

}  // namespace orthopoly
