#pragma once

#include <memory>
#include <span>
#include <vector>

#include "orthopoly/moments.hpp"

namespace orthopoly {

/// Hankel Gram matrix G_n with entry(i, j) = v_{i+j} over the backing moment
/// list. The (n+1) x (n+1) view is virtual; only the 1-D list is stored.
class GramMatrix {
 public:
  GramMatrix(const MomentSequence& m, long order);

  long order() const { return order_; }
  long level() const { return level_; }
  const Rat& entry(long i, long j) const { return (*values_)[i + j]; }
  /// The 1-D moment list v_0..v_{2n} backing the view.
  const RatVector& backing() const { return *values_; }

 private:
  std::shared_ptr<const RatVector> values_;
  long order_ = 0;
  long level_ = 0;
};

GramMatrix build_gram(const MomentSequence& m, long order);

/// The bilinear form u^T G v; symmetric in (u, v).
Rat bilinear(const GramMatrix& g, std::span<const Rat> u, std::span<const Rat> v);

/// Incremental unit-LDL^T factorization of the Hankel chain:
/// S_n G_n S_n^T = H_n with S_n^T unit upper triangular and
/// H_n = diag(h_0..h_n), all h_j != 0. Column j of S_n^T is stored as its
/// j+1 leading entries (entry j is 1, everything below is zero). Columns are
/// immutable and never change as the order grows, so extended states share
/// them structurally.
class CholeskyState {
 public:
  long order() const { return static_cast<long>(h_.size()) - 1; }

  /// Column j of S^T, entries 0..j; the last entry is 1.
  const RatVector& column(long j) const { return *columns_[j]; }

  /// Column j zero-padded to the requested length >= j+1.
  RatVector column_padded(long j, long length) const;

  const Rat& h(long j) const { return h_[j]; }
  const RatVector& h_values() const { return h_; }

  /// The state restricted to a smaller order; shares all columns.
  CholeskyState truncated(long order) const;

  /// Rebuilds a state from raw parts (column j must have length j+1 with a
  /// unit last entry; every h_j must be nonzero). The parts are taken as
  /// given, so verify_factorization can be pointed at tampered data.
  static CholeskyState from_parts(std::vector<RatVector> columns, RatVector h);

 private:
  friend CholeskyState cholesky_init(const GramMatrix& g0);
  friend CholeskyState cholesky_extend(const CholeskyState& st,
                                       const MomentSequence& m);

  std::vector<std::shared_ptr<const RatVector>> columns_;
  RatVector h_;
};

/// Order-0 state: h_0 = mu_0. Throws QuasiDefiniteViolation(0) when mu_0 = 0.
CholeskyState cholesky_init(const GramMatrix& g0);

/// Borders the factorization by one order. The new column solves
/// G_n s = -[mu_{n+1} .. mu_{2n+1}]^T by two triangular substitutions against
/// the maintained factors (s = -S^T H^{-1} S rhs), and
/// h_{n+1} = [s^T | 1] [mu_{n+1} .. mu_{2n+2}]^T. Throws
/// QuasiDefiniteViolation(n+1) when h_{n+1} = 0.
CholeskyState cholesky_extend(const CholeskyState& st, const MomentSequence& m);

/// init + extend up to the requested order.
CholeskyState cholesky_chain(const MomentSequence& m, long order);

/// Exact check of s_i^T G s_j = h_j delta_ij for all 0 <= i, j <= n.
bool verify_factorization(const CholeskyState& st, const GramMatrix& g);

/// Checks h_j det G_{j-1} = det G_j for every j, with determinants computed
/// by an independent fraction-free routine (det G_{-1} := 1).
bool det_ratio_check(const CholeskyState& st, const MomentSequence& m);

/// Determinant of G_order by Bareiss fraction-free elimination on the
/// denominator-cleared integer matrix. Independent of the factorization path.
Rat hankel_determinant(const MomentSequence& m, long order);

}  // namespace orthopoly
