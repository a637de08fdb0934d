#pragma once

#include <span>
#include <utility>
#include <vector>

#include "orthopoly/hankel.hpp"
#include "orthopoly/moments.hpp"

namespace orthopoly {

enum class OperatorKind { R, N, D, Phi };

/// Banded exact-rational matrix with explicit zero suppression: only the
/// structural nonzeros are stored, as (row, col, value) triplets in row-major
/// order. All four operator matrices have at most three nonzeros per row or
/// column, so dense materialization is left to test oracles.
class StructuredMatrix {
 public:
  struct Entry {
    long row;
    long col;
    Rat value;
  };

  StructuredMatrix(OperatorKind kind, long rows, long cols,
                   std::vector<Entry> entries);

  OperatorKind kind() const { return kind_; }
  long rows() const { return rows_; }
  long cols() const { return cols_; }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Entry value, zero when structurally absent.
  Rat at(long i, long j) const;

  /// M v with v of length cols().
  RatVector apply(std::span<const Rat> v) const;

  /// M^T v with v of length rows().
  RatVector apply_transpose(std::span<const Rat> v) const;

  /// Nonzeros grouped by column: columns()[j] lists (row, value).
  std::vector<std::vector<std::pair<long, Rat>>> columns() const;

  std::vector<RatVector> dense() const;

 private:
  OperatorKind kind_;
  long rows_;
  long cols_;
  std::vector<Entry> entries_;
};

/// R_n, n x (n+1), n >= 1: row k carries (k c, k b + e, k a + d) in columns
/// k-1, k, k+1. R_{n+1}^T represents p -> phi p' + psi p on Pi_n.
StructuredMatrix build_R(const PearsonData& p, long n);

/// N_n, n x (n+1), n >= 1: entry(k, k+1) = k+1. N_n^T represents d/dx on the
/// monomial column vector.
StructuredMatrix build_N(long n);

/// D_n = R_n^T N_n, (n+1) x (n+1), with D_0 = 0. Built from the product of
/// build_R and build_N; represents p -> phi p'' + psi p' on Pi_n. Its
/// diagonal is lambda_j = j ((j-1) a + d).
StructuredMatrix build_D(const PearsonData& p, long n);

/// Phi_n, (n+3) x (n+1): column j carries (c, b, a) in rows j, j+1, j+2.
/// Represents multiplication by phi from Pi_n to Pi_{n+2}.
StructuredMatrix build_Phi(const PearsonData& p, long n);

/// Exact check of D_n^T G_n = G_n D_n at the order of g.
bool check_self_adjoint(const PearsonData& p, const GramMatrix& g);

/// Exact check of R_n M_n = 0 with M_n = [mu_0 .. mu_n]^T, for the largest n
/// the moment list supports. Equivalent to the recurrence rows 0..n-1.
bool check_moment_kernel(const PearsonData& p, const MomentSequence& m);

}  // namespace orthopoly
