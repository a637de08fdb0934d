#pragma once

#include <array>
#include <vector>

#include "orthopoly/hankel.hpp"
#include "orthopoly/operators.hpp"

namespace orthopoly {

/// Outcome of the eigenvector characterization at one order: column j of S^T
/// must satisfy D_n s_j = lambda_j s_j with lambda_j = j ((j-1) a + d).
struct EigenReport {
  long order = 0;
  RatVector lambdas;
  std::vector<bool> passed;
  bool all_passed = false;
};

/// Checks D_n s_{n,j} = lambda_j s_{n,j} exactly for every column of the
/// factorization. Failures are reported, not thrown.
EigenReport bochner_verify(const CholeskyState& st, const PearsonData& p);

/// Depth-k derived basis: columns
///   s^(k)_{n,j} = N_{n+1} N_{n+2} ... N_{n+k} s_{n+k,j+k} / (j+1)_k
/// together with the diagonal h^(k) computed by the level recursion
///   h^(i)_j = -lambda^(i-1)_{j+1} / (j+1)^2 * h^(i-1)_{j+1},
/// where lambda^(i)_j = j ((j-1) a + d_i) and d_i = d + 2 i a.
struct DerivedBasis {
  long depth = 0;  ///< k >= 1
  long order = 0;  ///< n
  PearsonData base;
  std::vector<RatVector> columns;  ///< each of length order + 1
  RatVector h;                     ///< h^(k)_0 .. h^(k)_n
  RatVector base_h;                ///< h_0 .. h_{n+k} of the base chain
};

/// Builds the depth-k basis from a factorization chain of order n + k
/// (the display order is n = chain.order() - k). Throws DegenerateRecurrence
/// when a level shift of the Pearson data is invalid for the range it serves.
DerivedBasis hahn_basis(const CholeskyState& chain, const PearsonData& p, long k);

/// True iff the derived basis is exactly orthogonal under the level-k Gram
/// matrix, with h^(k) matching both the stored recursion values and the
/// closed form
///   h^(k)_j = (-1)^k prod_{i=0}^{k-1} lambda^(i)_{j+k-i} / [(j+1)_k]^2 * h_{j+k}.
bool hahn_verify(const DerivedBasis& db, const GramMatrix& gk);

/// Exact check of N_{n+1}^T G^(1)_n N_{n+1} = -D_{n+1}^T G_{n+1}, with the
/// sigma entries computed directly from the moment list.
bool ngn_check(const MomentSequence& m, const PearsonData& p, long n);

/// Coefficients extracted from the two structure relations at one display
/// order. first[j] = (a_j, b_j, c_j) expands Phi_{n-2} s^(1)_{n-2,j} over
/// {s_{n,i}}; second[j] = (kappa_j, xi_j) expands s_{n,j} over {s^(1)_{n,i}}.
struct StructureCoeffs {
  long order = 0;

  std::vector<std::array<Rat, 3>> first;  ///< (a_j, b_j, c_j), j = 0..order-2
  Rat d_recovered;                        ///< -c_0 h_0 / h_1
  Rat e_recovered;                        ///< d_recovered * s_{1,0}

  std::vector<std::array<Rat, 2>> second;  ///< (kappa_j, xi_j), j = 0..order
  std::array<Rat, 5> pearson_recovered;    ///< (c, b, a, e, d) scaled by t
  Rat t;  ///< the single proportionality factor against the input data
};

/// First structure relation. Requires n >= 2, a chain of order >= n and
/// moments through index 2n. Expansion coefficients are obtained by
/// bilinear-form projections against the certified orthogonal columns; any
/// out-of-band coefficient, a vanishing c_j, or a recovered (d, e) different
/// from the input raises StructureViolation.
StructureCoeffs first_structure(const CholeskyState& chain,
                                const MomentSequence& m, const PearsonData& p,
                                long n);

/// Second structure relation. Requires n >= 2, a chain of order >= n+1 and
/// moments through index 2n+2. Recovers Pearson data proportional to the
/// input by a single nonzero rational t (checked as cross-ratio equalities).
StructureCoeffs second_structure(const CholeskyState& chain,
                                 const MomentSequence& m, const PearsonData& p,
                                 long n);

struct RodriguesReport {
  long depth = 0;
  Rat varpi;  ///< k! h^(k)_0 / h_k, always nonzero
  bool passed = false;
};

/// Exact check of the depth-k identity
///   N_{n+k}^T ... N_{n+1}^T G^(k)_n s_{n,0} = varpi_k G_{n+k} s_{n+k,k}
/// for 1 <= k <= n, with sigma^(k) derived from m and the chain of order
/// >= n + k supplying the columns and norms.
RodriguesReport rodrigues_verify(const MomentSequence& m,
                                 const CholeskyState& chain,
                                 const PearsonData& p, long n, long k);

/// (N_m v)_i = (i+1) v_{i+1}: one derivative step on a coefficient vector,
/// shrinking the length by one.
RatVector apply_derivative_map(std::span<const Rat> v);

/// (N_m^T w)_i = i w_{i-1}: the transpose step, growing the length by one.
RatVector apply_derivative_map_transpose(std::span<const Rat> w);

}  // namespace orthopoly
