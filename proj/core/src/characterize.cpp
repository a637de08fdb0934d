#include "orthopoly/characterize.hpp"

#include <utility>

namespace orthopoly {

RatVector apply_derivative_map(std::span<const Rat> v) {
  if (v.empty()) throw DimensionMismatch("derivative map needs a nonempty vector");
  RatVector out(v.size() - 1);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    out[i] = Rat(static_cast<long>(i + 1)) * v[i + 1];
  }
  return out;
}

RatVector apply_derivative_map_transpose(std::span<const Rat> w) {
  RatVector out(w.size() + 1, Rat(0));
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i + 1] = Rat(static_cast<long>(i + 1)) * w[i];
  }
  return out;
}

namespace {

Rat eigenvalue(const PearsonData& p, long j, long level = 0) {
  // lambda^(level)_j = j ((j-1) a + d_level), d_level = d + 2 level a.
  return Rat(j) * (Rat(j - 1) * p.a + p.d + Rat(2 * level) * p.a);
}

// s^(1)_{order, j} = N_{order+1} s_{order+1, j+1} / (j+1).
RatVector depth1_column(const CholeskyState& chain, long order, long j) {
  RatVector lifted = chain.column_padded(j + 1, order + 2);
  RatVector mapped = apply_derivative_map(lifted);
  Rat scale = Rat(1) / Rat(j + 1);
  for (Rat& value : mapped) value *= scale;
  return mapped;
}

// h^(k) arrays by the level recursion, starting from the base diagonal.
// Level i has one entry fewer than level i-1.
std::vector<RatVector> h_levels(const RatVector& base_h, const PearsonData& p,
                                long depth) {
  std::vector<RatVector> levels;
  levels.reserve(static_cast<std::size_t>(depth + 1));
  levels.push_back(base_h);
  for (long i = 1; i <= depth; ++i) {
    const RatVector& prev = levels.back();
    RatVector next(prev.size() - 1);
    for (std::size_t j = 0; j + 1 < prev.size(); ++j) {
      Rat lam = eigenvalue(p, static_cast<long>(j + 1), i - 1);
      next[j] = -lam / (Rat(static_cast<long>(j + 1)) *
                        Rat(static_cast<long>(j + 1))) *
                prev[j + 1];
    }
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace

EigenReport bochner_verify(const CholeskyState& st, const PearsonData& p) {
  const long n = st.order();
  EigenReport report;
  report.order = n;
  report.all_passed = true;
  StructuredMatrix d = build_D(p, n);
  for (long j = 0; j <= n; ++j) {
    Rat lambda = eigenvalue(p, j);
    RatVector column = st.column_padded(j, n + 1);
    RatVector image = d.apply(column);
    bool ok = true;
    for (long i = 0; i <= n; ++i) {
      if (image[i] != lambda * column[i]) {
        ok = false;
        break;
      }
    }
    report.lambdas.push_back(std::move(lambda));
    report.passed.push_back(ok);
    report.all_passed = report.all_passed && ok;
  }
  return report;
}

DerivedBasis hahn_basis(const CholeskyState& chain, const PearsonData& p,
                        long k) {
  if (k < 1) throw DimensionMismatch("hahn_basis requires depth k >= 1");
  const long n = chain.order() - k;
  if (n < 0) {
    throw DimensionMismatch("chain of order " + std::to_string(chain.order()) +
                            " cannot host depth " + std::to_string(k));
  }
  // Every level shift used below must itself be valid Pearson data.
  for (long i = 1; i <= k; ++i) pearson_shift(p, i);

  DerivedBasis db;
  db.depth = k;
  db.order = n;
  db.base = p;
  db.base_h = chain.h_values();

  for (long j = 0; j <= n; ++j) {
    RatVector v = chain.column_padded(j + k, n + k + 1);
    for (long step = 0; step < k; ++step) v = apply_derivative_map(v);
    Rat scale = Rat(1) / pochhammer(j + 1, k);
    for (Rat& value : v) value *= scale;
    db.columns.push_back(std::move(v));
  }

  db.h = h_levels(chain.h_values(), p, k).back();
  return db;
}

bool hahn_verify(const DerivedBasis& db, const GramMatrix& gk) {
  const long n = db.order;
  if (gk.order() != n) {
    throw DimensionMismatch("Gram order " + std::to_string(gk.order()) +
                            " vs basis order " + std::to_string(n));
  }
  if (gk.level() != db.depth) {
    throw DimensionMismatch("Gram level " + std::to_string(gk.level()) +
                            " vs basis depth " + std::to_string(db.depth));
  }
  for (long i = 0; i <= n; ++i) {
    for (long j = i; j <= n; ++j) {
      Rat value = bilinear(gk, db.columns[i], db.columns[j]);
      if (i == j ? value != db.h[j] : value != 0) return false;
    }
  }
  // Closed form: h^(k)_j = (-1)^k prod_i lambda^(i)_{j+k-i} / [(j+1)_k]^2 h_{j+k}.
  for (long j = 0; j <= n; ++j) {
    Rat product(db.depth % 2 == 0 ? 1 : -1);
    for (long i = 0; i < db.depth; ++i) {
      product *= eigenvalue(db.base, j + db.depth - i, i);
    }
    Rat poch = pochhammer(j + 1, db.depth);
    Rat closed = product / (poch * poch) * db.base_h[j + db.depth];
    if (closed != db.h[j]) return false;
  }
  return true;
}

bool ngn_check(const MomentSequence& m, const PearsonData& p, long n) {
  if (m.size() < 2 * n + 3) {
    throw TooShort("ngn_check at n = " + std::to_string(n) + " needs moments "
                   "through index " + std::to_string(2 * n + 2));
  }
  const RatVector& mu = m.values;
  // sigma_i for i <= 2n, straight from the definition.
  RatVector sigma(static_cast<std::size_t>(2 * n + 1));
  for (long i = 0; i <= 2 * n; ++i) {
    sigma[i] = p.a * mu[i + 2] + p.b * mu[i + 1] + p.c * mu[i];
  }
  StructuredMatrix d = build_D(p, n + 1);
  auto cols = d.columns();
  for (long i = 0; i <= n + 1; ++i) {
    for (long j = 0; j <= n + 1; ++j) {
      // (N^T G^(1) N)(i, j) = i j sigma_{i+j-2} off the zero row/column.
      Rat lhs(0);
      if (i >= 1 && j >= 1) lhs = Rat(i) * Rat(j) * sigma[i + j - 2];
      Rat rhs(0);
      for (const auto& [k, value] : cols[i]) rhs -= value * mu[k + j];
      if (lhs != rhs) return false;
    }
  }
  return true;
}

StructureCoeffs first_structure(const CholeskyState& chain,
                                const MomentSequence& m, const PearsonData& p,
                                long n) {
  if (n < 2) throw DimensionMismatch("first_structure requires n >= 2");
  if (chain.order() < n) {
    throw DimensionMismatch("first_structure needs a chain of order >= n");
  }
  GramMatrix g = build_gram(m, n);
  StructuredMatrix phi = build_Phi(p, n - 2);

  std::vector<RatVector> cols;
  cols.reserve(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) cols.push_back(chain.column_padded(i, n + 1));

  StructureCoeffs out;
  out.order = n;
  for (long j = 0; j <= n - 2; ++j) {
    RatVector target = phi.apply(depth1_column(chain, n - 2, j));
    std::array<Rat, 3> triple{Rat(0), Rat(0), Rat(0)};  // (a_j, b_j, c_j)
    for (long i = 0; i <= n; ++i) {
      Rat coefficient = bilinear(g, target, cols[i]) / chain.h(i);
      if (i >= j && i <= j + 2) {
        triple[j + 2 - i] = std::move(coefficient);
      } else if (coefficient != 0) {
        throw StructureViolation(
            "first relation has an out-of-band coefficient at (j=" +
            std::to_string(j) + ", i=" + std::to_string(i) + ")");
      }
    }
    if (triple[2] == 0) {
      throw StructureViolation("first relation has c_" + std::to_string(j) +
                               " = 0");
    }
    out.first.push_back(std::move(triple));
  }

  out.d_recovered = -out.first[0][2] * chain.h(0) / chain.h(1);
  out.e_recovered = out.d_recovered * chain.column(1)[0];
  if (out.d_recovered != p.d || out.e_recovered != p.e) {
    throw StructureViolation("first relation does not recover (d, e)");
  }
  return out;
}

StructureCoeffs second_structure(const CholeskyState& chain,
                                 const MomentSequence& m, const PearsonData& p,
                                 long n) {
  if (n < 2) throw DimensionMismatch("second_structure requires n >= 2");
  if (chain.order() < n + 1) {
    throw DimensionMismatch("second_structure needs a chain of order >= n+1");
  }
  MomentSequence sigma = derive_sigma(m);
  GramMatrix g1 = build_gram(sigma, n);

  std::vector<RatVector> derived;
  RatVector h1(static_cast<std::size_t>(n + 1));
  derived.reserve(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) {
    derived.push_back(depth1_column(chain, n, i));
    h1[i] = -eigenvalue(p, i + 1) / (Rat(i + 1) * Rat(i + 1)) * chain.h(i + 1);
  }

  StructureCoeffs out;
  out.order = n;
  for (long j = 0; j <= n; ++j) {
    RatVector target = chain.column_padded(j, n + 1);
    std::array<Rat, 2> pair{Rat(0), Rat(0)};  // (kappa_j, xi_j)
    for (long i = 0; i <= n; ++i) {
      Rat coefficient = bilinear(g1, target, derived[i]) / h1[i];
      if (i == j) {
        if (coefficient != 1) {
          throw StructureViolation("second relation is not unit at j=" +
                                   std::to_string(j));
        }
      } else if (i == j - 1) {
        pair[0] = std::move(coefficient);
      } else if (i == j - 2) {
        pair[1] = std::move(coefficient);
      } else if (coefficient != 0) {
        throw StructureViolation(
            "second relation has an out-of-band coefficient at (j=" +
            std::to_string(j) + ", i=" + std::to_string(i) + ")");
      }
    }
    out.second.push_back(std::move(pair));
  }

  // Pearson recovery: [c b a 0..]^T = xi_2/h_2 s_2 + kappa_1/h_1 s_1 + 1/h_0 s_0
  // and [e d 0..]^T = -(1/h_1) s_{n+1,1}.
  RatVector w(static_cast<std::size_t>(n + 1), Rat(0));
  const Rat& xi2 = out.second[2][1];
  const Rat& kappa1 = out.second[1][0];
  auto accumulate = [&](const Rat& factor, long column) {
    const RatVector& col = chain.column(column);
    for (std::size_t i = 0; i < col.size(); ++i) w[i] += factor * col[i];
  };
  accumulate(xi2 / chain.h(2), 2);
  accumulate(kappa1 / chain.h(1), 1);
  accumulate(Rat(1) / chain.h(0), 0);
  for (long i = 3; i <= n; ++i) {
    if (w[i] != 0) {
      throw StructureViolation("recovered phi has a coefficient above degree 2");
    }
  }
  const RatVector& s1 = chain.column(1);
  out.pearson_recovered = {w[0], w[1], w[2], -s1[0] / chain.h(1),
                           Rat(-1) / chain.h(1)};

  // Proportionality against the input, as cross-ratio equalities.
  const std::array<Rat, 5> input{p.c, p.b, p.a, p.e, p.d};
  long anchor = -1;
  for (long i = 0; i < 5; ++i) {
    if (input[i] != 0) {
      anchor = i;
      break;
    }
  }
  if (anchor < 0) throw StructureViolation("input Pearson data is zero");
  for (long i = 0; i < 5; ++i) {
    if (out.pearson_recovered[i] * input[anchor] !=
        out.pearson_recovered[anchor] * input[i]) {
      throw StructureViolation("recovered Pearson data is not proportional");
    }
  }
  out.t = out.pearson_recovered[anchor] / input[anchor];
  if (out.t == 0) {
    throw StructureViolation("recovered Pearson data vanishes");
  }
  return out;
}

RodriguesReport rodrigues_verify(const MomentSequence& m,
                                 const CholeskyState& chain,
                                 const PearsonData& p, long n, long k) {
  if (k < 1 || k > n) {
    throw DimensionMismatch("rodrigues_verify requires 1 <= k <= n");
  }
  if (chain.order() < n + k) {
    throw DimensionMismatch("rodrigues_verify needs a chain of order >= n+k");
  }

  MomentSequence level = m;
  for (long i = 0; i < k; ++i) level = derive_sigma(level);
  GramMatrix gk = build_gram(level, n);

  // Left side: N_{n+k}^T ... N_{n+1}^T (G^(k)_n s_{n,0}).
  RatVector base = chain.column_padded(0, n + 1);
  RatVector v(static_cast<std::size_t>(n + 1), Rat(0));
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; j <= n; ++j) v[i] += gk.entry(i, j) * base[j];
  }
  for (long step = 0; step < k; ++step) v = apply_derivative_map_transpose(v);

  RodriguesReport report;
  report.depth = k;
  report.varpi = Rat(factorial(k)) *
                 h_levels(chain.h_values(), p, k).back()[0] / chain.h(k);

  GramMatrix g = build_gram(m, n + k);
  RatVector column = chain.column_padded(k, n + k + 1);
  bool ok = true;
  for (long i = 0; i <= n + k && ok; ++i) {
    Rat rhs(0);
    for (long j = 0; j <= n + k; ++j) rhs += g.entry(i, j) * column[j];
    ok = (v[i] == report.varpi * rhs);
  }
  report.passed = ok;
  return report;
}

}  // namespace orthopoly
