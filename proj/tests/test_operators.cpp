#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace orthopoly;

namespace {

bool dense_equal(const std::vector<RatVector>& x,
                 const std::vector<RatVector>& y) {
  return x == y;
}

}  // namespace

TEST_CASE("build_R rows follow the recurrence coefficients") {
  CHECK(dense_equal(build_R(fixtures::legendre(), 1).dense(),
                    {{Rat(0), Rat(-2)}}));
  CHECK(dense_equal(build_R(fixtures::legendre(), 2).dense(),
                    {{Rat(0), Rat(-2), Rat(0)}, {Rat(1), Rat(0), Rat(-3)}}));
  CHECK(dense_equal(build_R(fixtures::hermite(), 2).dense(),
                    {{Rat(0), Rat(-2), Rat(0)}, {Rat(1), Rat(0), Rat(-2)}}));
  CHECK_THROWS_AS(build_R(fixtures::hermite(), 0), DimensionMismatch);
}

TEST_CASE("build_N is the derivative on monomial coefficients") {
  CHECK(dense_equal(build_N(1).dense(), {{Rat(0), Rat(1)}}));
  CHECK(dense_equal(build_N(2).dense(),
                    {{Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(2)}}));
  // derivative of monic Legendre P_3 = x^3 - (3/5) x is 3x^2 - 3/5
  RatVector p3{Rat(0), Rat(-3, 5), Rat(0), Rat(1)};
  CHECK(build_N(3).apply(p3) == RatVector{Rat(-3, 5), Rat(0), Rat(3)});
}

TEST_CASE("build_D is the product R^T N with the lambda diagonal") {
  CHECK(dense_equal(build_D(fixtures::legendre(), 2).dense(),
                    {{Rat(0), Rat(0), Rat(2)},
                     {Rat(0), Rat(-2), Rat(0)},
                     {Rat(0), Rat(0), Rat(-6)}}));
  StructuredMatrix d0 = build_D(fixtures::legendre(), 0);
  CHECK(d0.rows() == 1);
  CHECK(d0.entries().empty());
  StructuredMatrix her3 = build_D(fixtures::hermite(), 3);
  for (long j = 0; j <= 3; ++j) CHECK(her3.at(j, j) == Rat(-2 * j));
}

TEST_CASE("build_Phi multiplies by phi") {
  CHECK(dense_equal(build_Phi(fixtures::legendre(), 0).dense(),
                    {{Rat(1)}, {Rat(0)}, {Rat(-1)}}));
  CHECK(dense_equal(build_Phi(fixtures::legendre(), 1).dense(),
                    {{Rat(1), Rat(0)},
                     {Rat(0), Rat(1)},
                     {Rat(-1), Rat(0)},
                     {Rat(0), Rat(-1)}}));
  // (1 - x^2) * x = x - x^3
  RatVector x{Rat(0), Rat(1)};
  CHECK(build_Phi(fixtures::legendre(), 1).apply(x) ==
        RatVector{Rat(0), Rat(1), Rat(0), Rat(-1)});
}

TEST_CASE("banded builders match the recursive block definitions") {
  oracles::Rng rng(5150);
  std::vector<PearsonData> data = {fixtures::hermite(), fixtures::laguerre(),
                                   fixtures::legendre(),
                                   fixtures::bessel(Rat(1))};
  for (int trial = 0; trial < 4; ++trial) data.push_back(rng.pearson(24));
  for (const PearsonData& p : data) {
    for (long n = 1; n <= 12; ++n) {
      CHECK(dense_equal(build_R(p, n).dense(), oracles::recursive_R(p, n)));
      CHECK(dense_equal(build_N(n).dense(), oracles::recursive_N(n)));
      CHECK(dense_equal(build_D(p, n).dense(), oracles::recursive_D(p, n)));
      CHECK(dense_equal(build_Phi(p, n).dense(), oracles::recursive_Phi(p, n)));
      // and D as an explicit dense product
      CHECK(dense_equal(build_D(p, n).dense(),
                        oracles::multiply(
                            oracles::transpose(build_R(p, n).dense()),
                            build_N(n).dense())));
    }
  }
}

TEST_CASE("operator matrices implement the differential semantics") {
  oracles::Rng rng(606);
  std::vector<PearsonData> data = {fixtures::legendre(), fixtures::laguerre(),
                                   fixtures::bessel(Rat(1)), rng.pearson(20)};
  const long n = 6;
  for (const PearsonData& p : data) {
    Polynomial phi(RatVector{p.c, p.b, p.a});
    Polynomial psi(RatVector{p.e, p.d});
    for (int trial = 0; trial < 4; ++trial) {
      RatVector coeffs;
      for (long i = 0; i <= n; ++i) coeffs.push_back(rng.rational());
      Polynomial q(coeffs);

      // phi q' + psi q via R_{n+1}^T
      Polynomial first = phi * q.derivative() + psi * q;
      RatVector by_matrix = build_R(p, n + 1).apply_transpose(coeffs);
      for (long i = 0; i <= n + 1; ++i) {
        CHECK(by_matrix[i] == first.coefficient(i));
      }

      // phi q'' + psi q' via D_n
      Polynomial second = phi * q.derivative().derivative() + psi * q.derivative();
      RatVector by_d = build_D(p, n).apply(coeffs);
      for (long i = 0; i <= n; ++i) CHECK(by_d[i] == second.coefficient(i));

      // phi q via Phi_n
      Polynomial product = phi * q;
      RatVector by_phi = build_Phi(p, n).apply(coeffs);
      for (long i = 0; i <= n + 2; ++i) {
        CHECK(by_phi[i] == product.coefficient(i));
      }
    }
  }
}

TEST_CASE("check_self_adjoint holds for classical data and spots tampering") {
  MomentSequence leg = fixtures::legendre_moments(4);
  CHECK(check_self_adjoint(fixtures::legendre(), build_gram(leg, 4)));
  CHECK(check_self_adjoint(fixtures::legendre(), build_gram(leg, 0)));

  // mu_3 enters the order-2 boundary block
  MomentSequence bad_mu3{
      {Rat(2), Rat(0), Rat(2, 3), Rat(1, 10), Rat(2, 5)}, fixtures::legendre(), 0};
  CHECK_FALSE(check_self_adjoint(fixtures::legendre(), build_gram(bad_mu3, 2)));

  // mu_2n only appears in the symmetric corner of the order-n identity, so a
  // tampered mu_4 is invisible at order 2 and caught at order 3
  MomentSequence bad_mu4{
      {Rat(2), Rat(0), Rat(2, 3), Rat(0), Rat(1, 2), Rat(0), Rat(2, 7)},
      fixtures::legendre(), 0};
  CHECK(check_self_adjoint(fixtures::legendre(), build_gram(bad_mu4, 2)));
  CHECK_FALSE(check_self_adjoint(fixtures::legendre(), build_gram(bad_mu4, 3)));

  // DELTA satisfies the recurrence, so self-adjointness holds even though the
  // sequence is not classical.
  MomentSequence dirac = fixtures::delta_moments(3);
  CHECK(check_self_adjoint(fixtures::delta(), build_gram(dirac, 3)));
}

TEST_CASE("check_moment_kernel is the matrix form of the recurrence") {
  CHECK(check_moment_kernel(fixtures::legendre(), fixtures::legendre_moments(4)));
  CHECK_FALSE(
      check_moment_kernel(fixtures::hermite(), fixtures::laguerre_moments(4)));
  MomentSequence only_mu0{{Rat(1)}, fixtures::hermite(), 0};
  CHECK(check_moment_kernel(fixtures::hermite(), only_mu0));
  MomentSequence two{{Rat(1), Rat(0)}, fixtures::hermite(), 0};
  CHECK(check_moment_kernel(fixtures::hermite(), two));
}

TEST_CASE("self-adjointness fails within two orders of a mutated moment") {
  const long n = 6;
  for (const MomentSequence& base :
       {fixtures::hermite_moments(n), fixtures::laguerre_moments(n),
        fixtures::legendre_moments(n), fixtures::bessel_moments(n)}) {
    for (long i = 1; i < 2 * n; ++i) {
      MomentSequence mutated = base;
      mutated.values[i] += 1;
      long failed = -1;
      for (long ord = 0; ord <= n && failed < 0; ++ord) {
        if (!check_self_adjoint(base.source, build_gram(mutated, ord))) {
          failed = ord;
        }
      }
      REQUIRE(failed >= 0);
      CHECK(failed <= (i - 1 + 1) / 2 + 1);
    }
  }
}
