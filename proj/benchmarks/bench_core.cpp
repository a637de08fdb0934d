#include <benchmark/benchmark.h>

#include "orthopoly/orthopoly.hpp"

using namespace orthopoly;

namespace {

PearsonData legendre(long range) {
  return validate_pearson(Rat(-1), Rat(0), Rat(1), Rat(-2), Rat(0), range);
}

void BM_GenerateMoments(benchmark::State& state) {
  const long n = state.range(0);
  PearsonData p = legendre(2 * n);
  for (auto _ : state) {
    MomentSequence m = generate_moments(p, Rat(2), n);
    benchmark::DoNotOptimize(m.values.data());
  }
}
BENCHMARK(BM_GenerateMoments)->Arg(16)->Arg(64);

void BM_CholeskyChain(benchmark::State& state) {
  const long n = state.range(0);
  MomentSequence m = generate_moments(legendre(2 * n), Rat(2), n);
  for (auto _ : state) {
    CholeskyState st = cholesky_chain(m, n);
    benchmark::DoNotOptimize(st.h_values().data());
  }
}
BENCHMARK(BM_CholeskyChain)->Arg(8)->Arg(16);

void BM_HankelDeterminant(benchmark::State& state) {
  const long n = state.range(0);
  MomentSequence m = generate_moments(legendre(2 * n), Rat(2), n);
  for (auto _ : state) {
    Rat det = hankel_determinant(m, n);
    benchmark::DoNotOptimize(det.get_num().get_mpz_t());
  }
}
BENCHMARK(BM_HankelDeterminant)->Arg(8)->Arg(12);

void BM_BochnerVerify(benchmark::State& state) {
  const long n = state.range(0);
  MomentSequence m = generate_moments(legendre(2 * n), Rat(2), n);
  CholeskyState st = cholesky_chain(m, n);
  PearsonData p = m.source;
  for (auto _ : state) {
    EigenReport report = bochner_verify(st, p);
    benchmark::DoNotOptimize(report.all_passed);
  }
}
BENCHMARK(BM_BochnerVerify)->Arg(12);

void BM_HahnBasis(benchmark::State& state) {
  const long n = 8;
  const long k = state.range(0);
  MomentSequence m = generate_moments(legendre(2 * (n + k)), Rat(2), n + k);
  CholeskyState st = cholesky_chain(m, n + k);
  PearsonData p = m.source;
  for (auto _ : state) {
    DerivedBasis db = hahn_basis(st, p, k);
    benchmark::DoNotOptimize(db.h.data());
  }
}
BENCHMARK(BM_HahnBasis)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
