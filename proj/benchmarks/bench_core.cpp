#include <benchmark/benchmark.h>

#include "g1jac/explicit_omega.hpp"
#include "g1jac/invariants.hpp"
#include "g1jac/secant.hpp"

namespace {

using namespace g1jac;

WeierstrassCurve curve_37a() {
  return WeierstrassCurve(Rational(0), Rational(0), Rational(1), Rational(-1), Rational(0));
}

void BM_PfaffianSix(benchmark::State& state) {
  const AltPolyMatrix lambda = lambda_matrix(6);
  std::vector<int> all{0, 1, 2, 3, 4, 5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pfaffian(lambda, all));
  }
}
BENCHMARK(BM_PfaffianSix);

void BM_LambdaInvariants(benchmark::State& state) {
  const AltPolyMatrix lambda = lambda_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(c4_invariant(lambda));
    benchmark::DoNotOptimize(c6_invariant(lambda));
  }
}
BENCHMARK(BM_LambdaInvariants)->Arg(5)->Arg(7)->Arg(9);

void BM_ExplicitOmega(benchmark::State& state) {
  const WeierstrassCurve e = curve_37a();
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_omega_explicit(e, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ExplicitOmega)->Arg(5)->Arg(7);

void BM_CurveQuadrics(benchmark::State& state) {
  const WeierstrassCurve e = curve_37a();
  for (auto _ : state) {
    benchmark::DoNotOptimize(curve_quadrics(e, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_CurveQuadrics)->Arg(5)->Arg(6)->Arg(7);

void BM_SecantChain(benchmark::State& state) {
  const WeierstrassCurve e = curve_37a();
  const FormBasis q = curve_quadrics(e, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(secant_chain(q));
  }
}
BENCHMARK(BM_SecantChain)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
