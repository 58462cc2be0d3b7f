#include <benchmark/benchmark.h>

#include "valkit/valkit.hpp"

using namespace valkit;

static void BM_PadicInverse(benchmark::State& state) {
  const auto x = PadicNumber::from_rational(BigInt(3), BigInt(50), 7, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_PadicInverse)->Arg(32)->Arg(128)->Arg(512);

static void BM_SimpleZeroLift(benchmark::State& state) {
  const auto p = parse_univariate("x^2 - 2");
  for (auto _ : state) benchmark::DoNotOptimize(simple_zero_lift(p, 7, 3, state.range(0)));
}
BENCHMARK(BM_SimpleZeroLift)->Arg(10)->Arg(100)->Arg(1000);

static void BM_CountZeros(benchmark::State& state) {
  const auto f = parse_polynomial("x1^2 + x2^2 + x3^2 + x4^2").poly;
  for (auto _ : state) benchmark::DoNotOptimize(count_zeros_ff(f, state.range(0)));
}
BENCHMARK(BM_CountZeros)->Arg(7)->Arg(31);

static void BM_ZeroSearch(benchmark::State& state) {
  const Form f = parse_form("x1^2 + x2^2 + x3^2 + x4^2 + x5^2");
  for (auto _ : state) benchmark::DoNotOptimize(padic_zero_search(f, state.range(0)));
}
BENCHMARK(BM_ZeroSearch)->Arg(3)->Arg(13);

static void BM_HahnInverse(benchmark::State& state) {
  const auto g = HahnSeries::parse("t^(-1/2) + 1 + 2*t^(1/3)", ExponentGroup::Rationals, CoefficientField::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(g.inverse(Exponent(state.range(0))));
}
BENCHMARK(BM_HahnInverse)->Arg(2)->Arg(6);

static void BM_TerjanianReject(benchmark::State& state) {
  std::vector<BigInt> x(18);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = BigInt(4 * (i + 1));
  for (auto _ : state) benchmark::DoNotOptimize(terjanian_reject(x, 12));
}
BENCHMARK(BM_TerjanianReject);

static void BM_AkeCompare(benchmark::State& state) {
  const auto s = parse_sentence("exists x. x*x = -1");
  const auto primes = primes_in_range(2, 50);
  for (auto _ : state) benchmark::DoNotOptimize(ake_compare(s, static_cast<int>(state.range(0)), primes));
}
BENCHMARK(BM_AkeCompare)->Arg(2)->Arg(3);
BENCHMARK_MAIN();
