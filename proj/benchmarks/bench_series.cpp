#include <benchmark/benchmark.h>

#include "hyperseries/series.hpp"

using namespace hyperseries;

namespace {

// Dense-ish series over t and u_2..u_M with every coefficient 1/(1 + t_deg).
Series sample(const TruncationContext& ctx) {
  SeriesBuilder b(ctx);
  for (int td = 0; td <= ctx.t_max; ++td) {
    for (int i = 2; i <= ctx.alphabet.max_edge_size; ++i) {
      Monomial m = Monomial::of(Variable::t(), td).with(Variable::u(i), 1);
      b.add(m, Rational(BigInt(1), BigInt(1 + td)));
    }
  }
  return b.build();
}

void BM_Mul(benchmark::State& state) {
  const auto ctx = TruncationContext::tu(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 8);
  const Series a = sample(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, a));
}
BENCHMARK(BM_Mul)->Arg(4)->Arg(6)->Arg(8);

void BM_Exp(benchmark::State& state) {
  const auto ctx = TruncationContext::tu(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 8);
  const Series a = sample(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(exp(a));
}
BENCHMARK(BM_Exp)->Arg(4)->Arg(6)->Arg(8);

void BM_Log(benchmark::State& state) {
  const auto ctx = TruncationContext::tu(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)), 8);
  const Series a = Series::one(ctx) + sample(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(log(a));
}
BENCHMARK(BM_Log)->Arg(4)->Arg(6)->Arg(8);

void BM_Reversion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ctx = TruncationContext::tu(n, n, 2);
  const Series y = Series::variable(ctx, Variable::t());
  const Series f = mul(y, exp(-Series::monomial(ctx, Monomial::of(Variable::t()).with(Variable::u(2), 1))));
  for (auto _ : state) benchmark::DoNotOptimize(reversion(f));
}
BENCHMARK(BM_Reversion)->Arg(6)->Arg(10)->Arg(14);

}  // namespace
