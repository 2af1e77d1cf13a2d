#include <benchmark/benchmark.h>

#include "hyperseries/bdb.hpp"
#include "hyperseries/hypertree.hpp"
#include "hyperseries/identities.hpp"

using namespace hyperseries;

namespace {

void BM_ComputeC(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ctx = TruncationContext::tu(n, n + 3, 8);
  for (auto _ : state) benchmark::DoNotOptimize(compute_C(ctx));
}
BENCHMARK(BM_ComputeC)->Arg(5)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_FixedPoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ctx = TruncationContext::tu(n, n, 8);
  for (auto _ : state) benchmark::DoNotOptimize(solve_R_fixed_point(ctx));
}
BENCHMARK(BM_FixedPoint)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_IdentitySuite(benchmark::State& state) {
  const IdentityOptions o;
  for (auto _ : state) benchmark::DoNotOptimize(verify_identities(run_pipeline(identity_context(o, 8)), o));
}
BENCHMARK(BM_IdentitySuite)->Unit(benchmark::kMillisecond);

void BM_LhsSeries(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PhiCoefficients phi = random_phi(42);
  const auto ctx = TruncationContext::tz(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(lhs_series(phi, ctx));
}
BENCHMARK(BM_LhsSeries)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
