#include <benchmark/benchmark.h>

#include "hyperseries/oracle.hpp"

using namespace hyperseries;

namespace {

void BM_CountProfile(benchmark::State& state) {
  const EdgeProfile p{{2, static_cast<int>(state.range(0))}};
  for (auto _ : state) benchmark::DoNotOptimize(count_profile(5, p));
  state.SetItemsProcessed(state.iterations() * assignment_count(5, p).get_si());
}
BENCHMARK(BM_CountProfile)->Arg(3)->Arg(4)->Arg(5);

void BM_Lemma(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_lemma(static_cast<int>(state.range(0)), 6));
}
BENCHMARK(BM_Lemma)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
