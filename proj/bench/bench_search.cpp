#include <benchmark/benchmark.h>

#include "jh/search.hpp"

namespace {

jh::Execution execution(const benchmark::State& state) {
  return state.range(0) == 0 ? jh::Execution::serial() : jh::Execution::with_threads(static_cast<int>(state.range(0)));
}

// range(0): 0 for the serial reference, otherwise the thread count.
void BM_SearchScales(benchmark::State& state) {
  jh::SearchQuery q;
  q.n = 5;
  q.ocy_limit = 2025;
  q.mcy_limit = 20000;
  const auto exec = execution(state);
  for (auto _ : state) benchmark::DoNotOptimize(jh::search_scales(q, exec).records.size());
}
BENCHMARK(BM_SearchScales)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SearchScalesNoPrune(benchmark::State& state) {
  jh::SearchQuery q;
  q.n = 5;
  q.ocy_limit = 2025;
  q.mcy_limit = 20000;
  q.prune = false;
  const auto exec = execution(state);
  for (auto _ : state) benchmark::DoNotOptimize(jh::search_scales(q, exec).records.size());
}
BENCHMARK(BM_SearchScalesNoPrune)->Arg(0)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Pentatonic(benchmark::State& state) {
  const auto exec = execution(state);
  for (auto _ : state) benchmark::DoNotOptimize(jh::search_pentatonic_bruteforce(5, 21, 5, exec).size());
}
BENCHMARK(BM_Pentatonic)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_QuadsOnOctave(benchmark::State& state) {
  const auto exec = execution(state);
  for (auto _ : state) benchmark::DoNotOptimize(jh::search_quads_on_octave(120, 100, exec).size());
}
BENCHMARK(BM_QuadsOnOctave)->Arg(0)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
