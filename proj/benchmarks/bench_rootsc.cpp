#include <benchmark/benchmark.h>

#include "rootsc/counting.hpp"
#include "rootsc/monoid.hpp"
#include "rootsc/root.hpp"

namespace {

void BM_FullMonoidClosure(benchmark::State& state) {
  const auto gens = rootsc::tn_generators(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(rootsc::closure(gens).size());
}
BENCHMARK(BM_FullMonoidClosure)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_RootAutomaton(benchmark::State& state) {
  const auto g = rootsc::ukl_generators(static_cast<std::size_t>(state.range(0)),
                                        static_cast<std::size_t>(state.range(1)));
  const rootsc::Transformation gens[] = {g.alpha, g.beta};
  const auto d = rootsc::based_dfa(gens);
  for (auto _ : state) benchmark::DoNotOptimize(rootsc::root_automaton(d).dfa.size());
}
BENCHMARK(BM_RootAutomaton)->Args({2, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_RootStateComplexity(benchmark::State& state) {
  const auto g = rootsc::ukl_generators(static_cast<std::size_t>(state.range(0)),
                                        static_cast<std::size_t>(state.range(1)));
  const rootsc::Transformation gens[] = {g.alpha, g.beta};
  const auto d = rootsc::based_dfa(gens);
  for (auto _ : state) benchmark::DoNotOptimize(rootsc::root_state_complexity(d));
}
BENCHMARK(BM_RootStateComplexity)->Args({2, 3})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_UklFormula(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(rootsc::max_ukl_size(n));
}
BENCHMARK(BM_UklFormula)->Arg(11)->Arg(41)->Arg(81);

void BM_Stirling(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(rootsc::stirling2(n, n / 2));
}
BENCHMARK(BM_Stirling)->Arg(60)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
