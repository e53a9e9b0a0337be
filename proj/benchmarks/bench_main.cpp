#include <benchmark/benchmark.h>

#include "anneal/adaptive.hpp"
#include "anneal/chains.hpp"
#include "anneal/estimator.hpp"
#include "anneal/models.hpp"
#include "anneal/samplers.hpp"
#include "anneal/theory.hpp"
#include "random_instances.hpp"

using namespace anneal;

namespace {

void BM_ExactSampler(benchmark::State& st) {
  auto gen = make_rng(1, 0);
  ExactSampler s(anneal::testing::random_explicit_z(gen, static_cast<std::size_t>(st.range(0)), 20.0));
  auto rng = make_rng(2, 0);
  for (auto _ : st) benchmark::DoNotOptimize(s.sample_batch(Beta(0.5), 4096, rng));
  st.SetItemsProcessed(st.iterations() * 4096);
}
BENCHMARK(BM_ExactSampler)->Arg(10)->Arg(100)->Arg(1000);

void BM_GlauberColorings(benchmark::State& st) {
  auto sys = GibbsSystem::colorings(Graph::grid(static_cast<std::size_t>(st.range(0))), 5);
  auto state = fixed_start_state(sys);
  auto rng = make_rng(3, 0);
  for (auto _ : st) chain_step(sys, state, Beta(1.0), rng);
  st.SetItemsProcessed(st.iterations());
}
BENCHMARK(BM_GlauberColorings)->Arg(4)->Arg(16);

void BM_MatchingChain(benchmark::State& st) {
  auto sys = GibbsSystem::matchings(Graph::grid(static_cast<std::size_t>(st.range(0))));
  auto state = fixed_start_state(sys);
  auto rng = make_rng(4, 0);
  for (auto _ : st) chain_step(sys, state, Beta(0.3), rng);
  st.SetItemsProcessed(st.iterations());
}
BENCHMARK(BM_MatchingChain)->Arg(4)->Arg(16);

void BM_AdaptiveSchedule(benchmark::State& st) {
  auto gen = make_rng(5, 0);
  auto z = anneal::testing::random_explicit_z(gen, static_cast<std::size_t>(st.range(0)), 25.0);
  std::uint64_t seed = 0;
  for (auto _ : st) {
    ExactSampler s(z);
    benchmark::DoNotOptimize(print_cooling_schedule(z.degree(), z.log_A(), s, AdaptiveConfig{}, seed++));
  }
}
BENCHMARK(BM_AdaptiveSchedule)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_ExistenceSchedule(benchmark::State& st) {
  auto gen = make_rng(6, 0);
  auto z = anneal::testing::random_explicit_z(gen, static_cast<std::size_t>(st.range(0)), 25.0);
  for (auto _ : st) benchmark::DoNotOptimize(existence_schedule(z));
}
BENCHMARK(BM_ExistenceSchedule)->Arg(50)->Arg(500)->Unit(benchmark::kMicrosecond);

void BM_Enumerate(benchmark::State& st) {
  auto sys = GibbsSystem::colorings(Graph::grid(3), 5);  // 5^9 labelings
  unsigned const workers = static_cast<unsigned>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_log_levels(sys, kDefaultEnumerationCap, workers));
}
BENCHMARK(BM_Enumerate)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EndToEndTriangle(benchmark::State& st) {
  auto sys = GibbsSystem::colorings(Graph::cycle(3), 3);
  auto z = enumerate_coefficients(sys);
  std::uint64_t seed = 0;
  for (auto _ : st) {
    ExactSampler s(z);
    benchmark::DoNotOptimize(end_to_end(sys, s, EstimatorConfig{}, seed++, &z));
  }
}
BENCHMARK(BM_EndToEndTriangle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
