#include <gonal/bounds.hpp>
#include <gonal/factorization.hpp>
#include <gonal/modular_invariants.hpp>
#include <gonal/screen.hpp>

#include <benchmark/benchmark.h>

namespace {

void BM_Factorize(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gonal::factorize(n));
}
// A smooth level, a prime, and a prime near the top of the intended range.
BENCHMARK(BM_Factorize)->Arg(720720)->Arg(999983)->Arg(9999991);

void BM_ModularInvariants(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gonal::modular_invariants(n));
}
BENCHMARK(BM_ModularInvariants)->Arg(97)->Arg(10080)->Arg(9999991);

void BM_ProjectiveLineCount(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gonal::psi_projective_line_count(n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_ProjectiveLineCount)->Arg(256)->Arg(512)->Arg(1024)->Arg(2000)->Complexity();

void BM_DeuringMass(benchmark::State& state) {
  const std::int64_t p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gonal::supersingular_mass_deuring(p));
}
BENCHMARK(BM_DeuringMass)->Arg(31)->Arg(97)->Arg(199);

void BM_ScreenLevel(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gonal::screen_level(n, 2));
}
BENCHMARK(BM_ScreenLevel)->Arg(97)->Arg(5696)->Arg(9999990);

void BM_EnumerateAdmissible(benchmark::State& state) {
  const std::int64_t d = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(gonal::enumerate_admissible(d));
}
BENCHMARK(BM_EnumerateAdmissible)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_LevelBound(benchmark::State& state) {
  const std::int64_t d = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(gonal::level_bound(d, gonal::BoundVariant::combined));
}
BENCHMARK(BM_LevelBound)->Arg(2)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
