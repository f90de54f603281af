#include <benchmark/benchmark.h>

#include "majorana/majorana.hpp"

using namespace majorana;

static void BM_Stars(benchmark::State& state) {
  const SpinLabel l(static_cast<int>(state.range(0)));
  Rng rng = make_stream(1, 0);
  const SpinState psi = random_state(l, rng);
  for (auto _ : state) benchmark::DoNotOptimize(constellation_from_state(psi));
}
BENCHMARK(BM_Stars)->Arg(4)->Arg(12)->Arg(20)->Arg(40);

static void BM_RoundTrip(benchmark::State& state) {
  const SpinLabel l(static_cast<int>(state.range(0)));
  Rng rng = make_stream(2, 0);
  const SpinState psi = random_state(l, rng);
  for (auto _ : state) benchmark::DoNotOptimize(state_from_constellation(constellation_from_state(psi)));
}
BENCHMARK(BM_RoundTrip)->Arg(4)->Arg(20);

static void BM_Multipoles(benchmark::State& state) {
  const SpinLabel l(static_cast<int>(state.range(0)));
  Rng rng = make_stream(3, 0);
  const SpinState psi = random_state(l, rng);
  multipoles(psi);  // warm the tensor table
  for (auto _ : state) benchmark::DoNotOptimize(multipoles(psi));
}
BENCHMARK(BM_Multipoles)->Arg(4)->Arg(12)->Arg(20);

static void BM_QGrid(benchmark::State& state) {
  Rng rng = make_stream(4, 0);
  const SpinState psi = random_state(SpinLabel(6), rng);
  for (auto _ : state) benchmark::DoNotOptimize(q_grid(psi, 64, 128));
}
BENCHMARK(BM_QGrid);

static void BM_KingObjective(benchmark::State& state) {
  const SpinLabel l(static_cast<int>(state.range(0)));
  Rng rng = make_stream(5, 0);
  const Constellation c = constellation_from_state(random_state(l, rng));
  const int M = l.two_s() / 2;
  for (auto _ : state) benchmark::DoNotOptimize(objective(c, M));
}
BENCHMARK(BM_KingObjective)->Arg(6)->Arg(12)->Arg(20);

static void BM_KingSearch(benchmark::State& state) {
  SearchConfig c;
  c.M = 2;
  c.restarts = 4;
  c.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(minimize(SpinLabel(4), c));
}
BENCHMARK(BM_KingSearch)->Unit(benchmark::kMillisecond);

static void BM_Evolve(benchmark::State& state) {
  const SpinLabel l(static_cast<int>(state.range(0)));
  Rng rng = make_stream(6, 0);
  const SpinState psi = random_state(l, rng);
  const Hamiltonian h(l, random_hermitian(l.dimension(), rng));
  EvolveOptions o;
  o.output_times = {1.0};
  for (auto _ : state) benchmark::DoNotOptimize(evolve(psi, h, 1.0, o));
}
BENCHMARK(BM_Evolve)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
