#include <benchmark/benchmark.h>

#include "eocloak/optimizer.hpp"

using namespace eocloak;

namespace {

CloakConfig disks(int n) {
  CloakConfig cfg;
  cfg.core = make_circle({0.0, 0.0}, 0.5, n);
  cfg.object = make_circle({0.0, 0.0}, 1.0, n);
  cfg.region = make_circle({0.0, 0.0}, 2.0, n);
  cfg.eps_s = 5.0 / 3.0;
  cfg.zeta0 = 2.0 / 3.0;
  cfg.H = HarmonicField{FieldFamily::UniformX};
  cfg.P = pressure_partner(cfg.H);
  return cfg;
}

void BM_AssembleSlp(benchmark::State& state) {
  const Curve c = make_named_shape("kite", 1.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_slp(c));
}
BENCHMARK(BM_AssembleSlp)->Arg(64)->Arg(128)->Arg(256);

void BM_AssembleNpAdjoint(benchmark::State& state) {
  const Curve c = make_named_shape("kite", 1.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_np_adjoint(c));
}
BENCHMARK(BM_AssembleNpAdjoint)->Arg(64)->Arg(128)->Arg(256);

void BM_SolveElectric(benchmark::State& state) {
  const CloakConfig cfg = disks(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_electric(cfg));
}
BENCHMARK(BM_SolveElectric)->Arg(64)->Arg(128)->Arg(256);

void BM_SolvePressure(benchmark::State& state) {
  const CloakConfig cfg = disks(static_cast<int>(state.range(0)));
  const ElectricSolution esol = solve_electric(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(solve_pressure(cfg, esol));
}
BENCHMARK(BM_SolvePressure)->Arg(64)->Arg(128)->Arg(256);

void BM_OptimizeCloak(benchmark::State& state) {
  const CloakConfig cfg = disks(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(optimize_cloak(cfg));
}
BENCHMARK(BM_OptimizeCloak)->Arg(64)->Arg(128);

} // namespace

BENCHMARK_MAIN();
