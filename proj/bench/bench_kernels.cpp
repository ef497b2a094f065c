// Serial reference kernels against their OpenMP counterparts on the largest supported chains.

#include <benchmark/benchmark.h>

#include "hchain/thermal.hpp"

using namespace hchain;

namespace {

ChainSpec chain_for(int spin_arg, int length) {
  return {length, spin_arg == 0 ? SpinKind::Half : SpinKind::One, 1.0};
}

Execution exec_for(int arg) { return arg == 0 ? Execution::Serial : Execution::Parallel; }

void BM_Diagonalize(benchmark::State& state) {
  const SpacePtr space = make_space(chain_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  const BlockOperator h = build_hamiltonian(space);
  const Execution exec = exec_for(static_cast<int>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize(h, exec).ground_energy());
}

void BM_EigenstateExpectations(benchmark::State& state) {
  const SpacePtr space = make_space(chain_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  const Spectrum spectrum = diagonalize(build_hamiltonian(space));
  const BlockOperator swap = swap_operator(space, 1, 2);
  const Execution exec = exec_for(static_cast<int>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(eigenstate_expectations(spectrum, swap, exec).sum());
}

void BM_ThermalBond(benchmark::State& state) {
  const SpacePtr space = make_space(chain_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  const Spectrum spectrum = diagonalize(build_hamiltonian(space));
  const Execution exec = exec_for(static_cast<int>(state.range(2)));
  for (auto _ : state) {
    const ThermalBond bond(spectrum, 1, 2, exec);
    benchmark::DoNotOptimize(bond.measure(1.0));
  }
}

void BM_ThermalScan(benchmark::State& state) {
  const SpacePtr space = make_space(chain_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  const Spectrum spectrum = diagonalize(build_hamiltonian(space));
  const ThermalBond bond(spectrum, 1, 2);
  const std::vector<double> grid = temperature_grid(0.05, 5.0, 400, GridScale::Log);
  const Execution exec = exec_for(static_cast<int>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(thermal_scan(bond, grid, exec).values.back());
}

// Args: {spin (0 half, 1 one), length, execution (0 serial, 1 parallel)}
#define HCHAIN_CASES ->Args({0, 10, 0})->Args({0, 10, 1})->Args({1, 6, 0})->Args({1, 6, 1})->Unit(benchmark::kMillisecond)

BENCHMARK(BM_Diagonalize) HCHAIN_CASES;
BENCHMARK(BM_EigenstateExpectations) HCHAIN_CASES;
BENCHMARK(BM_ThermalBond) HCHAIN_CASES;
BENCHMARK(BM_ThermalScan) HCHAIN_CASES;

}  // namespace

BENCHMARK_MAIN();
