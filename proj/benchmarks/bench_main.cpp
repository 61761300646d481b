// SPDX-License-Identifier: Apache-2.0

#include "spinnet/analysis.hpp"
#include "spinnet/dynamics.hpp"
#include "spinnet/hamiltonian.hpp"
#include "spinnet/network.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace spinnet;

namespace {

const CouplingMode kDipole{CouplingLaw::Dipole, 1.0};

void BM_GenerateChimera(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Network net = generate_chimera(size, size);
    benchmark::DoNotOptimize(net);
  }
}
BENCHMARK(BM_GenerateChimera)->Arg(2)->Arg(8)->Arg(16);

void BM_BuildHamiltonian(benchmark::State& state) {
  const Network net = builtin_network(BuiltinKind::MidLengths);
  for (auto _ : state) {
    HamiltonianMatrix h = build_hamiltonian(net, kDipole);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_BuildHamiltonian);

void BM_Eigendecompose(benchmark::State& state) {
  const int cells = static_cast<int>(state.range(0));
  const HamiltonianMatrix h =
      build_hamiltonian(generate_chimera(cells, cells), {CouplingLaw::Constant, 1.0});
  for (auto _ : state) {
    Spectrum spec = eigendecompose(h);
    benchmark::DoNotOptimize(spec);
  }
}
BENCHMARK(BM_Eigendecompose)->Arg(1)->Arg(2);

void BM_FidelityTrace(benchmark::State& state) {
  const HamiltonianMatrix h = build_hamiltonian(builtin_network(BuiltinKind::MinMax), kDipole);
  const QuantumState psi0 = localized_state(8, 0);
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FidelityTrace tr = fidelity_trace(h, psi0, samples);
    benchmark::DoNotOptimize(tr);
  }
}
BENCHMARK(BM_FidelityTrace)->Arg(2001);

void BM_Rk4Window(benchmark::State& state) {
  const HamiltonianMatrix h =
      build_hamiltonian(builtin_network(BuiltinKind::MaxLengths), kDipole);
  const QuantumState psi0 = localized_state(8, 0);
  const double t = 1.0 / j_min(h);
  for (auto _ : state) {
    QuantumState psi = rk4_evolve(h, psi0, t, t / 1e4);
    benchmark::DoNotOptimize(psi);
  }
}
BENCHMARK(BM_Rk4Window);

void BM_GearyFullChip(benchmark::State& state) {
  const Network net = generate_chimera(16, 16);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  QubitDataset data;
  for (NodeId id : net.nodes) data.records[id] = {id, uni(rng), uni(rng), uni(rng), uni(rng)};
  for (auto _ : state) {
    auto table = geary_table(data, net);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_GearyFullChip);

}  // namespace

BENCHMARK_MAIN();
