#include <benchmark/benchmark.h>

#include "gl2q/bialgebra/cocommutator.hpp"
#include "gl2q/bialgebra/rmatrix.hpp"
#include "gl2q/contraction/contraction.hpp"
#include "gl2q/poissonlie/poisson.hpp"
#include "gl2q/quantum/hopf.hpp"
#include "gl2q/quantum/rmatrix.hpp"
#include "gl2q/spinchain/chain.hpp"

using namespace gl2q;

static void BM_CojacobiConstraints(benchmark::State& state) {
  const auto delta = bialg::generic_cocommutator();
  for (auto _ : state) benchmark::DoNotOptimize(bialg::cojacobi_constraints(delta));
}
BENCHMARK(BM_CojacobiConstraints);

static void BM_SklyaninTable(benchmark::State& state) {
  const auto r = bialg::generic_r();
  for (auto _ : state) benchmark::DoNotOptimize(poisson::sklyanin_table(r));
}
BENCHMARK(BM_SklyaninTable);

static void BM_Contract(benchmark::State& state) {
  const auto family = static_cast<contract::ContractionFamily>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(contract::contract(family));
  state.SetLabel(std::string(contract::family_name(family)));
}
BENCHMARK(BM_Contract)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_QYBE(benchmark::State& state) {
  const auto r = quantum::build_R_Ia(0.7, 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(quantum::qybe_check(r));
}
BENCHMARK(BM_QYBE);

static void BM_PrimitiveScalarCoassociativity(benchmark::State& state) {
  const auto rule = quantum::lm_rule(0.5, 0.3, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(quantum::coassociativity_primitive_scalar(rule, 20, 1));
}
BENCHMARK(BM_PrimitiveScalarCoassociativity)->Unit(benchmark::kMillisecond);

static void BM_ChainBuild(benchmark::State& state) {
  chain::ChainSpec spec;
  spec.bonds = static_cast<int>(state.range(0));
  spec.b = 0.7;
  spec.b_plus = 0.4;
  spec.deformation = chain::Deformation::deformed;
  for (auto _ : state) benchmark::DoNotOptimize(chain::chain_hamiltonian(spec));
}
BENCHMARK(BM_ChainBuild)->DenseRange(3, 11, 4)->Unit(benchmark::kMillisecond);

static void BM_ChainInvariance(benchmark::State& state) {
  chain::ChainSpec spec;
  spec.bonds = static_cast<int>(state.range(0));
  spec.b = 0.7;
  spec.b_plus = 0.4;
  spec.deformation = chain::Deformation::deformed;
  const auto h = chain::chain_hamiltonian(spec);
  for (auto _ : state) benchmark::DoNotOptimize(chain::invariance_check(h));
}
BENCHMARK(BM_ChainInvariance)->DenseRange(3, 11, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
