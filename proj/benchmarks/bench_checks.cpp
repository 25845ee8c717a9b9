// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "nmlab/extension.hpp"
#include "nmlab/harness.hpp"
#include "nmlab/representations.hpp"

namespace {

using namespace nmlab;

const Language& pq() {
  static const Language lang({"p", "q"});
  return lang;
}

void BM_UniverseBuild(benchmark::State& state) {
  for (auto _ : state) {
    Universe u = Universe::with_default_pool(pq(), static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(u.sets().size());
  }
}
BENCHMARK(BM_UniverseBuild)->Arg(1)->Arg(2)->Arg(3);

void BM_Property(benchmark::State& state) {
  const Universe u = Universe::with_default_pool(pq(), 3);
  const InferenceOp op = op_poole({parse_formula_set("p, !p", pq())}, pq());
  const auto kind = static_cast<PropertyKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_property(op, kind, u).outcome);
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_Property)
    ->Arg(static_cast<int>(PropertyKind::supraclassicality))
    ->Arg(static_cast<int>(PropertyKind::deductivity))
    ->Arg(static_cast<int>(PropertyKind::cumulativity))
    ->Unit(benchmark::kMillisecond);

void BM_CumulativeTrace(benchmark::State& state) {
  const Universe u = Universe::with_default_pool(pq(), 3);
  const InferenceOp op = op_poole({parse_formula_set("p, !p", pq())}, pq());
  for (auto _ : state) benchmark::DoNotOptimize(verify_representation(op, ReprKind::cumulative_trace, u).outcome);
}
BENCHMARK(BM_CumulativeTrace)->Unit(benchmark::kMillisecond);

void BM_UniqueExtension(benchmark::State& state) {
  const Universe u = Universe::with_default_pool(pq(), 3);
  const InferenceOp op = op_cwa(pq());
  for (auto _ : state) benchmark::DoNotOptimize(verify_unique_extension(op, u).outcome);
}
BENCHMARK(BM_UniqueExtension)->Unit(benchmark::kMillisecond);

void BM_Fuzz(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_fuzz({.seed = 1, .count = static_cast<std::size_t>(state.range(0))}).passed());
  }
}
BENCHMARK(BM_Fuzz)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
