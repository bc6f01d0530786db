#include <benchmark/benchmark.h>

#include "metatoeplitz/model.hpp"
#include "metatoeplitz/oracle.hpp"
#include "metatoeplitz/random_instances.hpp"
#include "metatoeplitz/toeplitz.hpp"
#include "metatoeplitz/weyl.hpp"

using namespace metatoeplitz;

static void BM_ClassifyOperator(benchmark::State& state) {
  InstanceGenerator gen(1);
  const ToeplitzProblem p = gen.admissible_problem(state.range(0), InstanceMix::General);
  for (auto _ : state) benchmark::DoNotOptimize(classify_operator(p));
}
BENCHMARK(BM_ClassifyOperator)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

static void BM_WeylSymbol(benchmark::State& state) {
  InstanceGenerator gen(2);
  const ToeplitzProblem p = gen.admissible_problem(state.range(0), InstanceMix::CompactBiased);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_symbol(p));
}
BENCHMARK(BM_WeylSymbol)->Arg(1)->Arg(2)->Arg(4);

static void BM_TruncatedMatrix1d(benchmark::State& state) {
  const ModelInstance m = ModelInstance::scalar(cd(-0.3, 0.4), 0.2);
  const ToeplitzProblem p = m.problem();
  for (auto _ : state) benchmark::DoNotOptimize(truncated_matrix(p, static_cast<int>(state.range(0))).matrix);
}
BENCHMARK(BM_TruncatedMatrix1d)->Arg(10)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_TruncatedMatrix2d(benchmark::State& state) {
  InstanceGenerator gen(3);
  const ToeplitzProblem p = gen.admissible_model(2).problem();
  for (auto _ : state) benchmark::DoNotOptimize(truncated_matrix(p, static_cast<int>(state.range(0))).matrix);
}
BENCHMARK(BM_TruncatedMatrix2d)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
