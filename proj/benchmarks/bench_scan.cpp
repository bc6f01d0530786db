#include <benchmark/benchmark.h>

#include "metatoeplitz_cli/commands.hpp"
#include "metatoeplitz_cli/grid.hpp"

using namespace metatoeplitz::cli;

static void BM_Scan(benchmark::State& state) {
  ScanOptions options;
  options.lambda_re = parse_range("-2:0.5:101", "bench");
  options.lambda_im = parse_range("-1:1:3", "bench");
  options.norm_a = parse_range("0:2:5", "bench");
  options.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_rows(options));
}
BENCHMARK(BM_Scan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
