// Serial reference vs OpenMP partition on the largest table cells.
#include <benchmark/benchmark.h>

#include "pathclass/canonical.hpp"
#include "pathclass/partition.hpp"

namespace {

using pathclass::PathMode;

void run(benchmark::State& state, PathMode mode, bool parallel) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto tau = pathclass::pattern_of(pathclass::TauKind::UDU);
  pathclass::PartitionOptions opt;
  opt.keep_classes = false;
  opt.bounds = {64, 32};
  for (auto _ : state) {
    auto r = parallel ? pathclass::partition_classes(n, tau, mode, opt)
                      : pathclass::partition_classes_serial(n, tau, mode, opt);
    benchmark::DoNotOptimize(r.class_count);
  }
  state.counters["paths/s"] = benchmark::Counter(
      static_cast<double>(pathclass::partition_classes_serial(n, tau, mode, opt).path_count),
      benchmark::Counter::kIsIterationInvariantRate);
}

void BM_BallotSerial(benchmark::State& s) { run(s, PathMode::Ballot, false); }
void BM_BallotParallel(benchmark::State& s) { run(s, PathMode::Ballot, true); }
void BM_DyckSerial(benchmark::State& s) { run(s, PathMode::Dyck, false); }
void BM_DyckParallel(benchmark::State& s) { run(s, PathMode::Dyck, true); }

}  // namespace

BENCHMARK(BM_BallotSerial)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BallotParallel)->Arg(16)->Arg(20)->Arg(24)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DyckSerial)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DyckParallel)->Arg(10)->Arg(12)->Arg(14)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
