#include <benchmark/benchmark.h>

#include "milnor/batch.hpp"

namespace {

const std::vector<milnor::CorpusEntry>& entries() {
  static const auto all = milnor::corpus(7);
  return all;
}

void BM_RoundtripSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(milnor::roundtrip_serial(entries()));
  state.counters["instances"] = static_cast<double>(entries().size());
}

void BM_RoundtripParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(milnor::roundtrip_parallel(entries()));
  state.counters["instances"] = static_cast<double>(entries().size());
}

}  // namespace

BENCHMARK(BM_RoundtripSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RoundtripParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
