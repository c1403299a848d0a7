#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "btcprof/activity.hpp"
#include "btcprof/bits.hpp"
#include "btcprof/btc.hpp"
#include "btcprof/encoders.hpp"
#include "btcprof/generators.hpp"

namespace {

using namespace btcprof;

Trace random_trace(std::size_t width, std::size_t length) {
  std::mt19937_64 rng(42);
  Trace t(width);
  for (std::size_t k = 0; k < length; ++k) {
    Word w(width);
    for (std::size_t i = 0; i < width; ++i) w.set_bit(i, rng() & 1);
    t.push_back(std::move(w));
  }
  return t;
}

void BM_HammingDistance(benchmark::State& state) {
  const auto width = static_cast<std::size_t>(state.range(0));
  const Trace t = random_trace(width, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hamming_distance(t[0], t[1]));
  }
}
BENCHMARK(BM_HammingDistance)->Arg(16)->Arg(64)->Arg(1024);

void BM_CounterRun(benchmark::State& state) {
  const Trace t = random_trace(static_cast<std::size_t>(state.range(0)), 4096);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_counter(t).back().total_transition);
  }
  state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_CounterRun)->Arg(16)->Arg(256);

void BM_AnalyzeTrace(benchmark::State& state) {
  const Trace t = random_trace(static_cast<std::size_t>(state.range(0)), 4096);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze_trace(t).total_transitions);
  }
  state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_AnalyzeTrace)->Arg(16)->Arg(256);

void BM_Generate(benchmark::State& state) {
  const auto kind = static_cast<GeneratorKind>(state.range(0));
  GeneratorConfig config{
      .kind = kind,
      .seed = word_from_text("1011001010110110", Radix::kBinary, 16)};
  if (is_lfsr(kind)) config.taps = default_taps(16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate(config, 4096).size());
  }
  state.SetItemsProcessed(state.iterations() * 4096);
  state.SetLabel(std::string(to_string(kind)));
}
BENCHMARK(BM_Generate)->DenseRange(0, 5);

void BM_BusInvertEncode(benchmark::State& state) {
  const Trace t = random_trace(32, 4096);
  for (auto _ : state) {
    benchmark::DoNotOptimize(bus_invert_encode_trace(t).size());
  }
  state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_BusInvertEncode);

}  // namespace

BENCHMARK_MAIN();
