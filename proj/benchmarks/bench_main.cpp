#include <benchmark/benchmark.h>

#include "antlab/constructions.hpp"
#include "antlab/detect.hpp"
#include "antlab/engine.hpp"
#include "antlab/montecarlo.hpp"

using namespace antlab;

namespace {

// Raw stepping on the open grid; LLRL keeps growing without a highway for a long time.
void BM_Step(benchmark::State& state, const char* word) {
  const RuleWord w = RuleWord::parse(word);
  const auto steps = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    Simulator sim(w, Configuration{});
    sim.run(steps);
    benchmark::DoNotOptimize(sim.position());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(steps));
}
BENCHMARK_CAPTURE(BM_Step, LR, "LR")->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Step, LLRL, "LLRL")->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_DetectWhite(benchmark::State& state, const char* word) {
  const RuleWord w = RuleWord::parse(word);
  for (auto _ : state) {
    DetectionReport r = detect(w, Configuration{});
    benchmark::DoNotOptimize(r.period);
  }
}
BENCHMARK_CAPTURE(BM_DetectWhite, LR, "LR")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_DetectWhite, LLRL, "LLRL")->Unit(benchmark::kMillisecond);

void BM_VerifyFundamental(benchmark::State& state) {
  const Highway h = fundamental_highway(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_highway(h).accepted);
}
BENCHMARK(BM_VerifyFundamental)->Arg(2)->Arg(8);

void BM_CensusBatch(benchmark::State& state, const char* word) {
  ExperimentSpec spec;
  spec.rule = RuleWord::parse(word);
  spec.runs = static_cast<std::uint64_t>(state.range(0));
  spec.seed = 1;
  CensusOptions opts;
  opts.workers = 1;
  for (auto _ : state) {
    CensusReport r = run_census(spec, opts);
    benchmark::DoNotOptimize(r.no_highway);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK_CAPTURE(BM_CensusBatch, LLR, "LLR")->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CensusBatch, LR, "LR")->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
