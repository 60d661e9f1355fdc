#include <benchmark/benchmark.h>

#include "galint/expr.hpp"
#include "galint/kovacic.hpp"
#include "galint/pipeline.hpp"

namespace galint {

static const char* kFourPoles =
    "3/(4*(t-2)^2) - (11-8*i)/(16*(t+4*i)^2) - (11+8*i)/(16*(t-4*i)^2) + 1/(20*(t-2))"
    " - (8+59*i)/(320*(t+4*i)) - (8-59*i)/(320*(t-4*i))";

static void BM_KovacicThreePoles(benchmark::State& state) {
  RatFn r = parse_ratfn(kFourPoles, "t");
  for (auto _ : state) benchmark::DoNotOptimize(kovacic_classify(r));
}
BENCHMARK(BM_KovacicThreePoles);

static void BM_KovacicBessel(benchmark::State& state) {
  RatFn r = parse_ratfn("3/(4*s^2) - 1", "s");
  for (auto _ : state) benchmark::DoNotOptimize(kovacic_classify(r));
}
BENCHMARK(BM_KovacicBessel);

static void BM_Pipeline5(benchmark::State& state) {
  SystemDesc d = load_system_file(GALINT_DATA_DIR "/systems/karabut5.json");
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(d));
}
BENCHMARK(BM_Pipeline5)->Unit(benchmark::kMillisecond);

}  // namespace galint

BENCHMARK_MAIN();
