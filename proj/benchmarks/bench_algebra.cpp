#include <benchmark/benchmark.h>

#include <random>

#include "galint/dynamics.hpp"
#include "galint/factor.hpp"
#include "galint/pipeline.hpp"

namespace galint {

static UPoly random_poly(std::mt19937_64& rng, long degree) {
  std::uniform_int_distribution<long> d(-20, 20);
  std::vector<GaussRat> c;
  for (long k = 0; k <= degree; ++k) c.emplace_back(QRat(d(rng)), QRat(d(rng)));
  c.back() = GaussRat(1);
  return UPoly(c);
}

static void BM_PolyGcd(benchmark::State& state) {
  std::mt19937_64 rng(7);
  UPoly g = random_poly(rng, state.range(0) / 2);
  UPoly a = g * random_poly(rng, state.range(0) / 2);
  UPoly b = g * random_poly(rng, state.range(0) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Arg(8)->Arg(16)->Arg(32);

static void BM_PartialFractions(benchmark::State& state) {
  UPoly den(GaussRat(1));
  for (long k = 0; k < state.range(0); ++k) den *= UPoly::linear(GaussRat(QRat(k), QRat(k % 3))).pow(2);
  RatFn f(UPoly::x() + UPoly(GaussRat(5)), den);
  for (auto _ : state) benchmark::DoNotOptimize(partial_fractions(f));
}
BENCHMARK(BM_PartialFractions)->Arg(2)->Arg(4)->Arg(8);

static void BM_KarabutIntegral(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  SystemDesc d = karabut_system(n);
  for (auto _ : state) benchmark::DoNotOptimize(check_first_integral(d.field, d.integrals[1], d.variables));
}
BENCHMARK(BM_KarabutIntegral)->Arg(3)->Arg(5)->Arg(7)->Arg(9);

}  // namespace galint
