#include <benchmark/benchmark.h>

#include "floerlink/catalog.hpp"

using namespace floerlink;

namespace {

const Catalog& cat() {
  static Catalog c = load_catalog(FLOER_BENCH_CATALOG);
  return c;
}

LaurentPoly dense_product(int n, int factors) {
  LaurentPoly p = LaurentPoly::constant(n, 1);
  for (int f = 0; f < factors; ++f)
    for (int i = 0; i < n; ++i) p = mul(p, LaurentPoly::half_diff(n, i));
  return p;
}

void BM_mul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LaurentPoly p = dense_product(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(mul(p, p));
}
BENCHMARK(BM_mul)->Arg(2)->Arg(3);

void BM_divide_exact(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LaurentPoly p = dense_product(n, 4);
  const LaurentPoly d = dense_product(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(divide_exact(p, d));
}
BENCHMARK(BM_divide_exact)->Arg(2)->Arg(3);

void BM_build_whitehead(benchmark::State& state) {
  const Catalog& c = cat();
  for (auto _ : state)
    benchmark::DoNotOptimize(build_model(c.record("whitehead"), c));
}
BENCHMARK(BM_build_whitehead);

void BM_validate_borromean(benchmark::State& state) {
  const HModel& m = cat().model("borromean");
  for (auto _ : state) benchmark::DoNotOptimize(validate(m, 4));
}
BENCHMARK(BM_validate_borromean);

void BM_hfl_euler(benchmark::State& state) {
  const HModel& m = cat().model("borromean");
  for (auto _ : state) benchmark::DoNotOptimize(hfl_euler(m));
}
BENCHMARK(BM_hfl_euler);

void BM_verify_catalog(benchmark::State& state) {
  const Catalog& c = cat();
  for (auto _ : state) benchmark::DoNotOptimize(verify_catalog(c));
}
BENCHMARK(BM_verify_catalog);

}  // namespace

BENCHMARK_MAIN();
