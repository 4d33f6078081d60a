#include <benchmark/benchmark.h>

#include "kellerscope/rng.hpp"
#include "kellerscope/unipoly.hpp"

using namespace kellerscope;
using QP = UniPoly<Rat>;

namespace {

QP random_poly(Rng& rng, int deg) {
  std::vector<Rat> cs;
  for (int i = 0; i <= deg; ++i)
    cs.push_back(Rat(static_cast<int>(rng.next_range(-99, 99)), 1 + static_cast<int>(rng.next_below(9))));
  if (cs.back().is_zero()) cs.back() = Rat(1);
  return QP("x", std::move(cs));
}

void BM_resultant(benchmark::State& state) {
  Rng rng(1);
  QP f = random_poly(rng, static_cast<int>(state.range(0)));
  QP g = random_poly(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(resultant(f, g));
}
BENCHMARK(BM_resultant)->Arg(4)->Arg(8)->Arg(12);

void BM_gcd(benchmark::State& state) {
  Rng rng(2);
  QP h = random_poly(rng, static_cast<int>(state.range(0)) / 2);
  QP f = random_poly(rng, static_cast<int>(state.range(0)) / 2) * h;
  QP g = random_poly(rng, static_cast<int>(state.range(0)) / 2) * h;
  for (auto _ : state) benchmark::DoNotOptimize(gcd_poly(f, g));
}
BENCHMARK(BM_gcd)->Arg(8)->Arg(16);

void BM_multiply(benchmark::State& state) {
  Rng rng(3);
  QP f = random_poly(rng, static_cast<int>(state.range(0)));
  QP g = random_poly(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_multiply)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
