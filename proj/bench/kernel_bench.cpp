// Serial reference kernels against their OpenMP twins.

#include <benchmark/benchmark.h>

#include <random>

#include "fliess/kernels.hpp"
#include "fliess/parse.hpp"
#include "fliess/realization.hpp"

using namespace fliess;

namespace {

Series random_series(std::mt19937_64& rng, std::size_t terms, std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<int> bit(0, 1), coeff(-5, 5);
  Series::Terms t;
  while (t.size() < terms) {
    std::vector<Letter> w(len(rng));
    for (auto& x : w) x = static_cast<Letter>(bit(rng));
    const int c = coeff(rng);
    if (c != 0) t[Word(std::move(w))] = c;
  }
  return Series(std::move(t));
}

// Operands with range(0) terms each, words of length 2..6.
struct ShufflePair {
  Series a, b;
  explicit ShufflePair(std::size_t terms) {
    std::mt19937_64 rng(0xBE7C5EED + terms);
    a = random_series(rng, terms, 2, 6);
    b = random_series(rng, terms, 2, 6);
  }
};

void BM_ShuffleSerial(benchmark::State& state) {
  const ShufflePair p(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::shuffle_terms_serial(p.a.terms(), p.b.terms(), 12));
}

void BM_ShuffleParallel(benchmark::State& state) {
  const ShufflePair p(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::shuffle_terms_parallel(p.a.terms(), p.b.terms(), 12));
}

// A dense three-state quadratic system; range(0) is the word length.
Realization quadratic_system() {
  auto z = [](const char* text) { return parse_commutative(text, VariableFamily::State); };
  Realization sys;
  sys.n = 3;
  sys.z0 = {1, -1, 2};
  sys.g0 = {z("z2 z3 - z1"), z("z1^2 + z3"), z("z1 - z2 + 1")};
  sys.g1 = {z("z3 + 1"), z("z1 z2"), z("z2^2 - 2")};
  sys.h = z("z1 z2 + z3^2");
  return sys;
}

void BM_GeneratingSeriesSerial(benchmark::State& state) {
  const Realization sys = quadratic_system();
  for (auto _ : state) benchmark::DoNotOptimize(generating_series_serial(sys, static_cast<std::size_t>(state.range(0))));
}

void BM_GeneratingSeriesParallel(benchmark::State& state) {
  const Realization sys = quadratic_system();
  for (auto _ : state) benchmark::DoNotOptimize(generating_series(sys, static_cast<std::size_t>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_ShuffleSerial)->Arg(8)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShuffleParallel)->Arg(8)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GeneratingSeriesSerial)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GeneratingSeriesParallel)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
