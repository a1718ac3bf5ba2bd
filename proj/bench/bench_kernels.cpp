// Serial reference vs OpenMP paths of the evaluation and enumeration kernels.
#include <benchmark/benchmark.h>

#include "lpcert/kernels.hpp"
#include "lpcert/lattice.hpp"
#include "lpcert/proof2d.hpp"

using namespace lpcert;

namespace {

const Rational kWidth = Rational::parse("1e-12");

Execution execution_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

std::vector<Interval> gap_pieces(long count) {
  // u-pieces covering [2 pi 1.114^2, 2 pi 1.62^2] ~ [7.79, 16.5]
  const Rational lo = Rational::parse("7.79"), hi = Rational::parse("16.5");
  std::vector<Interval> pieces;
  for (long i = 0; i < count; ++i) {
    pieces.emplace_back(lo + (hi - lo) * Rational(i, count), lo + (hi - lo) * Rational(i + 1, count));
  }
  return pieces;
}

void BM_ProfileRanges(benchmark::State& state) {
  const auto pieces = gap_pieces(state.range(1));
  const Polynomial p = hexagonal_profile_f();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::profile_ranges(p, pieces, kWidth, execution_of(state)));
  }
}

void BM_ProfileAtNorms(benchmark::State& state) {
  const GramMatrix hex = GramMatrix::parse("2,1;1,2");
  const auto report = enumerate_vectors_below(hex, Rational(state.range(1)));
  std::vector<Interval> norms;
  for (const auto& v : report.vectors) norms.push_back(v.norm);
  const Polynomial p = hexagonal_profile_f();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::profile_at_norms(p, norms, kWidth, execution_of(state)));
  }
  state.counters["points"] = static_cast<double>(norms.size());
}

void BM_Enumeration(benchmark::State& state) {
  const GramMatrix d4 = GramMatrix::parse("2,-1,0,0;-1,2,-1,-1;0,-1,2,0;0,-1,0,2");
  EnumerationOptions options;
  options.execution = execution_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_vectors_below(d4, Rational(state.range(1)), options));
  }
}

void modes(benchmark::internal::Benchmark* b, std::initializer_list<long> sizes) {
  b->ArgNames({"parallel", "n"});
  for (long n : sizes) {
    b->Args({0, n});
    b->Args({1, n});
  }
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_ProfileRanges)->Apply([](auto* b) { modes(b, {64, 512}); });
BENCHMARK(BM_ProfileAtNorms)->Apply([](auto* b) { modes(b, {36, 144}); });
BENCHMARK(BM_Enumeration)->Apply([](auto* b) { modes(b, {8, 16}); });

BENCHMARK_MAIN();
