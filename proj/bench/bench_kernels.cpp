// Serial reference against the OpenMP rank kernel.

#include <benchmark/benchmark.h>

#include <random>

#include "cyclotome/chain_complex.hpp"
#include "cyclotome/kernels.hpp"
#include "cyclotome/nerve.hpp"

using namespace cyclotome;

namespace {

SparseMatrix random_matrix(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<int> val(-3, 3);
  SparseMatrix M(n, n + n / 2);
  for (std::size_t c = 0; c < M.cols(); ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      if (coin(rng) < density) M.add(r, c, val(rng));
    }
  }
  return M;
}

// Top boundary matrix of the normalized chains of the cyclic nerve of S_3.
const SparseMatrix& nerve_boundary() {
  static const SparseMatrix d = [] {
    CyclicNerve X(FiniteMonoid::symmetric3(), 4);
    return normalized_chains(X, Ring::rationals(), 4).d[4];
  }();
  return d;
}

Ring ring_of(std::int64_t code) { return code == 0 ? Ring::rationals() : Ring::prime_field(static_cast<std::uint32_t>(code)); }

void BM_RankSerialRandom(benchmark::State& state) {
  const SparseMatrix M = random_matrix(static_cast<std::size_t>(state.range(0)), 0.02, 1);
  const Ring R = ring_of(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(rank_serial(M, R));
}

void BM_RankParallelRandom(benchmark::State& state) {
  const SparseMatrix M = random_matrix(static_cast<std::size_t>(state.range(0)), 0.02, 1);
  const Ring R = ring_of(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(rank_parallel(M, R));
}

void BM_RankSerialNerve(benchmark::State& state) {
  const Ring R = ring_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank_serial(nerve_boundary(), R));
}

void BM_RankParallelNerve(benchmark::State& state) {
  const Ring R = ring_of(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rank_parallel(nerve_boundary(), R));
}

}  // namespace

// Over Q the fill-in makes entries grow quickly, so the rational cases stay small.
BENCHMARK(BM_RankSerialRandom)->ArgsProduct({{100, 200}, {0}})->ArgsProduct({{200, 400, 800}, {7}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallelRandom)->ArgsProduct({{100, 200}, {0}})->ArgsProduct({{200, 400, 800}, {7}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankSerialNerve)->Arg(0)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallelNerve)->Arg(0)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
