// Serial reference vs OpenMP oracle, and the two chain detectors.

#include <benchmark/benchmark.h>

#include <random>

#include "iam/core.hpp"
#include "iam/oracle.hpp"
#include "iam/symmetry.hpp"

using namespace iam;

namespace {

void BM_OracleSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_count_serial(n, n, k));
}

void BM_OracleParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_count(n, n, k));
}

void BM_ClassCounts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_count_all_classes(n, n, 3));
}

std::vector<BinaryMatrix> random_matrices(int size) {
  std::mt19937_64 rng(1);
  std::vector<BinaryMatrix> out;
  for (int it = 0; it < 64; ++it) {
    BinaryMatrix mat(size, size);
    for (int i = 1; i <= size; ++i)
      for (int j = 1; j <= size; ++j) mat.set(i, j, rng() % 4 != 0);
    out.push_back(mat);
  }
  return out;
}

void BM_ChainLis(benchmark::State& state) {
  const auto mats = random_matrices(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& mat : mats) benchmark::DoNotOptimize(longest_increasing_chain(mat));
}

void BM_ChainQuadratic(benchmark::State& state) {
  const auto mats = random_matrices(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& mat : mats) benchmark::DoNotOptimize(longest_increasing_chain_reference(mat));
}

}  // namespace

BENCHMARK(BM_OracleSerial)->Args({5, 3})->Args({6, 3})->Args({6, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Args({5, 3})->Args({6, 3})->Args({6, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassCounts)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChainLis)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(BM_ChainQuadratic)->Arg(8)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
