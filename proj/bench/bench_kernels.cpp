// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "circdual/dynamics.hpp"
#include "circdual/hilbert.hpp"
#include "circdual/kernels.hpp"

using namespace circdual;

namespace {

ComplexMatrix random_matrix(std::size_t n, unsigned seed = 0) {
  std::mt19937_64 rng(n * 31 + seed);
  std::normal_distribution<double> g;
  ComplexMatrix m(n);
  for (auto& v : m.data()) v = Complex(g(rng), g(rng));
  return m;
}

void BM_Matmul(benchmark::State& st) {
  const auto a = random_matrix(st.range(0)), b = random_matrix(st.range(0), 1);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::matmul(a, b));
}

void BM_MatmulSerial(benchmark::State& st) {
  const auto a = random_matrix(st.range(0)), b = random_matrix(st.range(0), 1);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::matmul(a, b));
}

void BM_Conjugate(benchmark::State& st) {
  const DualityMap map(st.range(0));
  const auto a = random_matrix(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::conjugate(map.matrix(), a));
}

void BM_ConjugateSerial(benchmark::State& st) {
  const DualityMap map(st.range(0));
  const auto a = random_matrix(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kernels::serial::conjugate(map.matrix(), a));
}

void BM_DualitySweep(benchmark::State& st) {
  const std::size_t n = st.range(0);
  const DualityMap map(n);
  std::mt19937_64 rng(3);
  const auto s = StateVector::random(Basis::Energy, n, rng);
  for (auto _ : st) benchmark::DoNotOptimize(duality_sweep(s, 2 * n, map));
}

void BM_DualitySweepSerial(benchmark::State& st) {
  const std::size_t n = st.range(0);
  const DualityMap map(n);
  std::mt19937_64 rng(3);
  const auto s = StateVector::random(Basis::Energy, n, rng);
  for (auto _ : st) benchmark::DoNotOptimize(duality_sweep_serial(s, 2 * n, map));
}

}  // namespace

BENCHMARK(BM_Matmul)->Arg(64)->Arg(256);
BENCHMARK(BM_MatmulSerial)->Arg(64)->Arg(256);
BENCHMARK(BM_Conjugate)->Arg(64)->Arg(256);
BENCHMARK(BM_ConjugateSerial)->Arg(64)->Arg(256);
BENCHMARK(BM_DualitySweep)->Arg(64)->Arg(256);
BENCHMARK(BM_DualitySweepSerial)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
