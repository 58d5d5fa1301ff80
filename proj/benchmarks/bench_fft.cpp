#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "hardygkz/fft.hpp"

namespace {

std::vector<hardygkz::Complex> random_signal(int n) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<hardygkz::Complex> v(static_cast<size_t>(n));
  for (auto& z : v) z = hardygkz::Complex(dist(rng), dist(rng));
  return v;
}

void BM_fft_forward(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto base = random_signal(n);
  // prime the twiddle cache so steady-state throughput is measured
  auto warm = base;
  hardygkz::fft_inplace(warm, -1);
  for (auto _ : state) {
    auto data = base;
    hardygkz::fft_inplace(data, -1);
    benchmark::DoNotOptimize(data.data());
  }
  state.SetComplexityN(n);
}

void BM_fft_round_trip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto base = random_signal(n);
  for (auto _ : state) {
    auto data = base;
    hardygkz::fft_inplace(data, -1);
    hardygkz::fft_inplace(data, +1);
    benchmark::DoNotOptimize(data.data());
  }
  state.SetComplexityN(n);
}

}  // namespace

BENCHMARK(BM_fft_forward)->RangeMultiplier(2)->Range(1024, 16384)->Complexity();
BENCHMARK(BM_fft_round_trip)->RangeMultiplier(2)->Range(1024, 16384)->Complexity();

BENCHMARK_MAIN();
