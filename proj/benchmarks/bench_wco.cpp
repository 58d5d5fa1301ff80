#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "hardygkz/mobius.hpp"

namespace {

using hardygkz::Complex;
using hardygkz::DiskFunction;

DiskFunction random_weight(std::mt19937_64& rng, int deg) {
  std::uniform_real_distribution<double> dist(-0.1, 0.1);
  DiskFunction f{{Complex(1.5)}};
  for (int k = 1; k <= deg; ++k) f.taylor.emplace_back(dist(rng), dist(rng));
  return f;
}

DiskFunction random_selfmap(std::mt19937_64& rng, int deg) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  DiskFunction f;
  double sum = 0.0;
  for (int k = 0; k <= deg; ++k) {
    f.taylor.emplace_back(dist(rng), dist(rng));
    sum += std::abs(f.taylor.back());
  }
  for (Complex& z : f.taylor) z *= 0.8 / sum;
  return f;
}

void BM_wco_matrix(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(29);
  const DiskFunction psi = random_weight(rng, d);
  const DiskFunction phi = random_selfmap(rng, d);
  const int n = 16 * (d + 1) < 1024 ? 1024 : 2048;
  for (auto _ : state) {
    auto t = hardygkz::wco_matrix(psi, phi, d, n);
    benchmark::DoNotOptimize(t.data());
  }
}

// column-by-column truncated Cauchy products; cost grows with symbol density
// (O(d^3) for dense degree-d symbols) while the grid path above stays at
// O(d n log n) no matter how dense psi and phi are
void BM_wco_matrix_naive(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(29);
  const DiskFunction psi = random_weight(rng, d);
  const DiskFunction phi = random_selfmap(rng, d);
  auto convolve = [d](const std::vector<Complex>& a, const std::vector<Complex>& b) {
    std::vector<Complex> out(static_cast<size_t>(d) + 1, Complex(0.0));
    for (size_t i = 0; i < a.size() && i <= static_cast<size_t>(d); ++i)
      for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(d); ++j)
        out[i + j] += a[i] * b[j];
    return out;
  };
  for (auto _ : state) {
    hardygkz::OperatorMatrix t(d + 1, d + 1);
    std::vector<Complex> power{Complex(1.0)};
    for (int k = 0; k <= d; ++k) {
      const std::vector<Complex> col = convolve(psi.taylor, power);
      for (int r = 0; r <= d; ++r)
        t(r, k) = r < static_cast<int>(col.size()) ? col[static_cast<size_t>(r)] : Complex(0.0);
      if (k < d) power = convolve(power, phi.taylor);
    }
    benchmark::DoNotOptimize(t.data());
  }
}

}  // namespace

BENCHMARK(BM_wco_matrix)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_wco_matrix_naive)->Arg(64)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
