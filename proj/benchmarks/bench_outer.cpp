#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "hardygkz/factorization.hpp"
#include "hardygkz/fft.hpp"

namespace {

// smooth zero-free modulus: |2 + e^{i theta}| scaled by a trig ripple
std::vector<double> ripple_modulus(int n) {
  const auto& nodes = hardygkz::circle_nodes(n);
  std::vector<double> g(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double t = std::arg(nodes[static_cast<size_t>(j)]);
    g[static_cast<size_t>(j)] =
        std::abs(hardygkz::Complex(2.0) + nodes[static_cast<size_t>(j)]) *
        (1.0 + 0.25 * std::cos(3.0 * t));
  }
  return g;
}

void BM_outer_from_modulus(benchmark::State& state) {
  const int n = 4096;
  const int d = static_cast<int>(state.range(0));
  const std::vector<double> g = ripple_modulus(n);
  for (auto _ : state) {
    auto f = hardygkz::outer_from_modulus(g, d);
    benchmark::DoNotOptimize(f.taylor.data());
  }
}

void BM_inner_outer_factorization(benchmark::State& state) {
  const int n = 4096;
  const int d = static_cast<int>(state.range(0));
  const hardygkz::DiskFunction blaschke =
      hardygkz::blaschke_taylor({{hardygkz::Complex(0.5), hardygkz::Complex(-0.3, 0.4)},
                                 hardygkz::Complex(1.0)},
                                d);
  const hardygkz::DiskFunction outer = hardygkz::outer_from_modulus(ripple_modulus(n), d);
  const hardygkz::DiskFunction f = hardygkz::multiply(blaschke, outer, d);
  for (auto _ : state) {
    auto fac = hardygkz::inner_part(f, n, d);
    benchmark::DoNotOptimize(fac.outer.taylor.data());
  }
}

}  // namespace

BENCHMARK(BM_outer_from_modulus)->Arg(128)->Arg(256);
BENCHMARK(BM_inner_outer_factorization)->Arg(128)->Arg(256);

BENCHMARK_MAIN();
