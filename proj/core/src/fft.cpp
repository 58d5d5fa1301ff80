#include "hardygkz/fft.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace hardygkz {

namespace {

// Cache entries are never evicted, so references into them stay valid.
const std::vector<Complex>& roots_for(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const std::vector<Complex>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto roots = std::make_unique<std::vector<Complex>>(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / n;
      (*roots)[static_cast<size_t>(j)] = Complex(std::cos(theta), std::sin(theta));
    }
    it = cache.emplace(n, std::move(roots)).first;
  }
  return *it->second;
}

}  // namespace

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

const std::vector<Complex>& circle_nodes(int n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("grid size must be a power of two");
  return roots_for(n);
}

void fft_inplace(std::vector<Complex>& data, int sign) {
  const int n = static_cast<int>(data.size());
  if (!is_power_of_two(n)) throw std::invalid_argument("fft length must be a power of two");
  const std::vector<Complex>& roots = roots_for(n);

  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[static_cast<size_t>(i)], data[static_cast<size_t>(j)]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    const int step = n / len;
    const int half = len / 2;
    for (int i = 0; i < n; i += len) {
      for (int k = 0; k < half; ++k) {
        Complex w = roots[static_cast<size_t>(k * step)];
        if (sign < 0) w = std::conj(w);
        const Complex u = data[static_cast<size_t>(i + k)];
        const Complex v = data[static_cast<size_t>(i + k + half)] * w;
        data[static_cast<size_t>(i + k)] = u + v;
        data[static_cast<size_t>(i + k + half)] = u - v;
      }
    }
  }
}

std::vector<Complex> synthesis(const std::vector<Complex>& coeffs, int n) {
  if (!is_power_of_two(n)) throw std::invalid_argument("grid size must be a power of two");
  if (static_cast<int>(coeffs.size()) > n)
    throw std::invalid_argument("more coefficients than grid points (aliasing)");
  std::vector<Complex> data(coeffs);
  data.resize(static_cast<size_t>(n), Complex(0.0));
  fft_inplace(data, +1);
  return data;
}

std::vector<Complex> analysis_bins(const std::vector<Complex>& data) {
  std::vector<Complex> bins(data);
  fft_inplace(bins, -1);
  const double inv = 1.0 / static_cast<double>(bins.size());
  for (Complex& b : bins) b *= inv;
  return bins;
}

}  // namespace hardygkz
