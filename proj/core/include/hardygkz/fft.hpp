#pragma once

#include <complex>
#include <vector>

namespace hardygkz {

using Complex = std::complex<double>;

bool is_power_of_two(int n);

// In-place radix-2 transform, power-of-two lengths only, fixed butterfly
// order so results are bitwise reproducible. sign = +1 uses the kernel
// e^{+2*pi*i*jk/N} (synthesis at roots of unity), sign = -1 the conjugate
// kernel (analysis). Neither direction normalizes.
void fft_inplace(std::vector<Complex>& data, int sign);

// Grid nodes e^{2 pi i j/n}. These are the same objects the transforms use
// as twiddles, so grid arithmetic and FFT output agree bitwise.
const std::vector<Complex>& circle_nodes(int n);

// data_j = sum_k coeffs_k e^{2 pi i jk/N}; coeffs is zero-padded to n.
std::vector<Complex> synthesis(const std::vector<Complex>& coeffs, int n);

// Inverse of synthesis: bin_k = (1/N) sum_j data_j e^{-2 pi i jk/N}.
std::vector<Complex> analysis_bins(const std::vector<Complex>& data);

}  // namespace hardygkz
