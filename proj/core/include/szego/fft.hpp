#pragma once

#include <complex>
#include <vector>

namespace szego {

// In-place radix-2 decimation-in-time FFT, data.size() a power of two.
// Forward convention: X_k = sum_j x_j exp(-2*pi*i*j*k/N), no scaling.
void fft(std::vector<std::complex<double>>& data);
void ifft(std::vector<std::complex<double>>& data);  // inverse, scaled by 1/N

bool is_pow2(std::size_t n);
std::size_t next_pow2(std::size_t n);

}  // namespace szego
