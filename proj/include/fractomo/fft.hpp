#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace fractomo {

bool is_pow2(std::int64_t n);
std::int64_t next_pow2(std::int64_t n);

// In-place radix-2 DFT, length a power of two.
//   forward:  X_k = sum_n x_n exp(-2 pi i k n / N)
//   inverse:  x_n = (1/N) sum_k X_k exp(+2 pi i k n / N)
void fft_pow2(std::vector<std::complex<double>>& data, bool inverse);

}  // namespace fractomo
