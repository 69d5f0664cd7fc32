#pragma once

#include <complex>
#include <vector>

namespace orlicz_wiener::detail {

enum class FftDirection { Forward, Backward };

/// Unnormalized in-place DFT of length data.size():
/// Forward  X_k = sum_j x_j e^{-2 pi i jk/N}
/// Backward X_k = sum_j x_j e^{+2 pi i jk/N}
void fft(std::vector<std::complex<double>>& data, FftDirection dir);

}  // namespace orlicz_wiener::detail
