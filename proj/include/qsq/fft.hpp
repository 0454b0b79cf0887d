#pragma once

#include <complex>
#include <span>
#include <vector>

namespace qsq::fft {

/// In-place unnormalized DFT, X_k = sum_j x_j exp(-2 pi i jk/N).
void forward(std::span<std::complex<double>> data);

/// In-place unnormalized inverse DFT, x_j = sum_k X_k exp(2 pi i jk/N).
void inverse(std::span<std::complex<double>> data);

/// Linear convolution of two coefficient sequences, computed through a
/// zero-padded transform. Result length is a.size() + b.size() - 1.
std::vector<std::complex<double>> convolve(std::span<const std::complex<double>> a,
                                           std::span<const std::complex<double>> b);

}  // namespace qsq::fft
