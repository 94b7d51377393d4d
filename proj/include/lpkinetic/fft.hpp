#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace lpk {

// In-place complex DFTs backed by FFTW with a synchronized per-shape plan
// cache. forward = sum_x f(x) e^{-i k.x} indexing, backward is its unnormalized
// inverse; callers divide by the total size where needed.
void fft_forward(std::vector<std::complex<double>>& data, const std::vector<std::size_t>& shape);
void fft_backward(std::vector<std::complex<double>>& data, const std::vector<std::size_t>& shape);

// Rank-1 transforms along one axis of a row-major array (used for shears).
void fft_forward_axis(std::vector<std::complex<double>>& data, const std::vector<std::size_t>& shape,
                      std::size_t axis);
void fft_backward_axis(std::vector<std::complex<double>>& data, const std::vector<std::size_t>& shape,
                       std::size_t axis);

}  // namespace lpk
