#pragma once

#include <span>

#include "holo/field.hpp"

namespace holo::fft {

// Row-major 2D DFT in place. Forward uses the negative exponent and is unnormalized;
// inverse carries the 1/(width*height) factor.
void forward(std::span<complex> data, int width, int height);
void inverse(std::span<complex> data, int width, int height);

/// Signed frequency index of DFT bin k on an axis of length n: k for k < n/2, k - n otherwise.
inline int signed_index(int k, int n) { return k < n / 2 ? k : k - n; }

} // namespace holo::fft
