#pragma once

#include <cstddef>
#include <vector>

#include "ridealog/types.hpp"

namespace ridealog::fft {

/// Forward transform uses exp(-j*2*pi*k*n/N) and no scaling; the inverse uses
/// the conjugate kernel and scales by 1/N, so inverse(forward(x)) == x.

[[nodiscard]] bool is_power_of_two(std::size_t n);

/// In-place radix-2 decimation-in-time transform; size must be a power of two.
void radix2(std::vector<Complex>& data, bool inverse);

/// Direct O(n^2) reference transform, any size; used to cross-check radix2.
[[nodiscard]] std::vector<Complex> direct(const std::vector<Complex>& data, bool inverse);

/// Dispatches to radix2 for power-of-two sizes, direct otherwise.
[[nodiscard]] std::vector<Complex> transform(std::vector<Complex> data, bool inverse);

}  // namespace ridealog::fft
