#include "ridealog/fft.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace ridealog::fft {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void radix2(std::vector<Complex>& data, bool inverse) {
  const std::size_t n = data.size();
  if (!is_power_of_two(n))
    throw std::invalid_argument("radix-2 transform requires a power-of-two size");
  if (n == 1) return;

  // Bit-reversal permutation.
  for (std::size_t i = 1, rev = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; rev & bit; bit >>= 1) rev ^= bit;
    rev ^= bit;
    if (i < rev) std::swap(data[i], data[rev]);
  }

  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double theta = sign * 2.0 * pi / static_cast<double>(len);
    const Complex w_len(std::cos(theta), std::sin(theta));
    for (std::size_t start = 0; start < n; start += len) {
      Complex w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex even = data[start + k];
        const Complex odd = data[start + k + len / 2] * w;
        data[start + k] = even + odd;
        data[start + k + len / 2] = even - odd;
        w *= w_len;
      }
    }
  }

  if (inverse)
    for (Complex& x : data) x /= static_cast<double>(n);
}

std::vector<Complex> direct(const std::vector<Complex>& data, bool inverse) {
  const std::size_t n = data.size();
  std::vector<Complex> out(n, Complex(0, 0));
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const double theta = sign * 2.0 * pi * static_cast<double>(k * i) / static_cast<double>(n);
      out[k] += data[i] * Complex(std::cos(theta), std::sin(theta));
    }
    if (inverse) out[k] /= static_cast<double>(n);
  }
  return out;
}

std::vector<Complex> transform(std::vector<Complex> data, bool inverse) {
  if (is_power_of_two(data.size())) {
    radix2(data, inverse);
    return data;
  }
  return direct(data, inverse);
}

}  // namespace ridealog::fft
