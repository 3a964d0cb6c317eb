#include "ridealog/format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace ridealog {

std::string format_sig(double x) {
  if (x == 0.0) return "0";  // normalizes -0 as well
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[48];
  const double mag = std::abs(x);
  if (mag < 1e-3 || mag >= 1e6) {
    std::snprintf(buf, sizeof(buf), "%.5e", x);
    return buf;
  }
  const int integer_digits = static_cast<int>(std::floor(std::log10(mag))) + 1;
  const int decimals = std::max(0, 6 - integer_digits);
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, x);
  return buf;
}

std::string format_sig(Complex z) { return format_sig(z.real()) + "," + format_sig(z.imag()); }

std::string format_full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace ridealog
