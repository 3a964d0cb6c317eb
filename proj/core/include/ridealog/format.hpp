#pragma once

#include <string>

#include "ridealog/types.hpp"

namespace ridealog {

/// Six significant digits; scientific notation when |x| < 1e-3 or >= 1e6.
[[nodiscard]] std::string format_sig(double x);

/// "re,im" pair in format_sig notation (display form, not round-trip form).
[[nodiscard]] std::string format_sig(Complex z);

/// Round-trip form: 17 significant digits, shortest `%.17g` rendering.
[[nodiscard]] std::string format_full(double x);

}  // namespace ridealog
