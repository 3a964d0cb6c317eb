#pragma once

#include <complex>

#include <Eigen/Dense>

namespace ridealog {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double pi = 3.14159265358979323846;

/// Imaginary unit shorthand for stamping expressions.
inline constexpr Complex jc{0.0, 1.0};

}  // namespace ridealog
