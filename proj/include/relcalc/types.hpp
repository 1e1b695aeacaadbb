#pragma once

#include <Eigen/Dense>
#include <complex>

namespace relcalc {

using Complex = std::complex<double>;
using Vector  = Eigen::VectorXcd;
using Matrix  = Eigen::MatrixXcd;
using Index   = Eigen::Index;

/// Relative singular-value threshold used for every numerical rank decision.
inline constexpr double kDefaultTol = 1e-10;

/// Absolute floor under which a singular value is treated as zero regardless
/// of the relative threshold.
inline constexpr double kAbsFloor = 1e-13;

}  // namespace relcalc
