#pragma once

#include <Eigen/Dense>
#include <complex>

namespace dcg {

using Complex    = std::complex<double>;
using Vector     = Eigen::VectorXcd;
using Matrix     = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Denominators with magnitude at or below this are treated as degenerate.
inline constexpr double kEpsDiv = 1e-12;

}  // namespace dcg
