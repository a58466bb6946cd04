#pragma once

#include "dcg/rng.hpp"
#include "dcg/types.hpp"

#include <cmath>

namespace dcg::test {

// Hermitian positive definite matrix with eigenvalues log-spaced over
// [1, condition] and a seeded random unitary eigenbasis.
inline Matrix random_hpd(int n, double condition, std::uint64_t seed) {
  GaussianSource src(seed);
  Matrix A(n, n);
  for (int c = 0; c < n; ++c) A.col(c) = src.circular_vector(n, 1.0);
  const Eigen::HouseholderQR<Matrix> qr(A);
  const Matrix Q = qr.householderQ() * Matrix::Identity(n, n);
  Vector evals(n);
  for (int i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    evals(i) = Complex(std::pow(condition, t), 0.0);
  }
  const Matrix R = Q * evals.asDiagonal() * Q.adjoint();
  return 0.5 * (R + R.adjoint());
}

inline Vector complex_vector(std::initializer_list<Complex> values) {
  Vector v(static_cast<int>(values.size()));
  int i = 0;
  for (const Complex& c : values) v(i++) = c;
  return v;
}

}  // namespace dcg::test
