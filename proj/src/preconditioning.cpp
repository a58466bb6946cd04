#include "dcg/preconditioning.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dcg {

namespace {

constexpr double kUnitarityTol = 1e-12;

void check_dim(int M) {
  if (M <= 0) throw std::invalid_argument("preconditioner: dimension must be positive");
}

void check_unitary(const Matrix& T) {
  if (unitarity_defect(T) > kUnitarityTol)
    throw std::logic_error("preconditioner: transform failed the unitarity check");
}

}  // namespace

TransformKind parse_transform(const std::string& name) {
  if (name == "none" || name == "identity") return TransformKind::none;
  if (name == "dft") return TransformKind::dft;
  if (name == "dct") return TransformKind::dct;
  throw std::invalid_argument("unknown preconditioner '" + name +
                              "' (expected none, dft, or dct)");
}

std::string to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::none: return "none";
    case TransformKind::dft: return "dft";
    case TransformKind::dct: return "dct";
  }
  return "none";
}

double unitarity_defect(const Matrix& T) {
  const Matrix G = T * T.adjoint() - Matrix::Identity(T.rows(), T.cols());
  return G.cwiseAbs().maxCoeff();
}

Preconditioner Preconditioner::none(int M) {
  check_dim(M);
  Preconditioner P;
  P.kind = TransformKind::none;
  P.T = Matrix::Identity(M, M);
  return P;
}

Preconditioner Preconditioner::dft(int M) {
  check_dim(M);
  Preconditioner P;
  P.kind = TransformKind::dft;
  P.T = Matrix(M, M);
  const double scale = 1.0 / std::sqrt(static_cast<double>(M));
  for (int v = 0; v < M; ++v) {
    for (int m = 0; m < M; ++m) {
      // Reduce the phase index modulo M before multiplying by 2*pi/M so the
      // angle stays small and the unitarity defect stays at rounding level.
      const long long r = (static_cast<long long>(v) * m) % M;
      const double angle = -2.0 * std::numbers::pi * static_cast<double>(r) / M;
      P.T(v, m) = scale * Complex(std::cos(angle), std::sin(angle));
    }
  }
  check_unitary(P.T);
  return P;
}

Preconditioner Preconditioner::dct(int M) {
  check_dim(M);
  // DCT-II analysis matrix A with rows indexed by v:
  //   A(v, m) = delta(v) * cos(v (2m + 1) pi / (2M)),
  //   delta(0) = 1/sqrt(M), delta(v != 0) = sqrt(2/M).
  // The applied transform is its transpose.
  Matrix A(M, M);
  for (int v = 0; v < M; ++v) {
    const double delta = (v == 0) ? 1.0 / std::sqrt(static_cast<double>(M))
                                  : std::sqrt(2.0 / M);
    for (int m = 0; m < M; ++m) {
      const long long r = (static_cast<long long>(v) * (2 * m + 1)) % (4LL * M);
      const double angle = std::numbers::pi * static_cast<double>(r) / (2.0 * M);
      A(v, m) = Complex(delta * std::cos(angle), 0.0);
    }
  }
  Preconditioner P;
  P.kind = TransformKind::dct;
  P.T = A.transpose();
  check_unitary(P.T);
  return P;
}

Preconditioner Preconditioner::make(TransformKind kind, int M) {
  switch (kind) {
    case TransformKind::none: return none(M);
    case TransformKind::dft: return dft(M);
    case TransformKind::dct: return dct(M);
  }
  return none(M);
}

Vector transform_regressor(const Preconditioner& P, const Vector& x) {
  if (x.size() != P.dim())
    throw std::invalid_argument("transform_regressor: size mismatch");
  if (P.kind == TransformKind::none) return x;
  return P.T * x;
}

Matrix transform_regressors(const Preconditioner& P, const Matrix& xs) {
  if (xs.rows() != P.dim())
    throw std::invalid_argument("transform_regressors: size mismatch");
  if (P.kind == TransformKind::none) return xs;
  return P.T * xs;
}

Vector recover_estimate(const Preconditioner& P, const Vector& w_tilde) {
  if (w_tilde.size() != P.dim())
    throw std::invalid_argument("recover_estimate: size mismatch");
  if (P.kind == TransformKind::none) return w_tilde;
  return P.T.adjoint() * w_tilde;
}

}  // namespace dcg
