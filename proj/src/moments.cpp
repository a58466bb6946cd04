#include "dcg/moments.hpp"

#include <stdexcept>

namespace dcg {

namespace {

void check_forgetting(double lambda_f) {
  if (!(lambda_f > 0.0) || lambda_f > 1.0)
    throw std::invalid_argument("forgetting factor must satisfy 0 < lambda_f <= 1");
}

}  // namespace

Matrix hermitian_part(const Matrix& A) { return 0.5 * (A + A.adjoint()); }

NodeMoments::NodeMoments(int dim, double delta, double lf) {
  if (dim <= 0) throw std::invalid_argument("NodeMoments: dim must be positive");
  if (!(delta > 0.0)) throw std::invalid_argument("NodeMoments: delta must be positive");
  check_forgetting(lf);
  R = delta * Matrix::Identity(dim, dim);
  b = Vector::Zero(dim);
  lambda_f = lf;
}

void NodeMoments::ingest(const Eigen::Ref<const Vector>& x, Complex d) {
  if (x.size() != dim()) throw std::invalid_argument("NodeMoments::ingest: size mismatch");
  R = (lambda_f * R + x * x.adjoint()).eval();
  R = hermitian_part(R);
  b = lambda_f * b + std::conj(d) * x;
}

void NodeMoments::ingest_block(const std::shared_ptr<const Matrix>& U,
                               const Eigen::Ref<const Vector>& d) {
  if (!U) throw std::invalid_argument("NodeMoments::ingest_block: null block");
  if (U->rows() != dim() || U->cols() != d.size())
    throw std::invalid_argument("NodeMoments::ingest_block: size mismatch");
  if (U != cached_block_) {
    cached_gram_ = hermitian_part((*U) * U->adjoint());
    cached_block_ = U;
  }
  R = lambda_f * R + cached_gram_;
  b = lambda_f * b + (*U) * d.conjugate();
}

Matrix update_autocorrelation(const Matrix& R_prev, const Vector& x, double lambda_f) {
  check_forgetting(lambda_f);
  if (R_prev.rows() != R_prev.cols() || R_prev.rows() != x.size())
    throw std::invalid_argument("update_autocorrelation: size mismatch");
  return hermitian_part(lambda_f * R_prev + x * x.adjoint());
}

Vector update_crosscorrelation(const Vector& b_prev, const Vector& x, Complex d,
                               double lambda_f) {
  check_forgetting(lambda_f);
  if (b_prev.size() != x.size())
    throw std::invalid_argument("update_crosscorrelation: size mismatch");
  return lambda_f * b_prev + std::conj(d) * x;
}

NodeMoments update_block_moments(const NodeMoments& m, const RealMatrix& B,
                                 const RealVector& d) {
  if (B.cols() != m.dim() || B.rows() != d.size())
    throw std::invalid_argument("update_block_moments: size mismatch");
  NodeMoments out = m;
  const Matrix U = B.transpose().cast<Complex>();  // columns are regressors
  out.R = hermitian_part(m.lambda_f * m.R + U * U.adjoint());
  out.b = m.lambda_f * m.b + U * d.cast<Complex>();
  return out;
}

}  // namespace dcg
