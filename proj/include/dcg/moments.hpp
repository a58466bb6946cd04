#pragma once

#include "dcg/types.hpp"

#include <memory>

namespace dcg {

// Returns the Hermitian part (A + A^H) / 2.
Matrix hermitian_part(const Matrix& A);

// Exponentially weighted sample moments of one node:
//   R(i) = lambda_f * R(i-1) + x(i) x(i)^H        (kept Hermitian)
//   b(i) = lambda_f * b(i-1) + conj(d(i)) * x(i)
// Regularized start R(0) = delta * I, b(0) = 0.
struct NodeMoments {
  Matrix R;
  Vector b;
  double lambda_f = 1.0;

  NodeMoments() = default;
  NodeMoments(int dim, double delta, double lambda_f);

  int dim() const { return static_cast<int>(R.rows()); }

  // Rank-1 update with a single regressor/desired pair.
  void ingest(const Eigen::Ref<const Vector>& x, Complex d);

  // Block update with S regressors held as columns of *U and an S-vector of
  // desired samples: R += U U^H, b += U conj(d) (after decay).  The Gram
  // matrix U U^H is cached per distinct block so that a block reused across
  // instants (a constant measurement matrix) costs O(dim^2) per update.
  void ingest_block(const std::shared_ptr<const Matrix>& U,
                    const Eigen::Ref<const Vector>& d);

 private:
  std::shared_ptr<const Matrix> cached_block_;
  Matrix cached_gram_;
};

// Pure single-sample forms of the two recursions.
Matrix update_autocorrelation(const Matrix& R_prev, const Vector& x, double lambda_f);
Vector update_crosscorrelation(const Vector& b_prev, const Vector& x, Complex d,
                               double lambda_f);

// Block form for a real measurement matrix B (rows are regressors) and a real
// observation vector d:  R <- lambda_f R + B^T B,  b <- lambda_f b + B^T d.
NodeMoments update_block_moments(const NodeMoments& m, const RealMatrix& B,
                                 const RealVector& d);

}  // namespace dcg
