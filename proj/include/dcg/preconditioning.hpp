#pragma once

#include "dcg/types.hpp"

#include <string>

namespace dcg {

enum class TransformKind { none, dft, dct };

TransformKind parse_transform(const std::string& name);
std::string to_string(TransformKind kind);

// Unitary input transform applied to regressors at ingestion:
//   x~ = T x   (d unchanged),
// so adaptation runs on moments of x~ and the original-domain estimate is
// recovered as w = T^H w~.  kind == none keeps T = I and short-circuits the
// products.
struct Preconditioner {
  TransformKind kind = TransformKind::none;
  Matrix T;

  int dim() const { return static_cast<int>(T.rows()); }

  static Preconditioner none(int M);
  static Preconditioner dft(int M);  // [T]_vm = exp(-j 2 pi v m / M) / sqrt(M)
  static Preconditioner dct(int M);  // transpose of the DCT-II analysis matrix
  static Preconditioner make(TransformKind kind, int M);
};

Vector transform_regressor(const Preconditioner& P, const Vector& x);
Matrix transform_regressors(const Preconditioner& P, const Matrix& xs);  // columnwise
Vector recover_estimate(const Preconditioner& P, const Vector& w_tilde);

// max-norm of T T^H - I; the factories reject transforms that are not unitary
// to 1e-12.
double unitarity_defect(const Matrix& T);

}  // namespace dcg
