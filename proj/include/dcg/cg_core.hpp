#pragma once

#include "dcg/types.hpp"

#include <optional>
#include <vector>

namespace dcg {

// Building blocks of the conjugate-gradient recursion for the normal
// equations R w = b with Hermitian positive definite R.  The step-size and
// direction-update rules return nullopt instead of dividing by a degenerate
// denominator; callers decide whether to stop or restart.

// alpha = (g^H g) / (p^H R p).  nullopt when |p^H R p| <= kEpsDiv * ||p||^2,
// i.e. when the direction carries no energy under R relative to its length.
std::optional<Complex> cg_step_size(const Vector& g, const Vector& p, const Matrix& R);

// beta = (g_new^H g_new) / (g_old^H g_old).  nullopt when the denominator is
// degenerate; the conventional restart is beta = 0 (direction reset to g).
std::optional<Complex> fletcher_reeves_beta(const Vector& g_new, const Vector& g_old);

// beta = ((g_new - g_old)^H g_new) / (g_old^H g_old); same degeneracy rule.
std::optional<Complex> polak_ribiere_beta(const Vector& g_new, const Vector& g_old);

// p = g + beta * p_old.
Vector update_direction(const Vector& g, Complex beta, const Vector& p_old);

struct CgSolveResult {
  Vector w;
  int iterations = 0;
  bool converged = false;
  double residual_norm = 0.0;
};

// Optional per-iteration history, filled when a non-null pointer is passed to
// cg_solve.  residuals[j], directions[j], and iterates[j] are g(j), p(j), and
// w(j); entry 0 holds the initial values.
struct CgTrace {
  std::vector<Vector> residuals;
  std::vector<Vector> directions;
  std::vector<Vector> iterates;
};

// Standalone solver for R w = b starting from w0.  Stops when
// ||g|| <= tol * ||b|| or after max_iters iterations, whichever comes first.
// A degenerate search direction also stops the loop; the result then carries
// converged = false and the last iterate.  Each new residual is
// reorthogonalized against the previous ones so the M-step termination
// property survives rounding even for ill-conditioned systems.
CgSolveResult cg_solve(const Matrix& R, const Vector& b, const Vector& w0,
                       int max_iters, double tol, CgTrace* trace = nullptr);

}  // namespace dcg
