#pragma once

#include "dcg/moments.hpp"
#include "dcg/types.hpp"

#include <utility>

namespace dcg {

// Counters for the numerical guards inside the adaptation kernels.  A
// degenerate direction means |p^H R p| fell below kEpsDiv * ||p||^2 and the
// step was skipped (CCG) or the step size clamped to zero (MCG); a residual
// restart means the beta denominator was degenerate and the direction was
// reset to the current residual.
struct AdaptDiagnostics {
  long degenerate_directions = 0;
  long residual_restarts = 0;
};

// Conventional CG adaptation: J inner conjugate-gradient iterations on the
// current moments, warm-started from w_init (Fletcher-Reeves direction
// updates).  Returns the final iterate.
Vector ccg_adapt(const NodeMoments& m, const Vector& w_init, int inner_iterations,
                 AdaptDiagnostics* diag = nullptr);

// State carried across instants by the modified CG recursion.
struct McgState {
  Vector p, g;
  bool initialized = false;
};

double eta_lower_bound(double lambda_f);  // lambda_f - 0.5
double eta_upper_bound(double lambda_f);  // lambda_f

// Throws std::invalid_argument when eta falls outside
// [lambda_f - 0.5, lambda_f]; boundaries are admissible.
void validate_eta(double eta, double lambda_f);

// First-sample initialization: b(1) = conj(d) x, p(0) = g(0) = b(1).
void mcg_seed(McgState& s, const Vector& x, Complex d);
void mcg_seed_block(McgState& s, const Matrix& U, const Vector& d);

// One modified-CG step.  Preconditions: m.R has already been updated with the
// current sample and s has been seeded.  psi is the a-priori estimate (the
// predecessor's estimate under incremental cooperation, the combined estimate
// under diffusion).  Steps:
//   alpha = eta * (p^H g) / (p^H R p), clamped to 0 on a degenerate direction,
//   w     = psi + alpha p,
//   g'    = lambda_f g - alpha R p + x conj(d - psi^H x),
//   beta  = Polak-Ribiere((g', g)), 0 on a degenerate denominator,
//   p'    = g' + beta p.
// When enforce_eta_band is set, an eta outside the admissible band throws.
Vector mcg_adapt(McgState& s, const NodeMoments& m, const Vector& x, Complex d,
                 const Vector& psi, double lambda_f, double eta,
                 bool enforce_eta_band = true, AdaptDiagnostics* diag = nullptr);

// Block analogue for S regressors held as columns of U: the data term of the
// residual recursion stacks the per-column errors, U (conj(d) - U^H psi).
Vector mcg_adapt_block(McgState& s, const NodeMoments& m, const Matrix& U,
                       const Vector& d, const Vector& psi, double lambda_f,
                       double eta, bool enforce_eta_band = true,
                       AdaptDiagnostics* diag = nullptr);

// Complex LMS: w + mu x conj(d - w^H x), and the block form
// w + mu U (conj(d) - U^H w).
Vector lms_adapt(const Vector& w, const Vector& x, Complex d, double mu);
Vector lms_adapt_block(const Vector& w, const Matrix& U, const Vector& d, double mu);

// Conventional RLS on the inverse correlation matrix P:
//   k  = P x / (lambda + x^H P x),
//   w' = w + k conj(d - w^H x),
//   P' = (P - k x^H P) / lambda   (Hermitian-symmetrized).
std::pair<Matrix, Vector> rls_adapt(const Matrix& P, const Vector& w, const Vector& x,
                                    Complex d, double lambda);

struct RlsState {
  Matrix P;
  Vector w;
  RlsState() = default;
  RlsState(int dim, double delta);  // P(0) = I / delta, w(0) = 0
};

void rls_step(RlsState& s, const Vector& x, Complex d, double lambda);
// Sequential rank-1 updates over the block columns; the forgetting factor is
// applied on the first column only (one decay per instant).
void rls_step_block(RlsState& s, const Matrix& U, const Vector& d, double lambda);

}  // namespace dcg
