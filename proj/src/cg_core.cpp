#include "dcg/cg_core.hpp"

#include <cmath>
#include <stdexcept>

namespace dcg {

namespace {

void check_same_size(const Vector& a, const Vector& b, const char* what) {
  if (a.size() != b.size())
    throw std::invalid_argument(std::string(what) + ": vector sizes differ");
}

}  // namespace

std::optional<Complex> cg_step_size(const Vector& g, const Vector& p, const Matrix& R) {
  check_same_size(g, p, "cg_step_size");
  if (R.rows() != R.cols() || R.rows() != g.size())
    throw std::invalid_argument("cg_step_size: matrix/vector sizes differ");
  const Complex denom = p.dot(R * p);  // p^H R p
  if (std::abs(denom) <= kEpsDiv * p.squaredNorm()) return std::nullopt;
  const Complex num = g.dot(g);  // g^H g
  return num / denom;
}

std::optional<Complex> fletcher_reeves_beta(const Vector& g_new, const Vector& g_old) {
  check_same_size(g_new, g_old, "fletcher_reeves_beta");
  const Complex denom = g_old.dot(g_old);
  if (std::abs(denom) <= kEpsDiv) return std::nullopt;
  return g_new.dot(g_new) / denom;
}

std::optional<Complex> polak_ribiere_beta(const Vector& g_new, const Vector& g_old) {
  check_same_size(g_new, g_old, "polak_ribiere_beta");
  const Complex denom = g_old.dot(g_old);
  if (std::abs(denom) <= kEpsDiv) return std::nullopt;
  return (g_new - g_old).dot(g_new) / denom;
}

Vector update_direction(const Vector& g, Complex beta, const Vector& p_old) {
  check_same_size(g, p_old, "update_direction");
  return g + beta * p_old;
}

CgSolveResult cg_solve(const Matrix& R, const Vector& b, const Vector& w0,
                       int max_iters, double tol, CgTrace* trace) {
  if (R.rows() != R.cols() || R.rows() != b.size() || b.size() != w0.size())
    throw std::invalid_argument("cg_solve: matrix/vector sizes differ");
  if (max_iters < 0) throw std::invalid_argument("cg_solve: max_iters must be >= 0");

  CgSolveResult res;
  res.w = w0;
  Vector g = b - R * w0;
  Vector p = g;
  const double target = tol * b.norm();

  // Rounding erodes the mutual orthogonality of the residuals, which delays
  // the M-step termination badly on ill-conditioned systems.  The standalone
  // solver therefore reorthogonalizes every new residual against the previous
  // ones (two Gram-Schmidt passes); the streaming adaptation kernels keep the
  // plain recursions.
  std::vector<Vector> basis;
  const auto remember = [&basis](const Vector& v) {
    const double n = v.norm();
    if (n > 0.0) basis.push_back(v / n);
  };
  remember(g);

  if (trace) {
    trace->residuals.push_back(g);
    trace->directions.push_back(p);
    trace->iterates.push_back(res.w);
  }

  double gnorm = g.norm();
  int j = 0;
  while (gnorm > target && j < max_iters) {
    const Vector Rp = R * p;
    const Complex pRp = p.dot(Rp);
    if (std::abs(pRp) <= kEpsDiv * p.squaredNorm()) break;  // degenerate direction
    const Complex alpha = g.dot(g) / pRp;
    res.w += alpha * p;
    Vector g_next = g - alpha * Rp;
    for (int pass = 0; pass < 2; ++pass)
      for (const Vector& q : basis) g_next -= q.dot(g_next) * q;
    const Complex beta = fletcher_reeves_beta(g_next, g).value_or(Complex(0.0, 0.0));
    p = g_next + beta * p;
    g = std::move(g_next);
    remember(g);
    gnorm = g.norm();
    ++j;
    if (trace) {
      trace->residuals.push_back(g);
      trace->directions.push_back(p);
      trace->iterates.push_back(res.w);
    }
  }

  res.iterations = j;
  res.residual_norm = gnorm;
  res.converged = gnorm <= target;
  return res;
}

}  // namespace dcg
