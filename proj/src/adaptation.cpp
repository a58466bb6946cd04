#include "dcg/adaptation.hpp"

#include "dcg/cg_core.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dcg {

namespace {

void bump(long AdaptDiagnostics::*field, AdaptDiagnostics* diag) {
  if (diag) ++(diag->*field);
}

}  // namespace

Vector ccg_adapt(const NodeMoments& m, const Vector& w_init, int inner_iterations,
                 AdaptDiagnostics* diag) {
  if (w_init.size() != m.dim())
    throw std::invalid_argument("ccg_adapt: estimate size differs from moments");
  if (inner_iterations < 1)
    throw std::invalid_argument("ccg_adapt: inner_iterations must be >= 1");

  Vector w = w_init;
  Vector g = m.b - m.R * w;
  Vector p = g;
  Vector Rp(m.dim());
  double gg = g.squaredNorm();
  for (int j = 0; j < inner_iterations; ++j) {
    Rp.noalias() = m.R * p;
    const Complex pRp = p.dot(Rp);
    if (std::abs(pRp) <= kEpsDiv * p.squaredNorm()) {
      bump(&AdaptDiagnostics::degenerate_directions, diag);
      break;
    }
    const Complex alpha = gg / pRp;
    w += alpha * p;
    g -= alpha * Rp;
    const double gg_next = g.squaredNorm();
    const Complex beta = gg_next / gg;  // Fletcher-Reeves
    p = g + beta * p;
    gg = gg_next;
  }
  return w;
}

double eta_lower_bound(double lambda_f) { return lambda_f - 0.5; }
double eta_upper_bound(double lambda_f) { return lambda_f; }

void validate_eta(double eta, double lambda_f) {
  if (eta < eta_lower_bound(lambda_f) || eta > eta_upper_bound(lambda_f)) {
    std::ostringstream msg;
    msg << "eta = " << eta << " outside the admissible band ["
        << eta_lower_bound(lambda_f) << ", " << eta_upper_bound(lambda_f)
        << "] given by lambda_f - 0.5 <= eta <= lambda_f (lambda_f = " << lambda_f
        << ")";
    throw std::invalid_argument(msg.str());
  }
}

void mcg_seed(McgState& s, const Vector& x, Complex d) {
  s.g = std::conj(d) * x;  // b(1)
  s.p = s.g;
  s.initialized = true;
}

void mcg_seed_block(McgState& s, const Matrix& U, const Vector& d) {
  if (U.cols() != d.size()) throw std::invalid_argument("mcg_seed_block: size mismatch");
  s.g = U * d.conjugate();
  s.p = s.g;
  s.initialized = true;
}

namespace {

// Common body of the single-sample and block MCG steps; `data_term` is
// x conj(d - psi^H x) or U conj(d - U^H psi).
Vector mcg_step(McgState& s, const NodeMoments& m, const Vector& data_term,
                const Vector& psi, double lambda_f, double eta,
                bool enforce_eta_band, AdaptDiagnostics* diag) {
  if (!s.initialized) throw std::logic_error("mcg_adapt: state not seeded");
  if (psi.size() != m.dim() || s.p.size() != m.dim())
    throw std::invalid_argument("mcg_adapt: size mismatch");
  if (enforce_eta_band) validate_eta(eta, lambda_f);

  const Vector Rp = m.R * s.p;
  const Complex pRp = s.p.dot(Rp);
  Complex alpha(0.0, 0.0);
  if (std::abs(pRp) <= kEpsDiv * s.p.squaredNorm()) {
    bump(&AdaptDiagnostics::degenerate_directions, diag);
  } else {
    alpha = eta * s.p.dot(s.g) / pRp;
  }
  Vector w = psi + alpha * s.p;
  Vector g_next = lambda_f * s.g - alpha * Rp + data_term;
  const auto beta = polak_ribiere_beta(g_next, s.g);
  if (!beta) bump(&AdaptDiagnostics::residual_restarts, diag);
  s.p = g_next + beta.value_or(Complex(0.0, 0.0)) * s.p;
  s.g = std::move(g_next);
  return w;
}

}  // namespace

Vector mcg_adapt(McgState& s, const NodeMoments& m, const Vector& x, Complex d,
                 const Vector& psi, double lambda_f, double eta,
                 bool enforce_eta_band, AdaptDiagnostics* diag) {
  if (x.size() != m.dim()) throw std::invalid_argument("mcg_adapt: size mismatch");
  const Complex err = d - psi.dot(x);  // a-priori error d - psi^H x
  const Vector data_term = std::conj(err) * x;
  return mcg_step(s, m, data_term, psi, lambda_f, eta, enforce_eta_band, diag);
}

Vector mcg_adapt_block(McgState& s, const NodeMoments& m, const Matrix& U,
                       const Vector& d, const Vector& psi, double lambda_f,
                       double eta, bool enforce_eta_band, AdaptDiagnostics* diag) {
  if (U.rows() != m.dim() || U.cols() != d.size())
    throw std::invalid_argument("mcg_adapt_block: size mismatch");
  // conj(d_c - psi^H u_c) stacked over columns is conj(d) - U^H psi
  const Vector conj_err = d.conjugate() - U.adjoint() * psi;
  const Vector data_term = U * conj_err;
  return mcg_step(s, m, data_term, psi, lambda_f, eta, enforce_eta_band, diag);
}

Vector lms_adapt(const Vector& w, const Vector& x, Complex d, double mu) {
  if (w.size() != x.size()) throw std::invalid_argument("lms_adapt: size mismatch");
  const Complex err = d - w.dot(x);
  return w + mu * std::conj(err) * x;
}

Vector lms_adapt_block(const Vector& w, const Matrix& U, const Vector& d, double mu) {
  if (U.rows() != w.size() || U.cols() != d.size())
    throw std::invalid_argument("lms_adapt_block: size mismatch");
  const Vector conj_err = d.conjugate() - U.adjoint() * w;
  return w + mu * U * conj_err;
}

RlsState::RlsState(int dim, double delta) {
  if (dim <= 0) throw std::invalid_argument("RlsState: dim must be positive");
  if (!(delta > 0.0)) throw std::invalid_argument("RlsState: delta must be positive");
  P = Matrix::Identity(dim, dim) / delta;
  w = Vector::Zero(dim);
}

void rls_step(RlsState& s, const Vector& x, Complex d, double lambda) {
  if (x.size() != s.w.size()) throw std::invalid_argument("rls_step: size mismatch");
  if (!(lambda > 0.0) || lambda > 1.0)
    throw std::invalid_argument("rls_step: lambda must satisfy 0 < lambda <= 1");
  const Complex err = d - s.w.dot(x);
  const Vector Px = s.P * x;
  const double denom = lambda + std::real(x.dot(Px));
  const Vector k = Px / denom;
  s.w += std::conj(err) * k;
  s.P = (s.P - k * Px.adjoint()) / lambda;
  s.P = hermitian_part(s.P);
}

void rls_step_block(RlsState& s, const Matrix& U, const Vector& d, double lambda) {
  if (U.rows() != s.w.size() || U.cols() != d.size())
    throw std::invalid_argument("rls_step_block: size mismatch");
  for (int c = 0; c < U.cols(); ++c)
    rls_step(s, U.col(c), d(c), c == 0 ? lambda : 1.0);
}

std::pair<Matrix, Vector> rls_adapt(const Matrix& P, const Vector& w, const Vector& x,
                                    Complex d, double lambda) {
  RlsState s;
  s.P = P;
  s.w = w;
  rls_step(s, x, d, lambda);
  return {std::move(s.P), std::move(s.w)};
}

}  // namespace dcg
