#include "dcg/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace dcg {

double msd(const Vector& estimate, const Vector& true_weights) {
  if (estimate.size() != true_weights.size())
    throw std::invalid_argument("msd: size mismatch");
  return (true_weights - estimate).squaredNorm();
}

double msd(const std::vector<Vector>& estimates, const Vector& true_weights) {
  if (estimates.empty()) throw std::invalid_argument("msd: no estimates");
  double acc = 0.0;
  for (const Vector& w : estimates) acc += msd(w, true_weights);
  return acc / static_cast<double>(estimates.size());
}

double mse(Complex d, Complex y) { return std::norm(d - y); }

double to_db(double linear) {
  if (!(linear > 0.0)) return -300.0;
  return 10.0 * std::log10(linear);
}

double from_db(double db) { return std::pow(10.0, db / 10.0); }

void LearningCurve::refresh_db() {
  db.resize(linear.size());
  for (size_t i = 0; i < linear.size(); ++i) db[i] = to_db(linear[i]);
}

LearningCurve average_runs(const std::vector<LearningCurve>& runs) {
  if (runs.empty()) throw std::invalid_argument("average_runs: no curves");
  LearningCurve out;
  out.tag = runs.front().tag;
  out.runs = 0;
  out.linear.assign(runs.front().linear.size(), 0.0);
  for (const LearningCurve& c : runs) {
    if (c.linear.size() != out.linear.size())
      throw std::invalid_argument("average_runs: curve lengths differ");
    const int weight = c.runs > 0 ? c.runs : 1;
    for (size_t i = 0; i < c.linear.size(); ++i)
      out.linear[i] += weight * c.linear[i];
    out.runs += weight;
  }
  for (double& v : out.linear) v /= static_cast<double>(out.runs);
  out.refresh_db();
  return out;
}

double steady_state_linear(const LearningCurve& curve, double tail_fraction) {
  if (curve.linear.empty())
    throw std::invalid_argument("steady_state: empty curve");
  if (!(tail_fraction > 0.0) || tail_fraction > 1.0)
    throw std::invalid_argument("steady_state: tail_fraction must be in (0, 1]");
  const size_t n = curve.linear.size();
  size_t tail = static_cast<size_t>(tail_fraction * static_cast<double>(n));
  if (tail < 1) tail = 1;
  double acc = 0.0;
  for (size_t i = n - tail; i < n; ++i) acc += curve.linear[i];
  return acc / static_cast<double>(tail);
}

double steady_state_db(const LearningCurve& curve, double tail_fraction) {
  return to_db(steady_state_linear(curve, tail_fraction));
}

}  // namespace dcg
