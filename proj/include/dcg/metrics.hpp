#pragma once

#include "dcg/types.hpp"

#include <string>
#include <vector>

namespace dcg {

// Squared estimation error ||w0 - w||^2 of a single estimate.
double msd(const Vector& estimate, const Vector& true_weights);

// Network average (1/N) sum_k ||w0 - w_k||^2.
double msd(const std::vector<Vector>& estimates, const Vector& true_weights);

// Instantaneous a-priori squared error |d - y|^2.
double mse(Complex d, Complex y);

// 10 log10(x); non-positive input maps to the -300 dB floor so zero-error
// instants stay finite.  Positive inputs round-trip through from_db exactly.
double to_db(double linear);
double from_db(double db);

// One metric trajectory.  `linear` holds per-instant values averaged over
// `runs` Monte Carlo runs in the linear domain; `db` is its dB image.
struct LearningCurve {
  std::string tag;
  int runs = 0;
  std::vector<double> linear;
  std::vector<double> db;

  void refresh_db();  // recompute db from linear
};

// Pointwise mean of per-run curves (linear domain), db recomputed afterwards.
LearningCurve average_runs(const std::vector<LearningCurve>& runs);

// Mean of the last `tail_fraction` of the curve (at least one instant),
// computed in the linear domain.
double steady_state_linear(const LearningCurve& curve, double tail_fraction = 0.1);
double steady_state_db(const LearningCurve& curve, double tail_fraction = 0.1);

}  // namespace dcg
