#pragma once

#include "dcg/preconditioning.hpp"
#include "dcg/types.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace dcg {

// System-identification setup: every node observes d_k(i) = w0^H x_k(i) + n_k(i)
// with i.i.d. circular complex Gaussian regressors and noise.  w0 is drawn
// once per run and normalized to unit norm.
struct ParameterScenario {
  int nodes = 20;
  int taps = 10;
  int instants = 1000;
  double input_variance = 1.0;
  double noise_variance = 0.001;
};

// Basis-expansion spectrum setup: the power spectral density over [f_min,
// f_max) is expanded in basis_count non-overlapping unit rectangles, of which
// active_count carry unit power.  Every node observes the constant
// measurement matrix B (freq_samples rows, one per grid frequency) through
// d_k(i) = B w0 + n_k(i).
struct SpectrumScenario {
  int nodes = 20;
  int basis_count = 50;    // number of rectangles
  int freq_samples = 100;  // grid size, must exceed basis_count
  int instants = 1000;
  int active_count = 8;
  double f_min = 0.0;
  double f_max = 1.0;
  double noise_variance = 1e-3;
};

// Frequency grid, measurement matrix, and true coefficients shared by all
// Monte Carlo runs of a spectrum experiment.  The active set comes from a
// dedicated seed stream so it is fixed across runs.
struct SpectrumModel {
  RealVector grid;        // freq_samples left-edge frequencies
  RealMatrix basis;       // freq_samples x basis_count indicator rows
  std::vector<int> active;
  Vector true_weights;    // basis_count, 1 on the active set
  std::shared_ptr<const Matrix> block;  // basis^T as complex columns (regressors)
};

// Per-node observations for one run.  Parameter runs store one regressor per
// instant (column i of xs); spectrum runs store the shared regressor block
// plus one observation vector per instant (column i of block_ds).
struct NodeStream {
  Matrix xs;   // taps x instants
  Vector ds;   // instants
  std::shared_ptr<const Matrix> block;  // dim x samples
  Matrix block_ds;                      // samples x instants
};

struct RunData {
  int nodes = 0;
  int instants = 0;
  int dim = 0;        // estimate length (taps or basis_count)
  bool blockwise = false;
  Vector true_weights;
  std::vector<NodeStream> streams;
};

RunData gen_parameter_data(const ParameterScenario& sc, std::uint64_t run_seed);

SpectrumModel build_spectrum_model(const SpectrumScenario& sc, std::uint64_t scenario_seed);
RunData gen_spectrum_data(const SpectrumScenario& sc, const SpectrumModel& model,
                          std::uint64_t run_seed);

// PSD values on the grid implied by coefficient vector w (real part).
RealVector psd_from_weights(const RealMatrix& basis, const Vector& w);

// Regressors mapped through the preconditioner (x~ = T x columnwise; desired
// samples and true weights unchanged).  A no-op for TransformKind::none.
RunData transform_run_data(const RunData& data, const Preconditioner& P);

}  // namespace dcg
