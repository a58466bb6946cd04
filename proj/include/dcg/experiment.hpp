#pragma once

#include "dcg/config.hpp"
#include "dcg/metrics.hpp"
#include "dcg/scenarios.hpp"
#include "dcg/strategies.hpp"
#include "dcg/topology.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dcg {

// Raised when a strategy produces a non-finite trajectory value; the message
// names the algorithm, run, and instant.
class TrajectoryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AlgorithmResult {
  Algorithm algorithm{};
  std::string tag;                      // file tag, e.g. "idmcg" or "idmcg-dct"
  LearningCurve msd;                    // Monte Carlo average
  LearningCurve mse;
  std::vector<Vector> final_estimates;  // per run, node-averaged, original domain
  Vector mean_final_estimate;
  AdaptDiagnostics diagnostics;         // totals across all runs
};

struct ExperimentResult {
  ExperimentConfig config;
  NetworkTopology topology;
  std::vector<AlgorithmResult> algorithms;

  // Spectrum extras (empty for the parameter scenario).
  RealVector grid;
  RealMatrix spectrum_basis;
  RealVector true_psd;
  std::vector<int> active_set;
};

// Runs the full Monte Carlo experiment described by cfg.  Runs execute on a
// small thread pool (cfg.threads, 0 = hardware concurrency) and are reduced
// in run-index order, so results do not depend on scheduling.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Writes curve_<tag>.csv per algorithm, metadata.json, and (for spectrum
// experiments) psd_<tag>.csv into cfg.output_dir.
void write_outputs(const ExperimentResult& res);

// Serialized experiment record (configuration, seeds, topology edges,
// diagnostics, code version); the same string written to metadata.json.
std::string metadata_json(const ExperimentResult& res);

}  // namespace dcg
