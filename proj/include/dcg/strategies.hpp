#pragma once

#include "dcg/adaptation.hpp"
#include "dcg/scenarios.hpp"
#include "dcg/topology.hpp"
#include "dcg/types.hpp"

#include <string>
#include <vector>

namespace dcg {

enum class Algorithm {
  idccg,            // incremental distributed conventional CG
  idmcg,            // incremental distributed modified CG
  ddccg,            // diffusion distributed conventional CG
  ddmcg,            // diffusion distributed modified CG
  incremental_lms,
  incremental_rls,
  diffusion_lms,
  diffusion_rls,
};

Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm a);
bool is_incremental(Algorithm a);
bool is_cg_family(Algorithm a);  // the four CG strategies (preconditionable)

struct CcgOptions {
  int inner_iterations = 5;  // J
  double lambda_f = 0.998;
  double delta = 1e-2;  // moments regularization R(0) = delta I
};

struct McgOptions {
  double lambda_f = 0.998;
  double eta = 0.55;
  double delta = 1e-2;
  bool enforce_eta_band = true;
};

struct BaselineOptions {
  double mu = 0.005;      // LMS step size
  double lambda = 0.998;  // RLS forgetting factor
  double delta = 1e-2;    // RLS regularization P(0) = I / delta
};

// Cooperation context built once per experiment: the physical links, the
// Hamiltonian node ordering used by incremental strategies, and the combining
// weights used by diffusion strategies.
struct Network {
  NetworkTopology topology;
  std::vector<int> cycle;
  CombiningMatrix combining;
};

Network make_network(const NetworkTopology& topology, bool metropolis_count_self = true);

struct DiagnosticEvent {
  int instant = 0;
  int node = 0;
  const char* kind = "";
};

struct Diagnostics {
  AdaptDiagnostics totals;
  std::vector<DiagnosticEvent> events;  // first occurrences, capped
};

// Trajectory of one strategy on one run.  Incremental strategies fill
// `global` (the estimate after each full cycle); diffusion strategies fill
// `per_node` (all node estimates after each instant).  `mse` holds the
// network-average a-priori squared error at each instant.
struct StrategyRun {
  Algorithm algorithm{};
  std::vector<Vector> global;
  std::vector<std::vector<Vector>> per_node;
  std::vector<double> mse;
  Diagnostics diagnostics;

  bool incremental() const { return !global.empty(); }
};

StrategyRun run_idccg(const Network& net, const RunData& data, const CcgOptions& opt);
StrategyRun run_idmcg(const Network& net, const RunData& data, const McgOptions& opt);
StrategyRun run_ddccg(const Network& net, const RunData& data, const CcgOptions& opt);
StrategyRun run_ddmcg(const Network& net, const RunData& data, const McgOptions& opt);
StrategyRun run_baseline(Algorithm a, const Network& net, const RunData& data,
                         const BaselineOptions& opt);

// Dispatch on `a` with whichever option block applies.
StrategyRun run_strategy(Algorithm a, const Network& net, const RunData& data,
                         const CcgOptions& ccg, const McgOptions& mcg,
                         const BaselineOptions& baseline);

}  // namespace dcg
