#include "dcg/strategies.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dcg {

namespace {

constexpr size_t kMaxDiagnosticEvents = 256;

// Appends capped per-node/per-instant events whenever the kernel counters
// advanced during the last adapt call.
class DiagRecorder {
 public:
  explicit DiagRecorder(Diagnostics& d) : d_(d) {}

  AdaptDiagnostics* slot() { return &d_.totals; }

  void note(int instant, int node) {
    if (d_.totals.degenerate_directions > last_.degenerate_directions)
      push(instant, node, "degenerate_direction");
    if (d_.totals.residual_restarts > last_.residual_restarts)
      push(instant, node, "residual_restart");
    last_ = d_.totals;
  }

 private:
  void push(int instant, int node, const char* kind) {
    if (d_.events.size() < kMaxDiagnosticEvents)
      d_.events.push_back({instant, node, kind});
  }

  Diagnostics& d_;
  AdaptDiagnostics last_;
};

void ingest_sample(NodeMoments& m, const NodeStream& s, int i, bool blockwise) {
  if (blockwise)
    m.ingest_block(s.block, s.block_ds.col(i));
  else
    m.ingest(s.xs.col(i), s.ds(i));
}

// A-priori squared error of estimate w on node sample i (block samples are
// averaged over their rows so scales stay comparable).
double apriori_error(const NodeStream& s, int i, bool blockwise, const Vector& w) {
  if (blockwise) {
    const Vector err = s.block_ds.col(i) - s.block->adjoint() * w;
    return err.squaredNorm() / static_cast<double>(err.size());
  }
  return std::norm(s.ds(i) - w.dot(s.xs.col(i)));
}

void check_run_inputs(const Network& net, const RunData& data) {
  if (net.topology.nodes != data.nodes)
    throw std::invalid_argument("strategy: topology and data node counts differ");
  if (data.streams.size() != static_cast<size_t>(data.nodes))
    throw std::invalid_argument("strategy: malformed run data");
  if (data.instants < 1 || data.dim < 1)
    throw std::invalid_argument("strategy: malformed run data");
}

void check_cycle(const Network& net) {
  const auto missing = validate_cycle(net.topology, net.cycle);
  if (!missing.empty()) {
    std::ostringstream msg;
    msg << "strategy: incremental cycle is not closed over the topology; missing links:";
    for (const auto& [k, l] : missing) msg << " (" << k + 1 << "," << l + 1 << ")";
    throw std::invalid_argument(msg.str());
  }
}

void check_combining(const Network& net) {
  const auto& C = net.combining.C;
  if (C.rows() != net.topology.nodes || C.cols() != net.topology.nodes)
    throw std::invalid_argument("strategy: combining matrix size differs from topology");
  for (int k = 0; k < C.rows(); ++k) {
    if (std::abs(C.row(k).sum() - 1.0) > 1e-12)
      throw std::invalid_argument("strategy: combining matrix rows must sum to 1");
  }
}

// Shared shell of the two incremental strategies: per instant, walk the cycle
// passing the running estimate psi through `visit(k, i, psi)` at every node,
// then store the cycle-end estimate as omega(i).
template <typename Visit>
StrategyRun incremental_shell(Algorithm a, const Network& net, const RunData& data,
                              Visit visit) {
  check_run_inputs(net, data);
  check_cycle(net);
  StrategyRun out;
  out.algorithm = a;
  out.global.reserve(data.instants);
  out.mse.reserve(data.instants);
  Vector omega = Vector::Zero(data.dim);
  for (int i = 0; i < data.instants; ++i) {
    Vector psi = omega;
    double acc = 0.0;
    for (int k : net.cycle) {
      acc += apriori_error(data.streams[k], i, data.blockwise, psi);
      psi = visit(k, i, psi);
    }
    omega = std::move(psi);
    out.global.push_back(omega);
    out.mse.push_back(acc / data.nodes);
  }
  return out;
}

// Shared shell of the diffusion strategies (combine-then-adapt): per instant,
// every node first combines the previous-instant estimates of its neighbors,
// then adapts from the combined estimate via `adapt(k, i, psi_k)`.
template <typename Adapt>
StrategyRun diffusion_shell(Algorithm a, const Network& net, const RunData& data,
                            Adapt adapt) {
  check_run_inputs(net, data);
  check_combining(net);
  StrategyRun out;
  out.algorithm = a;
  out.per_node.reserve(data.instants);
  out.mse.reserve(data.instants);
  std::vector<Vector> estimates(data.nodes, Vector::Zero(data.dim));
  std::vector<Vector> psis(data.nodes);
  for (int i = 0; i < data.instants; ++i) {
    for (int k = 0; k < data.nodes; ++k)
      psis[k] = combine_estimates(net.combining.C.row(k), estimates);
    double acc = 0.0;
    for (int k = 0; k < data.nodes; ++k) {
      acc += apriori_error(data.streams[k], i, data.blockwise, psis[k]);
      estimates[k] = adapt(k, i, psis[k]);
    }
    out.per_node.push_back(estimates);
    out.mse.push_back(acc / data.nodes);
  }
  return out;
}

}  // namespace

Algorithm parse_algorithm(const std::string& name) {
  if (name == "idccg") return Algorithm::idccg;
  if (name == "idmcg") return Algorithm::idmcg;
  if (name == "ddccg") return Algorithm::ddccg;
  if (name == "ddmcg") return Algorithm::ddmcg;
  if (name == "incremental-lms") return Algorithm::incremental_lms;
  if (name == "incremental-rls") return Algorithm::incremental_rls;
  if (name == "diffusion-lms") return Algorithm::diffusion_lms;
  if (name == "diffusion-rls") return Algorithm::diffusion_rls;
  throw std::invalid_argument(
      "unknown algorithm '" + name +
      "' (expected idccg, idmcg, ddccg, ddmcg, incremental-lms, incremental-rls, "
      "diffusion-lms, or diffusion-rls)");
}

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::idccg: return "idccg";
    case Algorithm::idmcg: return "idmcg";
    case Algorithm::ddccg: return "ddccg";
    case Algorithm::ddmcg: return "ddmcg";
    case Algorithm::incremental_lms: return "incremental-lms";
    case Algorithm::incremental_rls: return "incremental-rls";
    case Algorithm::diffusion_lms: return "diffusion-lms";
    case Algorithm::diffusion_rls: return "diffusion-rls";
  }
  return "unknown";
}

bool is_incremental(Algorithm a) {
  return a == Algorithm::idccg || a == Algorithm::idmcg ||
         a == Algorithm::incremental_lms || a == Algorithm::incremental_rls;
}

bool is_cg_family(Algorithm a) {
  return a == Algorithm::idccg || a == Algorithm::idmcg || a == Algorithm::ddccg ||
         a == Algorithm::ddmcg;
}

Network make_network(const NetworkTopology& topology, bool metropolis_count_self) {
  Network net;
  net.topology = topology;
  net.cycle = natural_cycle(topology.nodes);
  net.combining = metropolis_weights(topology, metropolis_count_self);
  return net;
}

StrategyRun run_idccg(const Network& net, const RunData& data, const CcgOptions& opt) {
  std::vector<NodeMoments> moments(data.nodes,
                                   NodeMoments(data.dim, opt.delta, opt.lambda_f));
  Diagnostics diag;
  DiagRecorder rec(diag);
  StrategyRun out = incremental_shell(
      Algorithm::idccg, net, data, [&](int k, int i, Vector& psi) {
        ingest_sample(moments[k], data.streams[k], i, data.blockwise);
        Vector next = ccg_adapt(moments[k], psi, opt.inner_iterations, rec.slot());
        rec.note(i, k);
        return next;
      });
  out.diagnostics = std::move(diag);
  return out;
}

StrategyRun run_idmcg(const Network& net, const RunData& data, const McgOptions& opt) {
  std::vector<NodeMoments> moments(data.nodes,
                                   NodeMoments(data.dim, opt.delta, opt.lambda_f));
  std::vector<McgState> states(data.nodes);
  Diagnostics diag;
  DiagRecorder rec(diag);
  StrategyRun out = incremental_shell(
      Algorithm::idmcg, net, data, [&](int k, int i, Vector& psi) {
        const NodeStream& s = data.streams[k];
        ingest_sample(moments[k], s, i, data.blockwise);
        Vector next;
        if (data.blockwise) {
          if (!states[k].initialized)
            mcg_seed_block(states[k], *s.block, s.block_ds.col(0));
          next = mcg_adapt_block(states[k], moments[k], *s.block, s.block_ds.col(i),
                                 psi, opt.lambda_f, opt.eta, opt.enforce_eta_band,
                                 rec.slot());
        } else {
          if (!states[k].initialized) mcg_seed(states[k], s.xs.col(0), s.ds(0));
          next = mcg_adapt(states[k], moments[k], s.xs.col(i), s.ds(i), psi,
                           opt.lambda_f, opt.eta, opt.enforce_eta_band, rec.slot());
        }
        rec.note(i, k);
        return next;
      });
  out.diagnostics = std::move(diag);
  return out;
}

StrategyRun run_ddccg(const Network& net, const RunData& data, const CcgOptions& opt) {
  std::vector<NodeMoments> moments(data.nodes,
                                   NodeMoments(data.dim, opt.delta, opt.lambda_f));
  Diagnostics diag;
  DiagRecorder rec(diag);
  StrategyRun out = diffusion_shell(
      Algorithm::ddccg, net, data, [&](int k, int i, const Vector& psi) {
        ingest_sample(moments[k], data.streams[k], i, data.blockwise);
        Vector next = ccg_adapt(moments[k], psi, opt.inner_iterations, rec.slot());
        rec.note(i, k);
        return next;
      });
  out.diagnostics = std::move(diag);
  return out;
}

StrategyRun run_ddmcg(const Network& net, const RunData& data, const McgOptions& opt) {
  std::vector<NodeMoments> moments(data.nodes,
                                   NodeMoments(data.dim, opt.delta, opt.lambda_f));
  std::vector<McgState> states(data.nodes);
  Diagnostics diag;
  DiagRecorder rec(diag);
  StrategyRun out = diffusion_shell(
      Algorithm::ddmcg, net, data, [&](int k, int i, const Vector& psi) {
        const NodeStream& s = data.streams[k];
        ingest_sample(moments[k], s, i, data.blockwise);
        Vector next;
        if (data.blockwise) {
          if (!states[k].initialized)
            mcg_seed_block(states[k], *s.block, s.block_ds.col(0));
          next = mcg_adapt_block(states[k], moments[k], *s.block, s.block_ds.col(i),
                                 psi, opt.lambda_f, opt.eta, opt.enforce_eta_band,
                                 rec.slot());
        } else {
          if (!states[k].initialized) mcg_seed(states[k], s.xs.col(0), s.ds(0));
          next = mcg_adapt(states[k], moments[k], s.xs.col(i), s.ds(i), psi,
                           opt.lambda_f, opt.eta, opt.enforce_eta_band, rec.slot());
        }
        rec.note(i, k);
        return next;
      });
  out.diagnostics = std::move(diag);
  return out;
}

StrategyRun run_baseline(Algorithm a, const Network& net, const RunData& data,
                         const BaselineOptions& opt) {
  switch (a) {
    case Algorithm::incremental_lms:
      return incremental_shell(a, net, data, [&](int k, int i, Vector& psi) {
        const NodeStream& s = data.streams[k];
        if (data.blockwise)
          return lms_adapt_block(psi, *s.block, s.block_ds.col(i), opt.mu);
        return lms_adapt(psi, s.xs.col(i), s.ds(i), opt.mu);
      });
    case Algorithm::incremental_rls: {
      // Per-node inverse-correlation state; the running estimate is handed
      // along the cycle like the other incremental strategies.
      std::vector<RlsState> states(data.nodes, RlsState(data.dim, opt.delta));
      return incremental_shell(a, net, data, [&](int k, int i, Vector& psi) {
        const NodeStream& s = data.streams[k];
        states[k].w = std::move(psi);
        if (data.blockwise)
          rls_step_block(states[k], *s.block, s.block_ds.col(i), opt.lambda);
        else
          rls_step(states[k], s.xs.col(i), s.ds(i), opt.lambda);
        return states[k].w;
      });
    }
    case Algorithm::diffusion_lms:
      return diffusion_shell(a, net, data, [&](int k, int i, const Vector& psi) {
        const NodeStream& s = data.streams[k];
        if (data.blockwise)
          return lms_adapt_block(psi, *s.block, s.block_ds.col(i), opt.mu);
        return lms_adapt(psi, s.xs.col(i), s.ds(i), opt.mu);
      });
    case Algorithm::diffusion_rls: {
      std::vector<RlsState> states(data.nodes, RlsState(data.dim, opt.delta));
      return diffusion_shell(a, net, data, [&](int k, int i, const Vector& psi) {
        const NodeStream& s = data.streams[k];
        states[k].w = psi;
        if (data.blockwise)
          rls_step_block(states[k], *s.block, s.block_ds.col(i), opt.lambda);
        else
          rls_step(states[k], s.xs.col(i), s.ds(i), opt.lambda);
        return states[k].w;
      });
    }
    default:
      throw std::invalid_argument("run_baseline: not a baseline algorithm");
  }
}

StrategyRun run_strategy(Algorithm a, const Network& net, const RunData& data,
                         const CcgOptions& ccg, const McgOptions& mcg,
                         const BaselineOptions& baseline) {
  switch (a) {
    case Algorithm::idccg: return run_idccg(net, data, ccg);
    case Algorithm::idmcg: return run_idmcg(net, data, mcg);
    case Algorithm::ddccg: return run_ddccg(net, data, ccg);
    case Algorithm::ddmcg: return run_ddmcg(net, data, mcg);
    default: return run_baseline(a, net, data, baseline);
  }
}

}  // namespace dcg
