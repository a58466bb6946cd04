#include "dcg/experiment.hpp"

#include "dcg/preconditioning.hpp"
#include "dcg/rng.hpp"
#include "dcg/version.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace dcg {

namespace {

NetworkTopology build_topology(const ExperimentConfig& cfg) {
  try {
    switch (cfg.topology.kind) {
      case TopologyKind::ring: return make_ring(cfg.nodes);
      case TopologyKind::full: return make_full(cfg.nodes);
      case TopologyKind::geometric:
        return make_random_geometric(cfg.nodes, cfg.topology.radius,
                                     derive_seed(cfg.seed, kTopologyStream));
      case TopologyKind::file: {
        NetworkTopology t = load_topology(cfg.topology.path);
        if (t.nodes != cfg.nodes) {
          std::ostringstream msg;
          msg << "topology file '" << cfg.topology.path << "' defines " << t.nodes
              << " nodes but experiment.nodes = " << cfg.nodes;
          throw std::runtime_error(msg.str());
        }
        if (!is_connected(t))
          throw std::runtime_error("topology file '" + cfg.topology.path +
                                   "' describes a disconnected network");
        return t;
      }
    }
    throw std::runtime_error("unhandled topology kind");
  } catch (const std::runtime_error& e) {
    throw ConfigError(e.what());
  }
}

int estimate_dim(const ExperimentConfig& cfg) {
  return cfg.scenario == ScenarioKind::parameter ? cfg.taps : cfg.basis_count;
}

// Per-run, per-algorithm reduction payload.
struct RunOutcome {
  std::vector<double> msd_linear;
  std::vector<double> mse_linear;
  Vector final_estimate;
  AdaptDiagnostics diagnostics;
};

void check_finite(const std::vector<double>& values, Algorithm a, int run,
                  const char* metric) {
  for (size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      std::ostringstream msg;
      msg << to_string(a) << " diverged: non-finite " << metric << " at run "
          << run + 1 << ", instant " << i + 1;
      throw TrajectoryError(msg.str());
    }
  }
}

RunOutcome evaluate_strategy(Algorithm a, const StrategyRun& sr, const RunData& data,
                             const Preconditioner& P, bool preconditioned, int run) {
  RunOutcome out;
  out.diagnostics = sr.diagnostics.totals;
  out.mse_linear = sr.mse;
  const int I = data.instants;
  out.msd_linear.resize(I);
  const auto recover = [&](const Vector& w) {
    return preconditioned ? recover_estimate(P, w) : w;
  };
  if (sr.incremental()) {
    for (int i = 0; i < I; ++i)
      out.msd_linear[i] = msd(recover(sr.global[i]), data.true_weights);
    out.final_estimate = recover(sr.global.back());
  } else {
    for (int i = 0; i < I; ++i) {
      double acc = 0.0;
      for (const Vector& w : sr.per_node[i]) acc += msd(recover(w), data.true_weights);
      out.msd_linear[i] = acc / static_cast<double>(sr.per_node[i].size());
    }
    Vector mean = Vector::Zero(data.dim);
    for (const Vector& w : sr.per_node.back()) mean += recover(w);
    out.final_estimate = mean / static_cast<double>(sr.per_node.back().size());
  }
  check_finite(out.msd_linear, a, run, "MSD");
  check_finite(out.mse_linear, a, run, "MSE");
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << body;
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::string format_csv_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", v);
  return buf;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);

  ExperimentResult res;
  res.config = cfg;
  res.topology = build_topology(cfg);
  const Network net = make_network(res.topology, cfg.metropolis_count_self);

  const bool any_incremental = std::any_of(cfg.algorithms.begin(), cfg.algorithms.end(),
                                           [](Algorithm a) { return is_incremental(a); });
  if (any_incremental) {
    const auto missing = validate_cycle(res.topology, net.cycle);
    if (!missing.empty()) {
      std::ostringstream msg;
      msg << "incremental strategies walk the nodes in their natural order, but these "
             "consecutive pairs are not linked:";
      for (const auto& [k, l] : missing) msg << " (" << k + 1 << "," << l + 1 << ")";
      msg << "; use a ring or full topology, or a topology file that closes this cycle";
      throw ConfigError(msg.str());
    }
  }

  const int dim = estimate_dim(cfg);
  const bool any_cg = std::any_of(cfg.algorithms.begin(), cfg.algorithms.end(),
                                  [](Algorithm a) { return is_cg_family(a); });
  const bool preconditioned = any_cg && cfg.preconditioner != TransformKind::none;
  const Preconditioner P = Preconditioner::make(
      preconditioned ? cfg.preconditioner : TransformKind::none, dim);

  SpectrumModel model;
  if (cfg.scenario == ScenarioKind::spectrum) {
    model = build_spectrum_model(cfg.spectrum_scenario(),
                                 derive_seed(cfg.seed, kScenarioStream));
    res.grid = model.grid;
    res.spectrum_basis = model.basis;
    res.true_psd = psd_from_weights(model.basis, model.true_weights);
    res.active_set = model.active;
  }

  const size_t n_algo = cfg.algorithms.size();
  std::vector<std::vector<RunOutcome>> outcomes(n_algo);
  for (auto& v : outcomes) v.resize(cfg.runs);

  const auto process_run = [&](int r) {
    const std::uint64_t run_seed = derive_seed(cfg.seed, kRunStream, r);
    const RunData data = cfg.scenario == ScenarioKind::parameter
                             ? gen_parameter_data(cfg.parameter_scenario(), run_seed)
                             : gen_spectrum_data(cfg.spectrum_scenario(), model, run_seed);
    RunData transformed;
    const RunData* cg_data = &data;
    if (preconditioned) {
      transformed = transform_run_data(data, P);
      cg_data = &transformed;
    }
    for (size_t ai = 0; ai < n_algo; ++ai) {
      const Algorithm a = cfg.algorithms[ai];
      const bool uses_transform = preconditioned && is_cg_family(a);
      const RunData& in = uses_transform ? *cg_data : data;
      const StrategyRun sr = run_strategy(a, net, in, cfg.ccg, cfg.mcg, cfg.baseline);
      outcomes[ai][r] = evaluate_strategy(a, sr, in, P, uses_transform, r);
    }
  };

  unsigned threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(cfg.runs));
  if (threads <= 1) {
    for (int r = 0; r < cfg.runs; ++r) process_run(r);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const auto worker = [&] {
      for (;;) {
        const int r = next.fetch_add(1);
        if (r >= cfg.runs) return;
        try {
          process_run(r);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  // Reduce in run-index order so the averages are scheduling-independent.
  for (size_t ai = 0; ai < n_algo; ++ai) {
    const Algorithm a = cfg.algorithms[ai];
    AlgorithmResult ar;
    ar.algorithm = a;
    ar.tag = to_string(a);
    if (preconditioned && is_cg_family(a)) ar.tag += "-" + to_string(cfg.preconditioner);

    ar.msd.tag = ar.tag;
    ar.mse.tag = ar.tag;
    ar.msd.runs = cfg.runs;
    ar.mse.runs = cfg.runs;
    ar.msd.linear.assign(cfg.instants, 0.0);
    ar.mse.linear.assign(cfg.instants, 0.0);
    ar.mean_final_estimate = Vector::Zero(dim);
    for (int r = 0; r < cfg.runs; ++r) {
      const RunOutcome& o = outcomes[ai][r];
      for (int i = 0; i < cfg.instants; ++i) {
        ar.msd.linear[i] += o.msd_linear[i];
        ar.mse.linear[i] += o.mse_linear[i];
      }
      ar.final_estimates.push_back(o.final_estimate);
      ar.mean_final_estimate += o.final_estimate;
      ar.diagnostics.degenerate_directions += o.diagnostics.degenerate_directions;
      ar.diagnostics.residual_restarts += o.diagnostics.residual_restarts;
    }
    const double inv_runs = 1.0 / static_cast<double>(cfg.runs);
    for (double& v : ar.msd.linear) v *= inv_runs;
    for (double& v : ar.mse.linear) v *= inv_runs;
    ar.mean_final_estimate *= inv_runs;
    ar.msd.refresh_db();
    ar.mse.refresh_db();
    res.algorithms.push_back(std::move(ar));
  }
  return res;
}

std::string metadata_json(const ExperimentResult& res) {
  using nlohmann::json;
  const ExperimentConfig& cfg = res.config;

  json j;
  j["version"] = kVersion;
  json config;
  config["scenario"] = to_string(cfg.scenario);
  {
    std::vector<std::string> names;
    for (Algorithm a : cfg.algorithms) names.push_back(to_string(a));
    config["algorithms"] = names;
  }
  config["nodes"] = cfg.nodes;
  config["instants"] = cfg.instants;
  config["runs"] = cfg.runs;
  config["seed"] = cfg.seed;
  // The destination directory and worker count are execution details, not
  // part of the experiment identity; leaving them out keeps the metadata
  // byte-identical across reruns of the same seed.
  config["preconditioner"] = to_string(cfg.preconditioner);
  config["topology"] = {{"kind", to_string(cfg.topology.kind)},
                        {"radius", cfg.topology.radius},
                        {"file", cfg.topology.path}};
  config["parameter"] = {{"taps", cfg.taps},
                         {"input_variance", cfg.input_variance},
                         {"noise_variance", cfg.noise_variance}};
  config["spectrum"] = {{"basis_count", cfg.basis_count},
                        {"freq_samples", cfg.freq_samples},
                        {"active_bases", cfg.active_bases},
                        {"f_min", cfg.f_min},
                        {"f_max", cfg.f_max},
                        {"noise_variance", cfg.spectrum_noise_variance}};
  config["ccg"] = {{"iterations", cfg.ccg.inner_iterations},
                   {"lambda_f", cfg.ccg.lambda_f},
                   {"delta", cfg.ccg.delta}};
  config["mcg"] = {{"lambda_f", cfg.mcg.lambda_f},
                   {"eta", cfg.mcg.eta},
                   {"delta", cfg.mcg.delta},
                   {"eta_band", cfg.mcg.enforce_eta_band ? "strict" : "relaxed"}};
  config["lms"] = {{"mu", cfg.baseline.mu}};
  config["rls"] = {{"lambda", cfg.baseline.lambda}, {"delta", cfg.baseline.delta}};
  config["combining"] = {{"count_self", cfg.metropolis_count_self}};
  j["config"] = config;

  j["seeds"] = {{"master", cfg.seed},
                {"topology", derive_seed(cfg.seed, kTopologyStream)},
                {"scenario", derive_seed(cfg.seed, kScenarioStream)}};

  json edges = json::array();
  for (const auto& [k, l] : res.topology.edges())
    edges.push_back(json::array({k + 1, l + 1}));
  j["topology"] = {{"nodes", res.topology.nodes}, {"edges", edges}};

  json algos = json::array();
  for (const AlgorithmResult& ar : res.algorithms) {
    json a;
    a["name"] = to_string(ar.algorithm);
    a["tag"] = ar.tag;
    a["steady_state_msd_db"] = steady_state_db(ar.msd);
    a["steady_state_mse_db"] = steady_state_db(ar.mse);
    a["diagnostics"] = {{"degenerate_directions", ar.diagnostics.degenerate_directions},
                        {"residual_restarts", ar.diagnostics.residual_restarts}};
    algos.push_back(a);
  }
  j["algorithms"] = algos;

  if (!res.active_set.empty()) j["spectrum"] = {{"active_bases", res.active_set}};

  return j.dump(2) + "\n";
}

void write_outputs(const ExperimentResult& res) {
  namespace fs = std::filesystem;
  const fs::path dir(res.config.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec)
    throw std::runtime_error("cannot create output directory '" + dir.string() +
                             "': " + ec.message());

  for (const AlgorithmResult& ar : res.algorithms) {
    std::ostringstream body;
    body << "instant,msd_linear,msd_db,mse_linear,mse_db\n";
    for (size_t i = 0; i < ar.msd.linear.size(); ++i) {
      body << (i + 1) << ',' << format_csv_value(ar.msd.linear[i]) << ','
           << format_csv_value(ar.msd.db[i]) << ',' << format_csv_value(ar.mse.linear[i])
           << ',' << format_csv_value(ar.mse.db[i]) << '\n';
    }
    write_text_file(dir / ("curve_" + ar.tag + ".csv"), body.str());
  }

  if (res.config.scenario == ScenarioKind::spectrum) {
    for (const AlgorithmResult& ar : res.algorithms) {
      const RealVector estimated =
          psd_from_weights(res.spectrum_basis, ar.mean_final_estimate);
      std::ostringstream body;
      body << "frequency,true_psd,estimated_psd\n";
      for (int j = 0; j < res.grid.size(); ++j) {
        body << format_csv_value(res.grid(j)) << ',' << format_csv_value(res.true_psd(j))
             << ',' << format_csv_value(estimated(j)) << '\n';
      }
      write_text_file(dir / ("psd_" + ar.tag + ".csv"), body.str());
    }
  }

  write_text_file(dir / "metadata.json", metadata_json(res));
}

}  // namespace dcg
