// Command-line simulator for distributed conjugate-gradient adaptive
// estimation over sensor networks.  Loads an INI config, applies flag
// overrides, runs the Monte Carlo experiment, and writes learning curves,
// PSD tables, and a metadata record to the output directory.

#include "dcg/config.hpp"
#include "dcg/experiment.hpp"
#include "dcg/metrics.hpp"
#include "dcg/version.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  CLI::App app{"dcgsim - distributed conjugate-gradient adaptive estimation simulator"};
  app.set_version_flag("--version", std::string(dcg::kVersion));

  std::string config_path;
  std::string scenario, preconditioner, topology_file, output_dir;
  std::vector<std::string> algorithms;
  int nodes = -1, instants = -1, runs = -1, threads = -1;
  std::uint64_t seed = 0;

  app.add_option("-c,--config", config_path, "INI configuration file")
      ->check(CLI::ExistingFile);
  app.add_option("--scenario", scenario, "parameter or spectrum");
  app.add_option("-a,--algorithm", algorithms,
                 "algorithm to simulate (repeatable): idccg, idmcg, ddccg, ddmcg, "
                 "incremental-lms, incremental-rls, diffusion-lms, diffusion-rls");
  app.add_option("--nodes", nodes, "number of network nodes");
  app.add_option("--instants", instants, "time instants per run");
  app.add_option("--runs", runs, "Monte Carlo runs");
  app.add_option("--seed", seed, "master seed");
  app.add_option("--preconditioner", preconditioner, "none, dft, or dct");
  app.add_option("--topology", topology_file, "edge-list topology file (1-indexed)");
  app.add_option("--threads", threads, "worker threads (0 = hardware)");
  app.add_option("-o,--output", output_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    dcg::ExperimentConfig cfg;
    if (!config_path.empty()) cfg = dcg::load_config(config_path);

    if (!scenario.empty()) cfg.scenario = dcg::parse_scenario(scenario);
    if (!algorithms.empty()) {
      cfg.algorithms.clear();
      for (const auto& name : algorithms)
        cfg.algorithms.push_back(dcg::parse_algorithm(name));
    }
    if (nodes >= 0) cfg.nodes = nodes;
    if (instants >= 0) cfg.instants = instants;
    if (runs >= 0) cfg.runs = runs;
    if (app.count("--seed") > 0) cfg.seed = seed;
    if (!preconditioner.empty()) cfg.preconditioner = dcg::parse_transform(preconditioner);
    if (!topology_file.empty()) {
      cfg.topology.kind = dcg::TopologyKind::file;
      cfg.topology.path = topology_file;
    }
    if (threads >= 0) cfg.threads = threads;
    if (!output_dir.empty()) cfg.output_dir = output_dir;

    try {
      dcg::validate_config(cfg);
    } catch (const dcg::ConfigError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw dcg::ConfigError(e.what());
    }

    std::printf("dcgsim %s\n", dcg::kVersion);
    std::printf("scenario=%s nodes=%d instants=%d runs=%d seed=%llu preconditioner=%s\n",
                dcg::to_string(cfg.scenario).c_str(), cfg.nodes, cfg.instants, cfg.runs,
                static_cast<unsigned long long>(cfg.seed),
                dcg::to_string(cfg.preconditioner).c_str());

    const auto t0 = std::chrono::steady_clock::now();
    const dcg::ExperimentResult res = dcg::run_experiment(cfg);
    const auto t1 = std::chrono::steady_clock::now();
    const double elapsed = std::chrono::duration<double>(t1 - t0).count();

    for (const auto& ar : res.algorithms) {
      std::printf("%-20s steady-state MSD %8.2f dB   steady-state MSE %8.2f dB\n",
                  ar.tag.c_str(), dcg::steady_state_db(ar.msd),
                  dcg::steady_state_db(ar.mse));
    }
    dcg::write_outputs(res);
    std::printf("wrote %zu curve file(s) to %s (%.1f s)\n", res.algorithms.size(),
                cfg.output_dir.c_str(), elapsed);
    return 0;
  } catch (const dcg::ConfigError& e) {
    std::fprintf(stderr, "error (config): %s\n", e.what());
    return 1;
  } catch (const dcg::TrajectoryError& e) {
    std::fprintf(stderr, "error (runtime): %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error (config): %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
