#pragma once

#include "dcg/preconditioning.hpp"
#include "dcg/scenarios.hpp"
#include "dcg/strategies.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcg {

// Raised for unreadable, malformed, or out-of-range configuration input; the
// message names the offending key and the admissible range.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ScenarioKind { parameter, spectrum };

ScenarioKind parse_scenario(const std::string& name);
std::string to_string(ScenarioKind kind);

enum class TopologyKind { ring, full, geometric, file };

TopologyKind parse_topology(const std::string& name);
std::string to_string(TopologyKind kind);

struct TopologySpec {
  TopologyKind kind = TopologyKind::ring;
  double radius = 0.35;  // geometric link radius
  std::string path;      // edge-list file
};

struct ExperimentConfig {
  ScenarioKind scenario = ScenarioKind::parameter;
  std::vector<Algorithm> algorithms{Algorithm::idmcg};
  TopologySpec topology;

  int nodes = 20;
  int instants = 1000;
  int runs = 100;
  std::uint64_t seed = 1;
  TransformKind preconditioner = TransformKind::none;
  bool metropolis_count_self = true;
  int threads = 0;  // 0 = hardware concurrency
  std::string output_dir = "out";

  // Parameter scenario.
  int taps = 10;
  double input_variance = 1.0;
  double noise_variance = 0.001;

  // Spectrum scenario.
  int basis_count = 50;
  int freq_samples = 100;
  int active_bases = 8;
  double f_min = 0.0;
  double f_max = 1.0;
  double spectrum_noise_variance = 1e-3;

  CcgOptions ccg;
  McgOptions mcg;
  BaselineOptions baseline;

  ParameterScenario parameter_scenario() const;
  SpectrumScenario spectrum_scenario() const;
};

// Parses an INI-style file (sections in brackets, key = value pairs, '#' or
// ';' comments).  Unknown sections or keys are errors.  The result has been
// passed through validate_config.
ExperimentConfig load_config(const std::string& path);

// Same, from an in-memory string; `origin` labels error messages.
ExperimentConfig load_config_string(const std::string& text,
                                    const std::string& origin = "<string>");

// Range checks for every field; throws ConfigError on the first violation.
void validate_config(const ExperimentConfig& cfg);

}  // namespace dcg
