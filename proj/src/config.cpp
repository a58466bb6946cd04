#include "dcg/config.hpp"

#include "dcg/adaptation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace dcg {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Sectioned key/value store with consumption tracking so typos surface as
// "unknown key" errors instead of silently keeping defaults.
class IniReader {
 public:
  IniReader(const std::string& text, std::string origin) : origin_(std::move(origin)) {
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find_first_of("#;");
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        if (line.back() != ']')
          fail(lineno, "expected a closing ']' in section header");
        section = trim(line.substr(1, line.size() - 2));
        if (section.empty()) fail(lineno, "empty section name");
        continue;
      }
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        fail(lineno, "expected 'key = value'");
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty()) fail(lineno, "empty key");
      if (section.empty()) fail(lineno, "key outside any [section]");
      auto [it, inserted] = values_.insert({section + "." + key, value});
      if (!inserted) fail(lineno, "duplicate key '" + key + "' in [" + section + "]");
    }
  }

  bool has(const std::string& section, const std::string& key) const {
    return values_.count(section + "." + key) != 0;
  }

  std::string get_string(const std::string& section, const std::string& key,
                         const std::string& fallback) {
    const std::string full = section + "." + key;
    auto it = values_.find(full);
    if (it == values_.end()) return fallback;
    consumed_.insert(full);
    return it->second;
  }

  template <typename T>
  T get_number(const std::string& section, const std::string& key, T fallback) {
    const std::string full = section + "." + key;
    auto it = values_.find(full);
    if (it == values_.end()) return fallback;
    consumed_.insert(full);
    std::istringstream ss(it->second);
    T out{};
    if (!(ss >> out) || !(ss >> std::ws).eof())
      throw ConfigError(origin_ + ": value '" + it->second + "' for " + full +
                        " is not a valid number");
    return out;
  }

  bool get_bool(const std::string& section, const std::string& key, bool fallback) {
    std::string v = get_string(section, key, fallback ? "true" : "false");
    std::transform(v.begin(), v.end(), v.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
    if (v == "false" || v == "no" || v == "0" || v == "off") return false;
    throw ConfigError(origin_ + ": value '" + v + "' for " + section + "." + key +
                      " is not a boolean");
  }

  std::vector<std::string> get_list(const std::string& section, const std::string& key) {
    std::vector<std::string> out;
    std::string v = get_string(section, key, "");
    std::istringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (!item.empty()) out.push_back(item);
    }
    return out;
  }

  void finish() const {
    for (const auto& [full, value] : values_) {
      if (!consumed_.count(full))
        throw ConfigError(origin_ + ": unknown key '" + full + "'");
    }
  }

  const std::string& origin() const { return origin_; }

 private:
  [[noreturn]] void fail(int lineno, const std::string& what) const {
    std::ostringstream msg;
    msg << origin_ << ":" << lineno << ": " << what;
    throw ConfigError(msg.str());
  }

  std::string origin_;
  std::map<std::string, std::string> values_;
  std::set<std::string> consumed_;
};

ExperimentConfig read_config(IniReader& ini) {
  ExperimentConfig cfg;

  try {
    cfg.scenario = parse_scenario(ini.get_string("experiment", "scenario", "parameter"));
    const auto algos = ini.get_list("experiment", "algorithms");
    if (!algos.empty()) {
      cfg.algorithms.clear();
      for (const auto& name : algos) cfg.algorithms.push_back(parse_algorithm(name));
    }
    cfg.nodes = ini.get_number<int>("experiment", "nodes", cfg.nodes);
    cfg.instants = ini.get_number<int>("experiment", "instants", cfg.instants);
    cfg.runs = ini.get_number<int>("experiment", "runs", cfg.runs);
    cfg.seed = ini.get_number<std::uint64_t>("experiment", "seed", cfg.seed);
    cfg.preconditioner =
        parse_transform(ini.get_string("experiment", "preconditioner", "none"));
    cfg.threads = ini.get_number<int>("experiment", "threads", cfg.threads);
    cfg.output_dir = ini.get_string("experiment", "output", cfg.output_dir);

    cfg.topology.kind = parse_topology(ini.get_string("topology", "kind", "ring"));
    cfg.topology.radius =
        ini.get_number<double>("topology", "radius", cfg.topology.radius);
    cfg.topology.path = ini.get_string("topology", "file", "");

    cfg.taps = ini.get_number<int>("parameter", "taps", cfg.taps);
    cfg.input_variance =
        ini.get_number<double>("parameter", "input_variance", cfg.input_variance);
    cfg.noise_variance =
        ini.get_number<double>("parameter", "noise_variance", cfg.noise_variance);

    cfg.basis_count = ini.get_number<int>("spectrum", "basis_count", cfg.basis_count);
    cfg.freq_samples =
        ini.get_number<int>("spectrum", "freq_samples", cfg.freq_samples);
    cfg.active_bases =
        ini.get_number<int>("spectrum", "active_bases", cfg.active_bases);
    cfg.f_min = ini.get_number<double>("spectrum", "f_min", cfg.f_min);
    cfg.f_max = ini.get_number<double>("spectrum", "f_max", cfg.f_max);
    cfg.spectrum_noise_variance = ini.get_number<double>(
        "spectrum", "noise_variance", cfg.spectrum_noise_variance);

    cfg.ccg.inner_iterations =
        ini.get_number<int>("ccg", "iterations", cfg.ccg.inner_iterations);
    cfg.ccg.lambda_f = ini.get_number<double>("ccg", "lambda_f", cfg.ccg.lambda_f);
    cfg.ccg.delta = ini.get_number<double>("ccg", "delta", cfg.ccg.delta);

    cfg.mcg.lambda_f = ini.get_number<double>("mcg", "lambda_f", cfg.mcg.lambda_f);
    cfg.mcg.eta = ini.get_number<double>("mcg", "eta", cfg.mcg.eta);
    cfg.mcg.delta = ini.get_number<double>("mcg", "delta", cfg.mcg.delta);
    const std::string band = ini.get_string("mcg", "eta_band", "strict");
    if (band == "strict") {
      cfg.mcg.enforce_eta_band = true;
    } else if (band == "relaxed") {
      cfg.mcg.enforce_eta_band = false;
    } else {
      throw ConfigError(ini.origin() + ": mcg.eta_band must be 'strict' or 'relaxed', got '" +
                        band + "'");
    }

    cfg.baseline.mu = ini.get_number<double>("lms", "mu", cfg.baseline.mu);
    cfg.baseline.lambda = ini.get_number<double>("rls", "lambda", cfg.baseline.lambda);
    cfg.baseline.delta = ini.get_number<double>("rls", "delta", cfg.baseline.delta);

    cfg.metropolis_count_self =
        ini.get_bool("combining", "count_self", cfg.metropolis_count_self);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(ini.origin() + ": " + e.what());
  }

  ini.finish();
  return cfg;
}

}  // namespace

ScenarioKind parse_scenario(const std::string& name) {
  if (name == "parameter") return ScenarioKind::parameter;
  if (name == "spectrum") return ScenarioKind::spectrum;
  throw std::invalid_argument("unknown scenario '" + name +
                              "' (expected parameter or spectrum)");
}

std::string to_string(ScenarioKind kind) {
  return kind == ScenarioKind::parameter ? "parameter" : "spectrum";
}

TopologyKind parse_topology(const std::string& name) {
  if (name == "ring") return TopologyKind::ring;
  if (name == "full") return TopologyKind::full;
  if (name == "geometric") return TopologyKind::geometric;
  if (name == "file") return TopologyKind::file;
  throw std::invalid_argument("unknown topology '" + name +
                              "' (expected ring, full, geometric, or file)");
}

std::string to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::ring: return "ring";
    case TopologyKind::full: return "full";
    case TopologyKind::geometric: return "geometric";
    case TopologyKind::file: return "file";
  }
  return "ring";
}

ParameterScenario ExperimentConfig::parameter_scenario() const {
  ParameterScenario sc;
  sc.nodes = nodes;
  sc.taps = taps;
  sc.instants = instants;
  sc.input_variance = input_variance;
  sc.noise_variance = noise_variance;
  return sc;
}

SpectrumScenario ExperimentConfig::spectrum_scenario() const {
  SpectrumScenario sc;
  sc.nodes = nodes;
  sc.basis_count = basis_count;
  sc.freq_samples = freq_samples;
  sc.instants = instants;
  sc.active_count = active_bases;
  sc.f_min = f_min;
  sc.f_max = f_max;
  sc.noise_variance = spectrum_noise_variance;
  return sc;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return load_config_string(text.str(), path);
}

ExperimentConfig load_config_string(const std::string& text, const std::string& origin) {
  IniReader ini(text, origin);
  ExperimentConfig cfg = read_config(ini);
  validate_config(cfg);
  return cfg;
}

void validate_config(const ExperimentConfig& cfg) {
  const auto bad = [](const std::string& msg) { throw ConfigError(msg); };

  if (cfg.nodes < 1) bad("experiment.nodes must be >= 1");
  if (cfg.instants < 1) bad("experiment.instants must be >= 1");
  if (cfg.runs < 1) bad("experiment.runs must be >= 1");
  if (cfg.threads < 0) bad("experiment.threads must be >= 0");
  if (cfg.algorithms.empty()) bad("experiment.algorithms must list at least one algorithm");
  if (cfg.output_dir.empty()) bad("experiment.output must not be empty");

  if (cfg.topology.kind == TopologyKind::geometric && !(cfg.topology.radius > 0.0))
    bad("topology.radius must be positive");
  if (cfg.topology.kind == TopologyKind::file && cfg.topology.path.empty())
    bad("topology.file must name an edge-list file when topology.kind = file");

  if (cfg.taps < 1) bad("parameter.taps must be >= 1");
  if (!(cfg.input_variance > 0.0)) bad("parameter.input_variance must be positive");
  if (!(cfg.noise_variance >= 0.0)) bad("parameter.noise_variance must be >= 0");

  if (cfg.basis_count < 1) bad("spectrum.basis_count must be >= 1");
  if (cfg.freq_samples <= cfg.basis_count)
    bad("spectrum.freq_samples must exceed spectrum.basis_count");
  if (cfg.active_bases < 1 || cfg.active_bases > cfg.basis_count)
    bad("spectrum.active_bases must lie in [1, spectrum.basis_count]");
  if (!(cfg.f_max > cfg.f_min)) bad("spectrum.f_max must exceed spectrum.f_min");
  if (!(cfg.spectrum_noise_variance >= 0.0)) bad("spectrum.noise_variance must be >= 0");

  if (cfg.ccg.inner_iterations < 1) bad("ccg.iterations must be >= 1");
  if (!(cfg.ccg.lambda_f > 0.0) || cfg.ccg.lambda_f > 1.0)
    bad("ccg.lambda_f must satisfy 0 < lambda_f <= 1");
  if (!(cfg.ccg.delta > 0.0)) bad("ccg.delta must be positive");

  if (!(cfg.mcg.lambda_f > 0.0) || cfg.mcg.lambda_f > 1.0)
    bad("mcg.lambda_f must satisfy 0 < lambda_f <= 1");
  if (!(cfg.mcg.delta > 0.0)) bad("mcg.delta must be positive");
  if (cfg.mcg.enforce_eta_band) {
    try {
      validate_eta(cfg.mcg.eta, cfg.mcg.lambda_f);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("mcg.") + e.what() +
                        "; set mcg.eta_band = relaxed to override");
    }
  }

  if (!(cfg.baseline.mu > 0.0)) bad("lms.mu must be positive");
  if (!(cfg.baseline.lambda > 0.0) || cfg.baseline.lambda > 1.0)
    bad("rls.lambda must satisfy 0 < lambda <= 1");
  if (!(cfg.baseline.delta > 0.0)) bad("rls.delta must be positive");
}

}  // namespace dcg
