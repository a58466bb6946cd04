#include "dcg/topology.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dcg {

namespace {

void check_node(const NetworkTopology& t, int k, const char* what) {
  if (k < 0 || k >= t.nodes)
    throw std::out_of_range(std::string(what) + ": node index out of range");
}

}  // namespace

void NetworkTopology::link(int k, int l) {
  check_node(*this, k, "link");
  check_node(*this, l, "link");
  adj[static_cast<size_t>(k) * nodes + l] = 1;
  adj[static_cast<size_t>(l) * nodes + k] = 1;
}

std::vector<int> NetworkTopology::neighbors(int k) const {
  check_node(*this, k, "neighbors");
  std::vector<int> out;
  for (int l = 0; l < nodes; ++l)
    if (linked(k, l)) out.push_back(l);
  return out;
}

int NetworkTopology::degree(int k) const {
  check_node(*this, k, "degree");
  int d = 0;
  for (int l = 0; l < nodes; ++l)
    if (linked(k, l)) ++d;
  return d;
}

std::vector<std::pair<int, int>> NetworkTopology::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k < nodes; ++k)
    for (int l = k + 1; l < nodes; ++l)
      if (linked(k, l)) out.emplace_back(k, l);
  return out;
}

NetworkTopology make_empty(int n) {
  if (n <= 0) throw std::invalid_argument("topology: node count must be positive");
  NetworkTopology t;
  t.nodes = n;
  t.adj.assign(static_cast<size_t>(n) * n, 0);
  for (int k = 0; k < n; ++k) t.adj[static_cast<size_t>(k) * n + k] = 1;
  return t;
}

NetworkTopology make_ring(int n) {
  NetworkTopology t = make_empty(n);
  for (int k = 0; k < n; ++k) t.link(k, (k + 1) % n);
  return t;
}

NetworkTopology make_full(int n) {
  NetworkTopology t = make_empty(n);
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) t.link(k, l);
  return t;
}

NetworkTopology make_random_geometric(int n, double radius, std::uint64_t seed,
                                      int max_attempts) {
  if (!(radius > 0.0))
    throw std::invalid_argument("topology: geometric radius must be positive");
  std::mt19937_64 engine(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<double> px(n), py(n);
    for (int k = 0; k < n; ++k) {
      px[k] = unit(engine);
      py[k] = unit(engine);
    }
    NetworkTopology t = make_empty(n);
    for (int k = 0; k < n; ++k) {
      for (int l = k + 1; l < n; ++l) {
        const double dx = px[k] - px[l];
        const double dy = py[k] - py[l];
        if (dx * dx + dy * dy <= radius * radius) t.link(k, l);
      }
    }
    if (is_connected(t)) return t;
  }
  std::ostringstream msg;
  msg << "topology: no connected geometric network of " << n << " nodes with radius "
      << radius << " after " << max_attempts << " attempts; increase the radius";
  throw std::runtime_error(msg.str());
}

NetworkTopology load_topology(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("topology: cannot open '" + path + "'");
  std::vector<std::pair<int, int>> pairs;
  int max_index = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int k, l;
    if (!(ls >> k)) continue;  // blank or comment-only line
    if (!(ls >> l)) {
      std::ostringstream msg;
      msg << "topology: '" << path << "' line " << lineno << ": expected two node indices";
      throw std::runtime_error(msg.str());
    }
    if (k < 1 || l < 1) {
      std::ostringstream msg;
      msg << "topology: '" << path << "' line " << lineno << ": indices are 1-based";
      throw std::runtime_error(msg.str());
    }
    pairs.emplace_back(k - 1, l - 1);
    max_index = std::max({max_index, k, l});
  }
  if (pairs.empty())
    throw std::runtime_error("topology: '" + path + "' contains no edges");
  NetworkTopology t = make_empty(max_index);
  for (const auto& [k, l] : pairs) t.link(k, l);
  return t;
}

void save_topology(const NetworkTopology& t, std::ostream& out) {
  for (const auto& [k, l] : t.edges()) out << (k + 1) << ' ' << (l + 1) << '\n';
}

bool is_connected(const NetworkTopology& t) {
  if (t.nodes <= 0) return false;
  std::vector<char> seen(t.nodes, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int k = stack.back();
    stack.pop_back();
    for (int l = 0; l < t.nodes; ++l) {
      if (t.linked(k, l) && !seen[l]) {
        seen[l] = 1;
        ++count;
        stack.push_back(l);
      }
    }
  }
  return count == t.nodes;
}

std::vector<int> natural_cycle(int n) {
  std::vector<int> cycle(n);
  for (int k = 0; k < n; ++k) cycle[k] = k;
  return cycle;
}

std::vector<std::pair<int, int>> validate_cycle(const NetworkTopology& t,
                                                const std::vector<int>& cycle) {
  if (static_cast<int>(cycle.size()) != t.nodes)
    throw std::invalid_argument("validate_cycle: cycle length differs from node count");
  std::vector<char> seen(t.nodes, 0);
  for (int k : cycle) {
    check_node(t, k, "validate_cycle");
    if (seen[k]) throw std::invalid_argument("validate_cycle: node visited twice");
    seen[k] = 1;
  }
  std::vector<std::pair<int, int>> missing;
  const int n = t.nodes;
  if (n == 1) return missing;
  for (int idx = 0; idx < n; ++idx) {
    const int k = cycle[idx];
    const int l = cycle[(idx + 1) % n];
    if (!t.linked(k, l)) missing.emplace_back(k, l);
  }
  return missing;
}

CombiningMatrix metropolis_weights(const NetworkTopology& t, bool count_self) {
  CombiningMatrix cm;
  cm.C = Eigen::MatrixXd::Zero(t.nodes, t.nodes);
  std::vector<int> size(t.nodes);
  for (int k = 0; k < t.nodes; ++k)
    size[k] = count_self ? t.degree(k) : t.degree(k) - 1;
  for (int k = 0; k < t.nodes; ++k) {
    double off = 0.0;
    for (int l = 0; l < t.nodes; ++l) {
      if (l == k || !t.linked(k, l)) continue;
      const double c = 1.0 / std::max(size[k], size[l]);
      cm.C(k, l) = c;
      off += c;
    }
    // 1 - off can land an ulp below zero when the off-diagonal weights sum to
    // exactly one; clamp so the weights stay a convex combination.
    cm.C(k, k) = std::max(0.0, 1.0 - off);
  }
  return cm;
}

Vector combine_estimates(const Eigen::Ref<const Eigen::VectorXd>& weights,
                         const std::vector<Vector>& estimates) {
  if (static_cast<size_t>(weights.size()) != estimates.size())
    throw std::invalid_argument("combine_estimates: weight/estimate counts differ");
  if (estimates.empty())
    throw std::invalid_argument("combine_estimates: no estimates");
  Vector out = Vector::Zero(estimates.front().size());
  for (size_t l = 0; l < estimates.size(); ++l) {
    if (estimates[l].size() != out.size())
      throw std::invalid_argument("combine_estimates: estimate sizes differ");
    if (weights(static_cast<int>(l)) != 0.0)
      out += weights(static_cast<int>(l)) * estimates[l];
  }
  return out;
}

}  // namespace dcg
