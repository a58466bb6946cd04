#pragma once

#include "dcg/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace dcg {

// Undirected network of sensor nodes.  The adjacency matrix is symmetric and
// every node is linked to itself; neighborhoods N_k therefore include k.
struct NetworkTopology {
  int nodes = 0;
  std::vector<std::uint8_t> adj;  // row-major nodes x nodes

  bool linked(int k, int l) const { return adj[static_cast<size_t>(k) * nodes + l] != 0; }
  void link(int k, int l);
  std::vector<int> neighbors(int k) const;  // includes k itself
  int degree(int k) const;                  // |N_k|, includes k itself
  std::vector<std::pair<int, int>> edges() const;  // k < l, self-links omitted
};

NetworkTopology make_empty(int n);  // self-links only
NetworkTopology make_ring(int n);
NetworkTopology make_full(int n);

// Nodes drawn uniformly on the unit square; k and l are linked when their
// distance is at most radius.  Re-draws until the network is connected and
// throws after max_attempts failures.
NetworkTopology make_random_geometric(int n, double radius, std::uint64_t seed,
                                      int max_attempts = 1000);

// Edge-list file: one "k l" pair per line, 1-indexed; '#' starts a comment.
// The node count is the largest index seen.
NetworkTopology load_topology(const std::string& path);
void save_topology(const NetworkTopology& t, std::ostream& out);

bool is_connected(const NetworkTopology& t);

// The node ordering 0, 1, ..., n-1 used as the default incremental cycle.
std::vector<int> natural_cycle(int n);

// Checks that cycle is a permutation of all nodes and that consecutive nodes
// (including the wrap from last back to first) are linked.  Returns the list
// of missing links; empty means the cycle is valid.  A malformed permutation
// throws.
std::vector<std::pair<int, int>> validate_cycle(const NetworkTopology& t,
                                                const std::vector<int>& cycle);

struct CombiningMatrix {
  Eigen::MatrixXd C;  // row k holds node k's combination weights
};

// Metropolis rule: for linked k != l, c_kl = 1 / max(|N_k|, |N_l|), and
// c_kk = 1 - sum of the off-diagonal row entries.  count_self selects whether
// |N_k| includes the node itself (the default).
CombiningMatrix metropolis_weights(const NetworkTopology& t, bool count_self = true);

// weights^T applied to a list of estimates: sum_l weights(l) * estimates[l].
Vector combine_estimates(const Eigen::Ref<const Eigen::VectorXd>& weights,
                         const std::vector<Vector>& estimates);

}  // namespace dcg
