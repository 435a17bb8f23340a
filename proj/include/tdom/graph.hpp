#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdom/rng.hpp"

namespace tdom {

class PairingState;

// Undirected multigraph with loops. Adjacency lists hold one entry per
// incident edge endpoint: a loop at v contributes v twice to adj(v) and 2 to
// degree(v). Hence |adj(v)| == degree(v), and a uniform draw from adj(v) is
// exactly edge-uniform neighbor sampling.
class Pseudograph {
 public:
  explicit Pseudograph(int vertex_count);

  // Collapse a completed pairing: one edge per exposed pair, vertex = bucket.
  // Throws std::invalid_argument if the pairing is incomplete.
  static Pseudograph from_pairing(const PairingState& pairing);

  void add_edge(int u, int v);  // loops (u == v) allowed

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  const std::vector<int>& adj(int v) const { return adj_[v]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // The common degree if the graph is regular, nullopt otherwise.
  std::optional<int> regular_degree() const;
  bool has_loop() const;
  bool is_simple() const;  // no loops, no parallel edges

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

struct TdsVerdict {
  bool is_tds = false;
  std::optional<int> witness;  // an uncovered vertex when is_tds is false
};

// Check that every vertex of g has at least one neighbor in the candidate
// set. A loop makes a vertex its own neighbor, so a looped vertex in the set
// covers itself. Throws std::out_of_range on invalid vertex ids.
TdsVerdict verify_tds(const Pseudograph& g, const std::vector<int>& candidate);

struct ExactResult {
  int gamma_t = 0;
  std::vector<int> witness_set;  // one optimal total dominating set, sorted
};

// Exact minimum total dominating set by iterative deepening over set sizes,
// branching on the neighbors of the lowest uncovered vertex. Throws
// std::invalid_argument when the graph exceeds max_vertices and
// std::runtime_error when no total dominating set exists (isolated vertex).
ExactResult brute_force_gamma_t(const Pseudograph& g, int max_vertices = 24);

// Length of a shortest cycle: 1 if any loop, 2 if any parallel edge, nullopt
// for forests; otherwise found by breadth-first search from every vertex.
std::optional<int> girth(const Pseudograph& g);

// Generators for small named graphs (test fixtures and exact oracles).
Pseudograph cycle_graph(int n);                  // n >= 3
Pseudograph complete_graph(int k);               // k >= 1
Pseudograph complete_bipartite(int a, int b);    // a, b >= 1
Pseudograph petersen_graph();

// Uniformly random simple d-regular graph: complete random pairings are drawn
// until one collapses without loops or parallel edges. Throws
// std::runtime_error if max_attempts pairings are all rejected.
Pseudograph sample_simple_regular(int n, int d, Rng& rng, int max_attempts = 10000);

// Plain text edge-list format: first line "n m", then m lines "u v"
// (0-indexed; loops as "v v"). Readers throw std::runtime_error on malformed
// input.
Pseudograph read_edge_list(std::istream& in);
Pseudograph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Pseudograph& g);

}  // namespace tdom
