#include "tdom/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "tdom/pairing.hpp"

namespace tdom {

Pseudograph::Pseudograph(int vertex_count) {
  if (vertex_count < 1) throw std::invalid_argument("vertex count must be positive");
  adj_.resize(static_cast<std::size_t>(vertex_count));
}

Pseudograph Pseudograph::from_pairing(const PairingState& pairing) {
  if (!pairing.complete()) throw std::invalid_argument("pairing is not complete");
  Pseudograph g(pairing.n());
  for (const auto& [a, b] : pairing.pairs()) {
    g.add_edge(pairing.point_bucket(a), pairing.point_bucket(b));
  }
  return g;
}

void Pseudograph::add_edge(int u, int v) {
  const int n = vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("edge endpoint out of range");
  edges_.emplace_back(u, v);
  if (u == v) {
    adj_[u].push_back(u);
    adj_[u].push_back(u);
  } else {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
}

std::optional<int> Pseudograph::regular_degree() const {
  const int deg = degree(0);
  for (int v = 1; v < vertex_count(); ++v) {
    if (degree(v) != deg) return std::nullopt;
  }
  return deg;
}

bool Pseudograph::has_loop() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const auto& e) { return e.first == e.second; });
}

bool Pseudograph::is_simple() const {
  if (has_loop()) return false;
  std::vector<std::pair<int, int>> normalized;
  normalized.reserve(edges_.size());
  for (const auto& [u, v] : edges_) normalized.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(normalized.begin(), normalized.end());
  return std::adjacent_find(normalized.begin(), normalized.end()) == normalized.end();
}

TdsVerdict verify_tds(const Pseudograph& g, const std::vector<int>& candidate) {
  const int n = g.vertex_count();
  std::vector<char> in(n, 0);
  for (int v : candidate) {
    if (v < 0 || v >= n) throw std::out_of_range("candidate vertex id out of range");
    in[v] = 1;
  }
  for (int v = 0; v < n; ++v) {
    bool covered = false;
    for (int w : g.adj(v)) {
      if (in[w]) {
        covered = true;
        break;
      }
    }
    if (!covered) return {false, v};
  }
  return {true, std::nullopt};
}

namespace {

// Depth-first search for a total dominating set of exactly `remaining` more
// vertices: every total dominating set must contain a neighbor of the lowest
// uncovered vertex, so branching over those neighbors is complete.
bool tds_search(const std::vector<std::uint64_t>& nb, std::uint64_t full, int max_degree,
                std::uint64_t covered, int remaining, std::vector<int>& out) {
  if (covered == full) return true;
  const int uncovered = std::popcount(full & ~covered);
  if (remaining == 0 || uncovered > remaining * max_degree) return false;
  const int v = std::countr_zero(full & ~covered);
  // Note: no candidate here can already be in the set — a chosen neighbor of
  // v would have covered v.
  std::uint64_t tried = 0;
  for (std::uint64_t cand = nb[v]; cand != 0; cand &= cand - 1) {
    const int u = std::countr_zero(cand);
    const std::uint64_t bit = std::uint64_t{1} << u;
    if (tried & bit) continue;
    tried |= bit;
    out.push_back(u);
    if (tds_search(nb, full, max_degree, covered | nb[u], remaining - 1, out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace

ExactResult brute_force_gamma_t(const Pseudograph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices || n > 63)
    throw std::invalid_argument("instance too large for exact search");
  int max_degree = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0)
      throw std::runtime_error("no total dominating set exists (isolated vertex)");
    max_degree = std::max(max_degree, g.degree(v));
  }
  std::vector<std::uint64_t> nb(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : g.adj(v)) nb[v] |= std::uint64_t{1} << w;
  }
  const std::uint64_t full = (n == 63) ? ~std::uint64_t{0} >> 1 : (std::uint64_t{1} << n) - 1;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> witness;
    if (tds_search(nb, full, max_degree, 0, k, witness)) {
      std::sort(witness.begin(), witness.end());
      return {k, witness};
    }
  }
  throw std::logic_error("exhaustive search failed on a graph without isolated vertices");
}

std::optional<int> girth(const Pseudograph& g) {
  if (g.has_loop()) return 1;
  {
    std::vector<std::pair<int, int>> normalized;
    normalized.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges())
      normalized.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(normalized.begin(), normalized.end());
    if (std::adjacent_find(normalized.begin(), normalized.end()) != normalized.end()) return 2;
  }
  // Simple graph: breadth-first search from every root; a shortest cycle
  // through the root is detected at the first non-tree edge.
  const int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      bool skipped_parent_edge = false;
      for (int w : g.adj(u)) {
        if (w == parent[u] && !skipped_parent_edge) {
          skipped_parent_edge = true;  // exactly one tree edge back to parent
          continue;
        }
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else {
          const int cycle = dist[u] + dist[w] + 1;
          if (best < 0 || cycle < best) best = cycle;
        }
      }
    }
    if (best == 3) break;  // no simple graph does better
  }
  if (best < 0) return std::nullopt;
  return best;
}

Pseudograph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Pseudograph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Pseudograph complete_graph(int k) {
  Pseudograph g(k);
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  }
  return g;
}

Pseudograph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("both sides must be non-empty");
  Pseudograph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

Pseudograph petersen_graph() {
  Pseudograph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

Pseudograph sample_simple_regular(int n, int d, Rng& rng, int max_attempts) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    PairingState pairing(n, d);
    pairing.complete_pairing(rng);
    Pseudograph g = Pseudograph::from_pairing(pairing);
    if (g.is_simple()) return g;
  }
  throw std::runtime_error("failed to sample a simple regular graph within the attempt budget");
}

Pseudograph read_edge_list(std::istream& in) {
  int n = 0;
  std::int64_t m = 0;
  if (!(in >> n >> m)) throw std::runtime_error("edge list: missing \"n m\" header");
  if (n < 1 || m < 0) throw std::runtime_error("edge list: invalid header values");
  Pseudograph g(n);
  for (std::int64_t i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw std::runtime_error("edge list: truncated edge listing");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::runtime_error("edge list: endpoint out of range");
    g.add_edge(u, v);
  }
  return g;
}

Pseudograph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Pseudograph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace tdom
