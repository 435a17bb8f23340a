#include "tdom/heuristics.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdom {

const char* to_string(Branch b) {
  switch (b) {
    case Branch::Single: return "SINGLE";
    case Branch::PairU: return "PAIR_U";
    case Branch::PairW: return "PAIR_W";
    case Branch::PairPrime: return "PAIR_PRIME";
  }
  return "?";
}

std::vector<std::int64_t> RunTrace::set_sizes_before_rounds() const {
  std::vector<std::int64_t> sizes(rounds.size() + 1);
  std::int64_t total = 0;
  for (std::size_t t = 0; t < rounds.size(); ++t) {
    sizes[t] = total;
    total += rounds[t].added;
  }
  sizes[rounds.size()] = total;
  return sizes;
}

namespace {

void check_config(const HeuristicConfig& cfg) {
  if (cfg.eps_alg < 0.0 || cfg.eps_alg >= 1.0)
    throw std::invalid_argument("eps_alg must lie in [0, 1)");
}

// First-occurrence-order unique values of src, excluding one vertex and
// filtered by pred. Candidate lists have at most 3(d-1) entries, so linear
// dedup is fine.
template <class Pred>
void unique_candidates(const std::vector<int>& src, int exclude, Pred pred,
                       std::vector<int>& out) {
  out.clear();
  for (int b : src) {
    if (b == exclude || !pred(b)) continue;
    if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
  }
}

// ---------------------------------------------------------------------------
// Pairing-side machinery shared by the refined and baseline runners.
// ---------------------------------------------------------------------------

// Wraps a PairingState with per-round bookkeeping: lazily captured
// round-start degree snapshots (so degree tests are unaffected by the
// round's own exposures) and counters for the trace.
struct PairingRound {
  PairingState& state;
  Rng& rng;
  std::vector<std::int32_t> stamp;  // round index of the captured snapshot
  std::vector<int> snapshot;        // paired count at round start
  std::int32_t round = -1;
  int touched = 0;
  int pairs = 0;

  PairingRound(PairingState& s, Rng& r)
      : state(s), rng(r), stamp(s.n(), -1), snapshot(s.n(), 0) {}

  void begin(std::int32_t t) {
    round = t;
    touched = 0;
    pairs = 0;
  }

  void capture(int bucket, int value) {
    if (stamp[bucket] != round) {
      stamp[bucket] = round;
      snapshot[bucket] = value;
      ++touched;
    }
  }

  // Degree (paired count) at the start of the current round. Buckets are
  // stamped on their first exposure of the round, so an unstamped bucket's
  // live count is still its round-start value.
  int start_degree(int bucket) const {
    return stamp[bucket] == round ? snapshot[bucket] : state.paired_count(bucket);
  }

  int expose_from(int bucket) {
    capture(bucket, state.paired_count(bucket));
    const ExposeOutcome out = state.expose_pair(state.some_unpaired_point(bucket), rng);
    capture(out.partner_bucket, out.partner_paired_before);
    ++pairs;
    return out.partner_bucket;
  }

  void expose_all(int bucket, std::vector<int>* partners) {
    while (!state.bucket_full(bucket)) {
      const int partner = expose_from(bucket);
      if (partners) partners->push_back(partner);
    }
  }
};

void append_y_row(RunTrace& trace, const std::vector<std::int64_t>& y) {
  trace.y_rows.insert(trace.y_rows.end(), y.begin(), y.end());
}

// Shared main-loop shell for the pairing-based variants; `play_round` does
// one round and returns the record.
template <class RoundFn>
PairingRunResult run_pairing_process(int n, int d, const HeuristicConfig& cfg,
                                     RoundFn play_round) {
  check_config(cfg);
  if (n <= 4 * d) throw std::invalid_argument("n must exceed 4d");
  PairingState state(n, d);
  Rng rng(cfg.seed);
  std::vector<char> in_set(n, 0);
  std::int64_t set_size = 0;

  RunTrace trace;
  trace.n = n;
  trace.d = d;

  PairingRound round(state, rng);
  const double threshold = cfg.eps_alg * static_cast<double>(n);
  std::int32_t t = 0;
  while (state.degree0_count() > 0 &&
         static_cast<double>(state.degree0_count()) >= threshold &&
         (cfg.max_rounds < 0 || t < cfg.max_rounds)) {
    if (cfg.record_y) append_y_row(trace, state.degree_histogram());
    round.begin(t);
    trace.rounds.push_back(play_round(round, in_set, set_size));
    ++t;
  }
  if (cfg.record_y) append_y_row(trace, state.degree_histogram());

  state.complete_pairing(rng);
  Pseudograph graph = Pseudograph::from_pairing(state);
  trace.cleanup_added = cleanup_to_tds(graph, in_set, rng);
  set_size += trace.cleanup_added;
  trace.final_set_size = set_size;

  std::vector<int> dominating_set;
  dominating_set.reserve(static_cast<std::size_t>(set_size));
  for (int v = 0; v < n; ++v) {
    if (in_set[v]) dominating_set.push_back(v);
  }
  const TdsVerdict verdict = verify_tds(graph, dominating_set);
  if (!verdict.is_tds)
    throw std::logic_error("internal invariant violated: output is not a total dominating set");
  return {std::move(graph), std::move(dominating_set), std::move(trace)};
}

std::uint8_t add_vertex(std::vector<char>& in_set, std::int64_t& set_size, int v) {
  if (in_set[v]) return 0;
  in_set[v] = 1;
  ++set_size;
  return 1;
}

}  // namespace

PairingRunResult run_algorithm_1c(int n, int d, const HeuristicConfig& cfg) {
  // Scratch buffers shared across rounds.
  std::vector<int> partners_u, partners_v, candidates;

  return run_pairing_process(n, d, cfg, [&](PairingRound& round, std::vector<char>& in_set,
                                            std::int64_t& set_size) -> RoundRecord {
    PairingState& st = round.state;
    const int v = *st.sample_degree0_vertex(round.rng);
    round.capture(v, 0);  // selected among degree-0 buckets
    const int u = round.expose_from(v);
    partners_u.clear();
    round.expose_all(u, &partners_u);

    std::uint8_t added = 0;
    Branch branch;
    if (round.start_degree(u) != 0) {
      added += add_vertex(in_set, set_size, u);
      branch = Branch::Single;
    } else {
      partners_v.clear();
      round.expose_all(v, &partners_v);
      bool u_has_uncovered_partner = false;
      for (int b : partners_u) {
        if (b != v && round.start_degree(b) == 0) {
          u_has_uncovered_partner = true;
          break;
        }
      }
      if (u_has_uncovered_partner) {
        added += add_vertex(in_set, set_size, v);
        added += add_vertex(in_set, set_size, u);
        branch = Branch::PairU;
      } else {
        unique_candidates(partners_v, u,
                          [&](int b) { return round.start_degree(b) == 0; }, candidates);
        if (!candidates.empty()) {
          const int w = candidates[uniform_below(round.rng, candidates.size())];
          if (!st.bucket_full(w)) round.expose_all(w, nullptr);
          added += add_vertex(in_set, set_size, v);
          added += add_vertex(in_set, set_size, w);
          branch = Branch::PairW;
        } else {
          // Both v and u are surrounded by partially covered vertices: add
          // one partner of each (covering v and u respectively). A partner
          // list can be empty only in freak multi-edge collisions; cleanup
          // repairs those.
          unique_candidates(partners_v, u, [](int) { return true; }, candidates);
          if (!candidates.empty()) {
            const int v_prime = candidates[uniform_below(round.rng, candidates.size())];
            if (!st.bucket_full(v_prime)) round.expose_all(v_prime, nullptr);
            added += add_vertex(in_set, set_size, v_prime);
          }
          unique_candidates(partners_u, v, [](int) { return true; }, candidates);
          if (!candidates.empty()) {
            const int u_prime = candidates[uniform_below(round.rng, candidates.size())];
            if (!st.bucket_full(u_prime)) round.expose_all(u_prime, nullptr);
            added += add_vertex(in_set, set_size, u_prime);
          }
          branch = Branch::PairPrime;
        }
      }
    }
    return {branch, added, static_cast<std::uint16_t>(round.pairs),
            static_cast<std::uint16_t>(round.touched)};
  });
}

PairingRunResult run_baseline_pairing(int n, int d, const HeuristicConfig& cfg) {
  return run_pairing_process(n, d, cfg, [](PairingRound& round, std::vector<char>& in_set,
                                           std::int64_t& set_size) -> RoundRecord {
    PairingState& st = round.state;
    const int v = *st.sample_degree0_vertex(round.rng);
    round.capture(v, 0);
    const int u = round.expose_from(v);
    round.expose_all(u, nullptr);

    std::uint8_t added = 0;
    Branch branch;
    if (round.start_degree(u) == 0) {
      round.expose_all(v, nullptr);
      added += add_vertex(in_set, set_size, v);
      added += add_vertex(in_set, set_size, u);
      branch = Branch::PairU;
    } else {
      added += add_vertex(in_set, set_size, u);
      branch = Branch::Single;
    }
    return {branch, added, static_cast<std::uint16_t>(round.pairs),
            static_cast<std::uint16_t>(round.touched)};
  });
}

// ---------------------------------------------------------------------------
// Explicit-graph runners. "Uncovered" = current degree still d. Choices read
// the live state, deletions are deferred to the end of the round, so every
// test sees the round-start graph.
// ---------------------------------------------------------------------------

namespace {

struct SurvivalState {
  const Pseudograph& g;
  int d;
  std::vector<char> alive;
  std::vector<int> deg;       // current degree among surviving vertices
  std::vector<int> full;      // dense list of vertices with deg == d
  std::vector<int> full_pos;  // -1 when absent
  std::vector<std::int64_t> y;  // y[j] = #alive with deg == d-j, j in 0..d-1
  std::vector<std::int32_t> mark_stamp;
  std::int32_t round = -1;
  int touched = 0;
  std::int64_t edges_removed = 0;

  SurvivalState(const Pseudograph& graph, int degree)
      : g(graph),
        d(degree),
        alive(graph.vertex_count(), 1),
        deg(graph.vertex_count(), degree),
        full(graph.vertex_count()),
        full_pos(graph.vertex_count()),
        y(degree, 0),
        mark_stamp(graph.vertex_count(), -1) {
    for (int v = 0; v < graph.vertex_count(); ++v) full[v] = full_pos[v] = v;
    y[0] = graph.vertex_count();
  }

  void begin(std::int32_t t) {
    round = t;
    touched = 0;
    edges_removed = 0;
  }

  void mark(int v) {
    if (mark_stamp[v] != round) {
      mark_stamp[v] = round;
      ++touched;
    }
  }

  bool uncovered(int v) const { return deg[v] == d; }  // implies alive

  void remove_full(int v) {
    const int idx = full_pos[v];
    if (idx < 0) return;
    const int last = full.back();
    full[idx] = last;
    full_pos[last] = idx;
    full.pop_back();
    full_pos[v] = -1;
  }

  void delete_vertex(int v) {
    if (!alive[v]) return;  // collision double-delete
    alive[v] = 0;
    mark(v);
    if (deg[v] >= 1) --y[d - deg[v]];
    remove_full(v);
    int self_entries = 0;
    for (int w : g.adj(v)) {
      if (w == v) {
        ++self_entries;
        continue;
      }
      if (!alive[w]) continue;  // that edge is already gone
      ++edges_removed;
      mark(w);
      const int old = deg[w];
      if (old == d) remove_full(w);
      --y[d - old];
      deg[w] = old - 1;
      if (deg[w] >= 1) ++y[d - deg[w]];
    }
    edges_removed += self_entries / 2;  // each loop at v is one edge
    deg[v] = 0;
  }
};

template <class RoundFn>
GraphRunResult run_graph_process(const Pseudograph& g, const HeuristicConfig& cfg,
                                 RoundFn play_round) {
  check_config(cfg);
  const std::optional<int> reg = g.regular_degree();
  if (!reg || *reg < 3)
    throw std::invalid_argument("graph must be d-regular with d >= 3");
  const int d = *reg;
  const int n = g.vertex_count();

  SurvivalState state(g, d);
  Rng rng(cfg.seed);
  std::vector<char> in_set(n, 0);
  std::int64_t set_size = 0;

  RunTrace trace;
  trace.n = n;
  trace.d = d;

  const double threshold = cfg.eps_alg * static_cast<double>(n);
  std::int32_t t = 0;
  while (!state.full.empty() &&
         static_cast<double>(state.full.size()) >= threshold &&
         (cfg.max_rounds < 0 || t < cfg.max_rounds)) {
    if (cfg.record_y) append_y_row(trace, state.y);
    state.begin(t);
    trace.rounds.push_back(play_round(state, rng, in_set, set_size));
    ++t;
  }
  if (cfg.record_y) append_y_row(trace, state.y);

  trace.cleanup_added = cleanup_to_tds(g, in_set, rng);
  set_size += trace.cleanup_added;
  trace.final_set_size = set_size;

  std::vector<int> dominating_set;
  dominating_set.reserve(static_cast<std::size_t>(set_size));
  for (int v = 0; v < n; ++v) {
    if (in_set[v]) dominating_set.push_back(v);
  }
  const TdsVerdict verdict = verify_tds(g, dominating_set);
  if (!verdict.is_tds)
    throw std::logic_error("internal invariant violated: output is not a total dominating set");
  return {std::move(dominating_set), std::move(trace)};
}

}  // namespace

GraphRunResult run_algorithm_1l(const Pseudograph& g, const HeuristicConfig& cfg) {
  std::vector<int> candidates;
  std::vector<int> deletions;

  return run_graph_process(g, cfg, [&](SurvivalState& state, Rng& rng,
                                       std::vector<char>& in_set,
                                       std::int64_t& set_size) -> RoundRecord {
    deletions.clear();
    const int v = state.full[uniform_below(rng, state.full.size())];
    // v is uncovered, so all d incident edges survive; a uniform adjacency
    // entry is a uniform surviving edge (a loop shows up twice = two edge
    // slots).
    const int u = state.g.adj(v)[uniform_below(rng, state.g.adj(v).size())];

    std::uint8_t added = 0;
    Branch branch;
    if (!state.uncovered(u)) {
      added += add_vertex(in_set, set_size, u);
      deletions.push_back(u);
      branch = Branch::Single;
    } else {
      bool u_has_uncovered_neighbor = false;
      for (int b : state.g.adj(u)) {
        if (b != v && state.uncovered(b)) {
          u_has_uncovered_neighbor = true;
          break;
        }
      }
      if (u_has_uncovered_neighbor) {
        added += add_vertex(in_set, set_size, v);
        added += add_vertex(in_set, set_size, u);
        deletions.push_back(u);
        deletions.push_back(v);
        branch = Branch::PairU;
      } else {
        unique_candidates(state.g.adj(v), u,
                          [&](int b) { return state.uncovered(b); }, candidates);
        if (!candidates.empty()) {
          const int w = candidates[uniform_below(rng, candidates.size())];
          added += add_vertex(in_set, set_size, v);
          added += add_vertex(in_set, set_size, w);
          deletions.push_back(w);
          deletions.push_back(v);
          deletions.push_back(u);
          branch = Branch::PairW;
        } else {
          deletions.push_back(u);
          deletions.push_back(v);
          unique_candidates(state.g.adj(v), u, [](int) { return true; }, candidates);
          if (!candidates.empty()) {
            const int v_prime = candidates[uniform_below(rng, candidates.size())];
            added += add_vertex(in_set, set_size, v_prime);
            deletions.push_back(v_prime);
          }
          unique_candidates(state.g.adj(u), v, [](int) { return true; }, candidates);
          if (!candidates.empty()) {
            const int u_prime = candidates[uniform_below(rng, candidates.size())];
            added += add_vertex(in_set, set_size, u_prime);
            deletions.push_back(u_prime);
          }
          branch = Branch::PairPrime;
        }
      }
    }
    for (int x : deletions) state.delete_vertex(x);
    return {branch, added, static_cast<std::uint16_t>(state.edges_removed),
            static_cast<std::uint16_t>(state.touched)};
  });
}

GraphRunResult run_baseline_graph(const Pseudograph& g, const HeuristicConfig& cfg) {
  return run_graph_process(g, cfg, [](SurvivalState& state, Rng& rng,
                                      std::vector<char>& in_set,
                                      std::int64_t& set_size) -> RoundRecord {
    const int v = state.full[uniform_below(rng, state.full.size())];
    const int u = state.g.adj(v)[uniform_below(rng, state.g.adj(v).size())];

    std::uint8_t added = 0;
    Branch branch;
    if (state.uncovered(u)) {
      added += add_vertex(in_set, set_size, v);
      added += add_vertex(in_set, set_size, u);
      state.delete_vertex(u);
      state.delete_vertex(v);
      branch = Branch::PairU;
    } else {
      added += add_vertex(in_set, set_size, u);
      state.delete_vertex(u);
      branch = Branch::Single;
    }
    return {branch, added, static_cast<std::uint16_t>(state.edges_removed),
            static_cast<std::uint16_t>(state.touched)};
  });
}

std::int64_t cleanup_to_tds(const Pseudograph& g, std::vector<char>& in_set, Rng& rng) {
  if (static_cast<int>(in_set.size()) != g.vertex_count())
    throw std::invalid_argument("membership array size must match the graph");
  const auto covered = [&](int v) {
    for (int w : g.adj(v)) {
      if (in_set[w]) return true;
    }
    return false;
  };
  std::int64_t added = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (covered(v)) continue;
    const auto& nb = g.adj(v);
    if (nb.empty())
      throw std::runtime_error("no total dominating set exists (isolated vertex)");
    const int w = nb[uniform_below(rng, nb.size())];
    if (!in_set[w]) {
      in_set[w] = 1;
      ++added;
    }
    if (!covered(w)) {
      const auto& nb2 = g.adj(w);
      const int z = nb2[uniform_below(rng, nb2.size())];
      if (!in_set[z]) {
        in_set[z] = 1;
        ++added;
      }
    }
  }
  return added;
}

}  // namespace tdom
