#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tdom/graph.hpp"
#include "tdom/pairing.hpp"
#include "tdom/rng.hpp"

namespace tdom {

// Which rule fired in a round of the deletion heuristic.
//
//   Single    — the matched partner u was already partially covered; only u
//               is deleted and added to the set.
//   PairU     — u has another uncovered neighbor, so {v, u} are added.
//   PairW     — v has another uncovered neighbor w; {v, w} are added.
//   PairPrime — no uncovered neighbors besides each other; one neighbor of v
//               and one of u are added instead.
//
// The simple baseline uses only Single (one added) and PairU (two added).
enum class Branch : std::uint8_t { Single, PairU, PairW, PairPrime };

const char* to_string(Branch b);

struct RoundRecord {
  Branch branch;
  std::uint8_t added;           // vertices newly added to the set this round
  std::uint16_t pairs_exposed;  // pairs exposed (edges consumed) this round
  std::uint16_t touched;        // buckets whose degree class changed this round
};

// Full history of one heuristic run.
struct RunTrace {
  int n = 0;
  int d = 0;
  std::vector<RoundRecord> rounds;
  // Degree histogram at the start of each round, row-major with d entries per
  // row; one extra final row holds the state at loop exit. Empty when
  // recording was disabled.
  std::vector<std::int64_t> y_rows;
  std::int64_t cleanup_added = 0;
  std::int64_t final_set_size = 0;  // cleanup included

  std::size_t round_count() const { return rounds.size(); }
  std::int64_t y_at(std::size_t row, int j) const {
    return y_rows[row * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)];
  }
  // |D| before each round (index t), plus a final entry with the pre-cleanup
  // total; monotone nondecreasing.
  std::vector<std::int64_t> set_sizes_before_rounds() const;
};

struct HeuristicConfig {
  // The main loop runs while the uncovered-vertex count is positive and at
  // least eps_alg * n; 0 means run until none remain.
  double eps_alg = 0.0;
  std::uint64_t seed = 0;
  std::int64_t max_rounds = -1;  // optional cap, -1 = unlimited
  bool record_y = true;          // disable to save memory on very large runs
};

struct PairingRunResult {
  Pseudograph graph;                // collapsed final pseudograph
  std::vector<int> dominating_set;  // sorted, cleanup included, verified
  RunTrace trace;
};

struct GraphRunResult {
  std::vector<int> dominating_set;
  RunTrace trace;
};

// Refined heuristic on a live pairing: each round picks a uniform uncovered
// bucket v, exposes one pair to find u, fully exposes u (and v when u was
// uncovered), and adds vertices according to the branch rules above. Degree
// tests always reference the state at the start of the round. Requires
// n > 4d and n*d even. The returned set always passes verify_tds (internal
// invariant; violation throws std::logic_error).
PairingRunResult run_algorithm_1c(int n, int d, const HeuristicConfig& cfg);

// The same heuristic on an explicit d-regular graph: "uncovered" = full
// current degree d, deletions are applied at the end of each round so all
// tests see the round-start state. Throws std::invalid_argument unless g is
// d-regular with d >= 3.
GraphRunResult run_algorithm_1l(const Pseudograph& g, const HeuristicConfig& cfg);

// Simple baseline: pick uncovered v, match one neighbor u; if u was also
// uncovered delete both and add both, otherwise delete and add u alone.
PairingRunResult run_baseline_pairing(int n, int d, const HeuristicConfig& cfg);
GraphRunResult run_baseline_graph(const Pseudograph& g, const HeuristicConfig& cfg);

// Post-loop repair: for every vertex still lacking a neighbor in the set, add
// one uniform neighbor, and if that neighbor is itself uncovered, one of its
// neighbors too. A single ordered pass reaches a fixpoint because coverage is
// monotone in the set. Returns the number of vertices added; at most twice
// the uncovered count on entry.
std::int64_t cleanup_to_tds(const Pseudograph& g, std::vector<char>& in_set, Rng& rng);

}  // namespace tdom
