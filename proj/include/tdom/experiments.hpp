#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tdom/heuristics.hpp"
#include "tdom/ode.hpp"

namespace tdom {

enum class Variant { Alg1c, Alg1l, Baseline };

// Accepts "1c", "1l", "baseline"; throws std::invalid_argument otherwise.
Variant parse_variant(const std::string& name);
const char* to_string(Variant v);

struct SimParams {
  int d = 5;
  std::int64_t n = 100000;
  int trials = 10;
  std::uint64_t seed = 1;
  Variant variant = Variant::Alg1c;
  double eps_alg = 0.0;
  int threads = 0;          // 0 = hardware concurrency
  bool keep_traces = false; // retain per-trial traces (needed for trace CSVs)
};

struct TrialSummary {
  int index = 0;
  std::uint64_t seed = 0;
  std::int64_t set_size = 0;
  double ratio = 0.0;  // set_size / n
  std::int64_t rounds = 0;
  std::int64_t cleanup_added = 0;
  bool verified = false;
  double seconds = 0.0;
};

struct ExperimentReport {
  SimParams params;
  std::vector<TrialSummary> trials;
  double mean_ratio = 0.0;
  double sd_ratio = 0.0;  // sample standard deviation
  // ODE reference, when one was supplied.
  std::optional<double> ode_q;
  std::optional<double> ode_x_star;
  std::vector<RunTrace> traces;  // aligned with trials when keep_traces

  std::string to_json() const;  // deterministic for fixed inputs
};

// Run `trials` independent seeded trials of the selected variant (trial i
// uses derive_stream_seed(seed, i)), concurrently up to the thread budget.
// Every output is verified by construction; aggregation is ordered by trial
// index so reports do not depend on scheduling. Pass the solved ODE reference
// to include the q(x*) comparison.
ExperimentReport run_simulation(const SimParams& params, const SolveResult* reference);

struct CompareReport {
  int d = 0;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::int64_t stride = 0;            // rounds between samples
  std::vector<double> sup_dev;        // per class j: max_t |Y_j(t)/n - z_j(t/n)|
  double sup_dev_overall = 0.0;
  double sim_ratio = 0.0;             // final |D|/n of the simulated trial
  double ode_q = 0.0;

  std::string to_json() const;
};

// One trial of the refined heuristic whose sampled class fractions are
// compared against the interpolated ODE solution at stride max(1, n/1000).
CompareReport run_compare(int d, std::int64_t n, std::uint64_t seed,
                          const SolveResult& reference);

struct TableRow {
  int d = 0;
  double x_star = 0.0;
  double q = 0.0;
  double rounded_up = 0.0;              // q rounded up at the 4th decimal
  std::optional<double> reference;      // published value, when known
  bool pass = false;                    // only meaningful with a reference
};

// Round up at the fourth decimal place.
double round_up_4dp(double q);

// Published upper-bound values for the degrees with known references.
std::optional<double> reference_upper_bound(int d);

// A computed q matches a published 4-decimal value v when it lies within
// 1e-4 of v's round-up preimage (v - 1e-4, v], i.e. q in [v - 2e-4, v + 1e-4].
bool matches_reference(double q, double reference);

std::vector<TableRow> table_one(const std::vector<int>& ds,
                                const IntegrateOptions& opts = {});

// Per-trial seed derivation, shared by all runners.
std::uint64_t trial_seed(std::uint64_t master, int index);

// 16-hex-digit FNV-1a hash of a canonical parameter string (artifact naming).
std::string params_hash(const std::string& canonical);

// CSV exports. Trace: t, Y_0..Y_{d-1}, Q, branch (Q = set size before round
// t; the final row carries the loop-exit state with branch "end").
void write_trace_csv(std::ostream& out, const RunTrace& trace);
// Trajectory: x, z_0..z_{d-1}, q.
void write_trajectory_csv(std::ostream& out, const SolveResult& result);

}  // namespace tdom
