#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "tdom/graph.hpp"
#include "tdom/heuristics.hpp"
#include "tdom/rng.hpp"

using namespace tdom;

namespace {

// Invariants every run must satisfy, checked from the recorded trace.
void check_trace_invariants(const RunTrace& trace) {
  const int d = trace.d;
  REQUIRE(!trace.y_rows.empty());
  REQUIRE(trace.y_rows.size() ==
          (trace.round_count() + 1) * static_cast<std::size_t>(d));

  const std::vector<std::int64_t> sizes = trace.set_sizes_before_rounds();
  CHECK(sizes.front() == 0);
  CHECK(sizes.back() == trace.final_set_size - trace.cleanup_added);

  for (std::size_t t = 0; t < trace.round_count(); ++t) {
    const RoundRecord& rec = trace.rounds[t];
    CHECK(rec.added >= 1);
    CHECK(rec.added <= 2);
    CHECK(sizes[t + 1] - sizes[t] == rec.added);
    CHECK(rec.pairs_exposed <= 4 * d - 3);

    CHECK(trace.y_at(t + 1, 0) <= trace.y_at(t, 0));  // never re-uncovers
    for (int j = 0; j < d; ++j)
      CHECK(std::llabs(trace.y_at(t + 1, j) - trace.y_at(t, j)) <= 4 * d);
  }
}

void check_verified_set(const Pseudograph& g, const std::vector<int>& set) {
  CHECK(std::is_sorted(set.begin(), set.end()));
  CHECK(verify_tds(g, set).is_tds);
}

double mean_ratio_1c(int n, int d, std::uint64_t seed) {
  HeuristicConfig cfg;
  cfg.seed = seed;
  cfg.record_y = false;
  const PairingRunResult r = run_algorithm_1c(n, d, cfg);
  return static_cast<double>(r.trace.final_set_size) / n;
}

}  // namespace

TEST_SUITE("heuristics") {

TEST_CASE("refined pairing run produces a verified set with a sane trace") {
  HeuristicConfig cfg;
  cfg.seed = 7;
  const PairingRunResult r = run_algorithm_1c(500, 3, cfg);
  CHECK(r.trace.n == 500);
  CHECK(r.trace.d == 3);
  CHECK(static_cast<std::int64_t>(r.dominating_set.size()) == r.trace.final_set_size);
  check_verified_set(r.graph, r.dominating_set);
  check_trace_invariants(r.trace);

  // Full runs never leave anything for the repair pass: every vertex whose
  // bucket was touched is adjacent to something placed in the set.
  CHECK(r.trace.y_at(r.trace.round_count(), 0) == 0);
  CHECK(r.trace.cleanup_added == 0);
}

TEST_CASE("first round of an untouched pairing pairs two uncovered vertices") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
    HeuristicConfig cfg;
    cfg.seed = seed;
    cfg.max_rounds = 1;
    const PairingRunResult r = run_algorithm_1c(2000, 3, cfg);
    REQUIRE(r.trace.round_count() == 1);
    CHECK(r.trace.rounds[0].branch == Branch::PairU);
  }
}

TEST_CASE("early rounds are overwhelmingly the two-uncovered branch") {
  // The branch distribution at the start concentrates on PairU; measured over
  // the first sqrt(n) rounds at n = 10^6 (smaller n leaves visible drift away
  // from the t = 0 limit).
  HeuristicConfig cfg;
  cfg.seed = 2026;
  cfg.max_rounds = 1000;
  cfg.record_y = false;
  const PairingRunResult r = run_algorithm_1c(1000000, 3, cfg);
  REQUIRE(r.trace.round_count() == 1000);
  int pair_u = 0;
  for (const RoundRecord& rec : r.trace.rounds)
    if (rec.branch == Branch::PairU) ++pair_u;
  CHECK(pair_u >= 990);
  check_verified_set(r.graph, r.dominating_set);
}

TEST_CASE("early-exit threshold bounds the repair additions") {
  HeuristicConfig cfg;
  cfg.seed = 5;
  cfg.eps_alg = 0.01;
  const int n = 100000;
  const PairingRunResult r = run_algorithm_1c(n, 5, cfg);
  const std::int64_t uncovered_at_exit = r.trace.y_at(r.trace.round_count(), 0);
  CHECK(uncovered_at_exit > 0);
  CHECK(uncovered_at_exit < static_cast<std::int64_t>(0.01 * n));
  CHECK(r.trace.cleanup_added <= 2 * uncovered_at_exit);
  CHECK(r.trace.cleanup_added <= static_cast<std::int64_t>(2 * 0.01 * n));
  check_verified_set(r.graph, r.dominating_set);
}

TEST_CASE("round cap stops the loop but still returns a verified set") {
  HeuristicConfig cfg;
  cfg.seed = 9;
  cfg.max_rounds = 5;
  const PairingRunResult r = run_algorithm_1c(1000, 3, cfg);
  CHECK(r.trace.round_count() == 5);
  CHECK(r.trace.cleanup_added > 0);  // most of the graph was never touched
  check_verified_set(r.graph, r.dominating_set);
}

TEST_CASE("identical seeds reproduce the run exactly") {
  HeuristicConfig cfg;
  cfg.seed = 1234;
  const PairingRunResult a = run_algorithm_1c(600, 4, cfg);
  const PairingRunResult b = run_algorithm_1c(600, 4, cfg);
  CHECK(a.dominating_set == b.dominating_set);
  CHECK(a.trace.y_rows == b.trace.y_rows);

  cfg.seed = 1235;
  const PairingRunResult c = run_algorithm_1c(600, 4, cfg);
  CHECK(a.dominating_set != c.dominating_set);
}

TEST_CASE("input validation") {
  HeuristicConfig cfg;
  CHECK_THROWS_AS(run_algorithm_1c(12, 3, cfg), std::invalid_argument);  // n <= 4d
  CHECK_THROWS_AS(run_algorithm_1c(15, 3, cfg), std::invalid_argument);  // n*d odd
  HeuristicConfig bad_eps;
  bad_eps.eps_alg = 1.0;
  CHECK_THROWS_AS(run_algorithm_1c(100, 3, bad_eps), std::invalid_argument);
  bad_eps.eps_alg = -0.1;
  CHECK_THROWS_AS(run_algorithm_1c(100, 3, bad_eps), std::invalid_argument);
}

TEST_CASE("explicit-graph variant runs on a sampled simple regular graph") {
  Rng rng(77);
  const Pseudograph g = sample_simple_regular(200, 3, rng);
  HeuristicConfig cfg;
  cfg.seed = 13;
  const GraphRunResult r = run_algorithm_1l(g, cfg);
  check_verified_set(g, r.dominating_set);
  check_trace_invariants(r.trace);
  CHECK(r.trace.cleanup_added == 0);

  const GraphRunResult again = run_algorithm_1l(g, cfg);
  CHECK(again.dominating_set == r.dominating_set);
}

TEST_CASE("explicit-graph variant requires a regular graph") {
  HeuristicConfig cfg;
  CHECK_THROWS_AS(run_algorithm_1l(complete_bipartite(2, 3), cfg), std::invalid_argument);
  CHECK_THROWS_AS(run_algorithm_1l(cycle_graph(10), cfg), std::invalid_argument);  // d = 2
}

TEST_CASE("explicit-graph variant handles a small named graph") {
  HeuristicConfig cfg;
  cfg.seed = 3;
  const GraphRunResult r = run_algorithm_1l(petersen_graph(), cfg);
  check_verified_set(petersen_graph(), r.dominating_set);
  CHECK(static_cast<int>(r.dominating_set.size()) >= 4);  // exact optimum is 4
}

TEST_CASE("baseline uses only the two simple branches and needs no repair") {
  HeuristicConfig cfg;
  cfg.seed = 21;
  const PairingRunResult r = run_baseline_pairing(2000, 4, cfg);
  check_verified_set(r.graph, r.dominating_set);
  check_trace_invariants(r.trace);
  CHECK(r.trace.cleanup_added == 0);
  for (const RoundRecord& rec : r.trace.rounds) {
    const bool simple_branch =
        rec.branch == Branch::Single || rec.branch == Branch::PairU;
    CHECK(simple_branch);
  }
}

TEST_CASE("baseline on an explicit graph") {
  Rng rng(55);
  const Pseudograph g = sample_simple_regular(200, 3, rng);
  HeuristicConfig cfg;
  cfg.seed = 14;
  const GraphRunResult r = run_baseline_graph(g, cfg);
  check_verified_set(g, r.dominating_set);
  for (const RoundRecord& rec : r.trace.rounds) {
    const bool simple_branch =
        rec.branch == Branch::Single || rec.branch == Branch::PairU;
    CHECK(simple_branch);
  }
}

TEST_CASE("refined branches beat the baseline on matched seeds") {
  const int n = 20000, d = 5;
  double refined = 0.0, baseline = 0.0;
  const int seeds = 3;
  for (int i = 0; i < seeds; ++i) {
    HeuristicConfig cfg;
    cfg.seed = 100 + static_cast<std::uint64_t>(i);
    cfg.record_y = false;
    refined += static_cast<double>(run_algorithm_1c(n, d, cfg).trace.final_set_size);
    baseline += static_cast<double>(run_baseline_pairing(n, d, cfg).trace.final_set_size);
  }
  refined /= seeds * static_cast<double>(n);
  baseline /= seeds * static_cast<double>(n);
  MESSAGE("mean |D|/n refined = " << refined << ", baseline = " << baseline
                                  << ", gap = " << baseline - refined);
  CHECK(baseline > refined);
}

TEST_CASE("pairing and explicit-graph variants agree within 2 standard errors") {
  const int n = 20000, d = 3, trials = 20;
  std::vector<double> a, b;
  for (int i = 0; i < trials; ++i) {
    a.push_back(mean_ratio_1c(n, d, 500 + static_cast<std::uint64_t>(i)));

    Rng graph_rng(900 + static_cast<std::uint64_t>(i));
    const Pseudograph g = sample_simple_regular(n, d, graph_rng);
    HeuristicConfig cfg;
    cfg.seed = derive_stream_seed(900 + static_cast<std::uint64_t>(i), 1);
    cfg.record_y = false;
    const GraphRunResult r = run_algorithm_1l(g, cfg);
    b.push_back(static_cast<double>(r.trace.final_set_size) / n);
  }
  const auto mean = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
  };
  const auto variance = [&](const std::vector<double>& v, double m) {
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / static_cast<double>(v.size() - 1);
  };
  const double ma = mean(a), mb = mean(b);
  const double se = std::sqrt(variance(a, ma) / trials + variance(b, mb) / trials);
  MESSAGE("pairing mean = " << ma << ", graph mean = " << mb << ", combined SE = " << se);
  CHECK(std::fabs(ma - mb) <= 2.0 * se);
}

TEST_CASE("repair pass on hand-checked configurations") {
  Rng rng(1);

  // Already a total dominating set: nothing to do.
  {
    std::vector<char> in_set{1, 1, 0, 0};
    CHECK(cleanup_to_tds(cycle_graph(4), in_set, rng) == 0);
  }

  // One uncovered vertex whose (either) neighbor is already covered: exactly
  // one addition.
  {
    std::vector<char> in_set{1, 1, 1, 0, 0, 0};
    const Pseudograph g = cycle_graph(6);
    CHECK(cleanup_to_tds(g, in_set, rng) == 1);
    std::vector<int> set;
    for (int v = 0; v < 6; ++v)
      if (in_set[v]) set.push_back(v);
    CHECK(verify_tds(g, set).is_tds);
  }

  // From an empty set the pass builds a full total dominating set.
  {
    const Pseudograph g = cycle_graph(9);
    std::vector<char> in_set(9, 0);
    const std::int64_t added = cleanup_to_tds(g, in_set, rng);
    CHECK(added <= 2 * 9);
    std::vector<int> set;
    for (int v = 0; v < 9; ++v)
      if (in_set[v]) set.push_back(v);
    CHECK(verify_tds(g, set).is_tds);
  }

  // Isolated vertices make the problem infeasible.
  {
    Pseudograph g(2);
    g.add_edge(0, 0);
    std::vector<char> in_set(2, 0);
    CHECK_THROWS_AS(cleanup_to_tds(g, in_set, rng), std::runtime_error);
  }

  // Membership array must match the graph.
  {
    std::vector<char> in_set(3, 0);
    CHECK_THROWS_AS(cleanup_to_tds(cycle_graph(4), in_set, rng), std::invalid_argument);
  }
}

TEST_CASE("branch labels") {
  CHECK(std::string(to_string(Branch::Single)) == "SINGLE");
  CHECK(std::string(to_string(Branch::PairU)) == "PAIR_U");
  CHECK(std::string(to_string(Branch::PairW)) == "PAIR_W");
  CHECK(std::string(to_string(Branch::PairPrime)) == "PAIR_PRIME");
}

}  // TEST_SUITE
