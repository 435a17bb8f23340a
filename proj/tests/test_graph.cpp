#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "tdom/graph.hpp"
#include "tdom/pairing.hpp"

using namespace tdom;

namespace {

// Closed form for the cycle: floor(n/2), plus one unless n is divisible by 4.
int cycle_gamma_t(int n) { return n / 2 + (n % 4 != 0 ? 1 : 0); }

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("adjacency counts loops twice") {
  Pseudograph g(3);
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.degree(0) == 3);  // loop contributes 2
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(2) == 1);
  CHECK(g.adj(0) == std::vector<int>{0, 0, 1});
  CHECK(g.has_loop());
  CHECK_FALSE(g.is_simple());
  CHECK(g.regular_degree() == std::nullopt);
}

TEST_CASE("parallel edges break simplicity without a loop") {
  Pseudograph g(2);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK_FALSE(g.has_loop());
  CHECK_FALSE(g.is_simple());
  CHECK(g.regular_degree() == 2);
}

TEST_CASE("collapsing a completed pairing gives a d-regular pseudograph") {
  Rng rng(31);
  PairingState st(12, 3);
  st.complete_pairing(rng);
  const Pseudograph g = Pseudograph::from_pairing(st);
  CHECK(g.vertex_count() == 12);
  CHECK(g.edge_count() == 18);
  CHECK(g.regular_degree() == 3);

  PairingState partial(12, 3);
  partial.force_pair(0, 3);
  CHECK_THROWS_AS(Pseudograph::from_pairing(partial), std::invalid_argument);
}

TEST_CASE("verify_tds on hand-checked sets") {
  CHECK(verify_tds(cycle_graph(4), {0, 1}).is_tds);
  const TdsVerdict bad = verify_tds(cycle_graph(6), {0, 1, 2});
  CHECK_FALSE(bad.is_tds);
  CHECK(bad.witness == 4);

  // In a complete graph a single vertex dominates everyone else but itself.
  const TdsVerdict lone = verify_tds(complete_graph(4), {0});
  CHECK_FALSE(lone.is_tds);
  CHECK(lone.witness == 0);
  CHECK(verify_tds(complete_graph(4), {0, 1}).is_tds);

  // A looped vertex is its own neighbor.
  Pseudograph looped(2);
  looped.add_edge(0, 0);
  looped.add_edge(0, 1);
  CHECK(verify_tds(looped, {0}).is_tds);

  CHECK_FALSE(verify_tds(cycle_graph(4), {}).is_tds);
  CHECK_THROWS_AS(verify_tds(cycle_graph(4), {7}), std::out_of_range);
  CHECK_THROWS_AS(verify_tds(cycle_graph(4), {-1}), std::out_of_range);
}

TEST_CASE("exact minimum on cycles matches the closed form") {
  for (int n = 4; n <= 12; ++n) {
    const ExactResult r = brute_force_gamma_t(cycle_graph(n));
    CHECK(r.gamma_t == cycle_gamma_t(n));
    CHECK(static_cast<int>(r.witness_set.size()) == r.gamma_t);
    CHECK(verify_tds(cycle_graph(n), r.witness_set).is_tds);
  }
}

TEST_CASE("exact minimum on named small graphs") {
  for (int d : {3, 4, 5}) {
    CHECK(brute_force_gamma_t(complete_graph(d + 1)).gamma_t == 2);
    CHECK(brute_force_gamma_t(complete_bipartite(d, d)).gamma_t == 2);
  }
  const ExactResult pet = brute_force_gamma_t(petersen_graph());
  CHECK(pet.gamma_t == 4);
  CHECK(verify_tds(petersen_graph(), pet.witness_set).is_tds);

  // Two vertices joined by an edge: both must be picked.
  Pseudograph p2(2);
  p2.add_edge(0, 1);
  CHECK(brute_force_gamma_t(p2).gamma_t == 2);
}

TEST_CASE("exact solver rejects oversized and impossible instances") {
  CHECK_THROWS_AS(brute_force_gamma_t(cycle_graph(25)), std::invalid_argument);
  Pseudograph isolated(2);
  isolated.add_edge(0, 0);  // vertex 1 has no neighbor at all
  CHECK_THROWS_AS(brute_force_gamma_t(isolated), std::runtime_error);
}

TEST_CASE("girth of named graphs") {
  CHECK(girth(cycle_graph(5)) == 5);
  CHECK(girth(cycle_graph(12)) == 12);
  CHECK(girth(complete_graph(4)) == 3);
  CHECK(girth(complete_bipartite(3, 3)) == 4);
  CHECK(girth(petersen_graph()) == 5);

  Pseudograph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  CHECK(girth(path) == std::nullopt);

  Pseudograph looped(2);
  looped.add_edge(0, 0);
  looped.add_edge(0, 1);
  CHECK(girth(looped) == 1);

  Pseudograph doubled(3);
  doubled.add_edge(0, 1);
  doubled.add_edge(0, 1);
  doubled.add_edge(1, 2);
  CHECK(girth(doubled) == 2);
}

TEST_CASE("generators have the expected shape") {
  const Pseudograph pet = petersen_graph();
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.edge_count() == 15);
  CHECK(pet.regular_degree() == 3);
  CHECK(pet.is_simple());

  CHECK(cycle_graph(3).edge_count() == 3);
  CHECK(cycle_graph(3).regular_degree() == 2);
  CHECK(complete_graph(5).regular_degree() == 4);
  CHECK(complete_graph(5).edge_count() == 10);

  const Pseudograph kb = complete_bipartite(2, 3);
  CHECK(kb.vertex_count() == 5);
  CHECK(kb.edge_count() == 6);
  CHECK(kb.degree(0) == 3);
  CHECK(kb.degree(4) == 2);

  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(complete_graph(0), std::invalid_argument);
  CHECK_THROWS_AS(complete_bipartite(0, 2), std::invalid_argument);
}

TEST_CASE("rejection sampling yields a simple regular graph") {
  Rng rng(17);
  const Pseudograph g = sample_simple_regular(20, 3, rng);
  CHECK(g.vertex_count() == 20);
  CHECK(g.regular_degree() == 3);
  CHECK(g.is_simple());
}

TEST_CASE("edge-list round trip") {
  const Pseudograph pet = petersen_graph();
  std::stringstream buffer;
  write_edge_list(buffer, pet);
  const Pseudograph back = read_edge_list(buffer);
  CHECK(back.vertex_count() == pet.vertex_count());
  CHECK(back.edge_count() == pet.edge_count());
  for (int v = 0; v < 10; ++v) CHECK(back.degree(v) == pet.degree(v));
  CHECK(girth(back) == 5);
}

TEST_CASE("edge-list reader rejects malformed input") {
  const auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_edge_list(in), std::runtime_error);
  };
  reject("");
  reject("3\n");                 // missing edge count
  reject("2 1\n0 5\n");          // endpoint out of range
  reject("2 2\n0 1\n");          // fewer edges than promised
  reject("2 1\n0 x\n");          // non-numeric endpoint
  reject("-2 1\n0 1\n");         // negative vertex count

  std::istringstream ok("3 2\n0 1\n1 2\n");
  const Pseudograph g = read_edge_list(ok);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);

  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), std::runtime_error);
}

}  // TEST_SUITE
