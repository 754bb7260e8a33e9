#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "mcov/census.hpp"
#include "mcov/graph6.hpp"
#include "mcov/isomorphism.hpp"
#include "oracles.hpp"

using namespace mcov;

TEST_CASE("census counts match the known enumeration") {
  // connected cubic graphs: 1, 2, 5, 19, 85; with disconnected ones
  // included: 1, 2, 6, 21, 94
  const int connected[] = {1, 2, 5, 19, 85};
  const int all[] = {1, 2, 6, 21, 94};
  for (int i = 0; i < 5; ++i) {
    int n = 4 + 2 * i;
    CHECK(census::connected_cubic_graphs(n).size() ==
          static_cast<std::size_t>(connected[i]));
    CHECK(census::cubic_graphs(n).size() == static_cast<std::size_t>(all[i]));
  }
}

TEST_CASE("census agrees with the brute-force generator") {
  for (int n = 4; n <= 10; n += 2) {
    auto brute = oracles::connected_cubic_brute(n);
    auto fast = census::connected_cubic_graphs(n);
    REQUIRE(brute.size() == fast.size());
    std::set<std::string> brute_canon, fast_canon;
    for (const Graph& g : brute) brute_canon.insert(canonical_form(g));
    for (const Graph& g : fast) fast_canon.insert(canonical_form(g));
    CHECK(brute_canon == fast_canon);
  }
}

TEST_CASE("census output is deterministic and cubic") {
  auto a = census::connected_cubic_graphs(10);
  auto b = census::connected_cubic_graphs(10);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(to_graph6(a[i]) == to_graph6(b[i]));
    CHECK(a[i].is_cubic());
    CHECK(is_connected(a[i]));
  }
  // sorted by canonical form
  for (std::size_t i = 1; i < a.size(); ++i)
    CHECK(canonical_form(a[i - 1]) < canonical_form(a[i]));
}

TEST_CASE("edge insertion and reduction are inverse") {
  std::mt19937 rng(97);
  auto pool = census::connected_cubic_graphs(10);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph& parent = pool[rng() % pool.size()];
    const auto& es = parent.edges();
    std::size_t i = rng() % es.size();
    std::size_t j = rng() % es.size();
    if (i == j) continue;
    Graph child = census::edge_insertion(parent, es[i], es[j]);
    CHECK(child.is_cubic());
    Edge bridge(child.order() - 2, child.order() - 1);
    REQUIRE(child.has_edge(bridge));
    REQUIRE(census::reduction_admissible(child, bridge));
    // undo by hand: delete the two subdivision vertices, restore the edges
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < parent.order(); ++v) keep.push_back(v);
    Graph undone = induced_subgraph(child, keep);
    std::vector<Edge> restored = undone.edges();
    restored.push_back(es[i]);
    restored.push_back(es[j]);
    CHECK(is_isomorphic(Graph(parent.order(), restored), parent));
  }
}

TEST_CASE("irreducible seeds are exactly the reduction-free graphs") {
  // sizes of the irreducible family by order
  CHECK(census::irreducible_connected(4).size() == 1);
  CHECK(census::irreducible_connected(6).empty());
  CHECK(census::irreducible_connected(8).size() == 1);
  CHECK(census::irreducible_connected(10).empty());
  CHECK(census::irreducible_connected(12).size() == 1);
  CHECK(census::irreducible_connected(14).size() == 2);
  CHECK(census::irreducible_connected(16).size() == 1);

  for (int n = 4; n <= 14; n += 2)
    for (const Graph& g : census::irreducible_connected(n)) {
      CHECK(g.is_cubic());
      CHECK(is_connected(g));
      CHECK_FALSE(census::has_admissible_reduction(g));
    }

  // completeness against the census: reduction-free graphs are exactly the
  // enumerated seeds
  for (int n = 4; n <= 12; n += 2) {
    std::set<std::string> seeds;
    for (const Graph& g : census::irreducible_connected(n))
      seeds.insert(canonical_form(g));
    for (const Graph& g : census::connected_cubic_graphs(n)) {
      bool reducible = census::has_admissible_reduction(g);
      CHECK(reducible == (seeds.count(canonical_form(g)) == 0));
    }
  }
}

TEST_CASE("graph6 ingestion round-trips the census") {
  std::ostringstream sink;
  sink << ">>graph6<<\n";
  auto graphs = census::connected_cubic_graphs(8);
  for (const Graph& g : graphs) sink << to_graph6(g) << "\n";
  std::istringstream source(sink.str());
  auto read_back = read_graph6_stream(source);
  REQUIRE(read_back.size() == graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    CHECK(read_back[i].graph.edges() == graphs[i].edges());
    CHECK(read_back[i].line == static_cast<long>(i + 2));
  }
}
