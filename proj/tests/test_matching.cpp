#include <doctest.h>

#include <algorithm>
#include <random>

#include "mcov/census.hpp"
#include "mcov/constructions.hpp"
#include "mcov/matching.hpp"
#include "oracles.hpp"

using namespace mcov;

namespace {

Edge by_label(const Graph& g, const std::string& a, const std::string& b) {
  return Edge(*g.vertex_with_label(a), *g.vertex_with_label(b));
}

bool is_valid_matching(const Graph& g, const Matching& m) {
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    if (!g.has_edge(m.edges[i])) return false;
    for (std::size_t j = i + 1; j < m.edges.size(); ++j)
      if (m.edges[i].meets(m.edges[j])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("maximum matching on the reference graphs") {
  CHECK(maximum_matching(Graph::complete(4)).size() == 2);
  CHECK(maximum_matching(Graph::cycle(5)).size() == 2);
  CHECK(maximum_matching(oracles::petersen()).size() == 5);
  CHECK(maximum_matching(Graph(3, {})).size() == 0);
}

TEST_CASE("maximum matching agrees with enumeration and admits no augmenting path") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = oracles::random_graph(rng, n, 0.35);
    Matching m = maximum_matching(g);
    CHECK(is_valid_matching(g, m));
    CHECK(m.size() == oracles::max_matching_size_brute(g));
    CHECK_FALSE(oracles::has_augmenting_path(g, m.edges));
  }
}

TEST_CASE("maximum matching is deterministic") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracles::random_graph(rng, 12, 0.3);
    CHECK(maximum_matching(g).edges == maximum_matching(g).edges);
  }
}

TEST_CASE("Tutte-Berge consistency") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = oracles::random_graph(rng, n, 0.3);
    CHECK(maximum_matching(g).size() == oracles::tutte_berge_bound(g));
  }
  for (const Graph& g : census::connected_cubic_graphs(10))
    CHECK(maximum_matching(g).size() == oracles::tutte_berge_bound(g));
}

TEST_CASE("constrained perfect matchings") {
  Graph k4 = Graph::complete(4);
  auto m = perfect_matching_with(k4, {Edge(0, 1)}, {});
  REQUIRE(m.has_value());
  CHECK(m->size() == 2);
  CHECK(std::binary_search(m->edges.begin(), m->edges.end(), Edge(0, 1)));

  Graph s1 = staircase(1);
  CHECK_FALSE(perfect_matching_with(s1, {by_label(s1, "u1", "v1")},
                                    {by_label(s1, "u", "v")})
                  .has_value());
  CHECK_FALSE(perfect_matching_with(Graph::cycle(5), {}, {}).has_value());

  CHECK_THROWS_AS(perfect_matching_with(k4, {Edge(0, 1), Edge(1, 2)}, {}),
                  DomainError);
  CHECK_THROWS_AS(perfect_matching_with(k4, {Edge(0, 1)}, {Edge(0, 1)}),
                  DomainError);
  CHECK_THROWS_AS(perfect_matching_with(Graph::cycle(4), {Edge(0, 2)}, {}),
                  DomainError);
}

TEST_CASE("constrained queries respect their constraints on random graphs") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 * (2 + static_cast<int>(rng() % 4));
    Graph g = oracles::random_graph(rng, n, 0.45);
    if (g.size() < 2) continue;
    Edge f = g.edges()[rng() % g.edges().size()];
    Edge b = g.edges()[rng() % g.edges().size()];
    if (f == b) continue;
    std::optional<Matching> m;
    try {
      m = perfect_matching_with(g, {f}, {b});
    } catch (const DomainError&) {
      continue;
    }
    // oracle: any enumerated perfect matching with f and without b
    bool expected = false;
    for (const auto& pm : oracles::perfect_matchings(g)) {
      bool has_f = std::find(pm.begin(), pm.end(), f) != pm.end();
      bool has_b = std::find(pm.begin(), pm.end(), b) != pm.end();
      if (has_f && !has_b) expected = true;
    }
    CHECK(m.has_value() == expected);
    if (m) {
      CHECK(is_valid_matching(g, *m));
      CHECK(2 * m->size() == g.order());
      CHECK(std::binary_search(m->edges.begin(), m->edges.end(), f));
      CHECK_FALSE(std::binary_search(m->edges.begin(), m->edges.end(), b));
    }
  }
}

TEST_CASE("allowed edges") {
  Graph s1 = staircase(1);
  CHECK(allowed_edges(s1).size() == 12);  // 2-edge-connected cubic

  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  auto p4_allowed = allowed_edges(p4);
  CHECK(p4_allowed == std::vector<Edge>{Edge(0, 1), Edge(2, 3)});

  CHECK(allowed_edges(Graph::cycle(6)).size() == 6);
  CHECK_THROWS_AS(allowed_edges(Graph::cycle(5)), DomainError);

  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracles::random_graph(rng, 8 + 2 * static_cast<int>(rng() % 3),
                                    0.35);
    CHECK(allowed_edges(g) == oracles::allowed_edges_brute(g));
  }
}

TEST_CASE("forced matchings reduce to endpoint deletion") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = oracles::random_graph(rng, 10, 0.4);
    if (g.size() == 0) continue;
    Edge f = g.edges()[rng() % g.edges().size()];
    bool via_query = perfect_matching_with(g, {f}, {}).has_value();
    bool via_deletion = has_perfect_matching(minus_vertices(g, {f.u, f.v}));
    CHECK(via_query == via_deletion);
  }
}

TEST_CASE("odd components and barriers") {
  Graph k4 = Graph::complete(4);
  CHECK(odd_components(k4, {0}) == 1);
  CHECK(odd_components(k4, {}) == 0);

  Graph s1 = staircase(1);
  Graph s1_minus_uv = minus_edge(s1, by_label(s1, "u", "v"));
  std::vector<Vertex> barrier = {*s1.vertex_with_label("u1"),
                                 *s1.vertex_with_label("v1"),
                                 *s1.vertex_with_label("w")};
  CHECK(odd_components(s1_minus_uv, barrier) == 3);
  CHECK(is_barrier(s1_minus_uv, barrier));

  CHECK(is_barrier(k4, {0}));
  CHECK_FALSE(is_barrier(Graph::cycle(6), {0, 3}));
  CHECK_THROWS_AS(is_barrier(k4, {}), DomainError);
  CHECK_THROWS_AS(is_barrier(Graph::cycle(5), {0}), DomainError);
}

TEST_CASE("adjacent barrier vertices kill their edge") {
  std::mt19937 rng(67);
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 60; ++trial) {
    Graph g = oracles::random_graph(rng, 10, 0.35);
    if (!has_perfect_matching(g)) continue;
    // random candidate barrier
    std::vector<Vertex> s;
    for (Vertex v = 0; v < g.order(); ++v)
      if (rng() % 3 == 0) s.push_back(v);
    if (s.empty()) continue;
    if (!is_barrier(g, s)) continue;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        if (g.adjacent(s[i], s[j])) {
          ++tested;
          CHECK_FALSE(
              perfect_matching_with(g, {Edge(s[i], s[j])}, {}).has_value());
        }
  }
}

TEST_CASE("bicriticality") {
  CHECK(is_bicritical(Graph::complete(4)));
  CHECK(is_bicritical(oracles::prism()));
  CHECK_FALSE(is_bicritical(Graph::cycle(4)));
  CHECK_THROWS_AS(is_bicritical(Graph::cycle(5)), DomainError);
  CHECK_THROWS_AS(is_bicritical(Graph(2, {{0, 1}})), DomainError);
}

TEST_CASE("covering matchings match the edge-subset oracle") {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 6 + 2 * static_cast<int>(rng() % 2);
    Graph g = oracles::random_graph(rng, n, 0.4);
    if (g.size() < 3 || g.size() > 16) continue;
    std::vector<Vertex> cover;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 2) cover.push_back(v);
    Edge forced = g.edges()[rng() % g.edges().size()];
    Edge forbidden = g.edges()[rng() % g.edges().size()];
    if (forced == forbidden || forced.meets(forbidden)) continue;
    std::optional<Matching> got;
    try {
      got = matching_covering(g, cover, {forced}, {forbidden});
    } catch (const DomainError&) {
      continue;
    }
    // oracle: scan all edge subsets
    bool expected = false;
    const auto& es = g.edges();
    for (std::uint64_t pick = 0; pick < (1ull << es.size()); ++pick) {
      std::uint64_t covered = 0;
      bool ok = true, has_forced = false;
      for (std::size_t i = 0; i < es.size() && ok; ++i) {
        if (!(pick >> i & 1ull)) continue;
        std::uint64_t mask = (1ull << es[i].u) | (1ull << es[i].v);
        if (covered & mask) ok = false;
        covered |= mask;
        if (es[i] == forbidden) ok = false;
        if (es[i] == forced) has_forced = true;
      }
      if (!ok || !has_forced) continue;
      bool covers = true;
      for (Vertex v : cover)
        if (!(covered >> v & 1ull)) covers = false;
      if (covers) {
        expected = true;
        break;
      }
    }
    CHECK(got.has_value() == expected);
    if (got) {
      CHECK(is_valid_matching(g, *got));
      for (Vertex v : cover) CHECK(got->covers(v));
      CHECK(std::binary_search(got->edges.begin(), got->edges.end(), forced));
      CHECK_FALSE(std::binary_search(got->edges.begin(), got->edges.end(),
                                     forbidden));
    }
  }
}
