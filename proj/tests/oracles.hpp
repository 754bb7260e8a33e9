// Brute-force reference implementations used only by the tests. Everything
// here is deliberately independent of the library's algorithmic paths:
// matchings by direct enumeration, tight cuts by shore scans, isomorphism by
// bijection search, censuses by constrained exhaustive labeling.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mcov/graph.hpp"
#include "mcov/isomorphism.hpp"

namespace oracles {

using mcov::Edge;
using mcov::Graph;
using mcov::Vertex;

inline void enumerate_matchings_rec(const Graph& g, std::uint64_t covered,
                                    std::vector<Edge>& acc,
                                    std::vector<std::vector<Edge>>& out) {
  // Extend from the smallest uncovered vertex or record a perfect matching.
  int v = -1;
  for (Vertex w = 0; w < g.order(); ++w)
    if (!(covered >> w & 1ull)) {
      v = w;
      break;
    }
  if (v == -1) {
    out.push_back(acc);
    return;
  }
  for (Vertex w : g.neighbors(v)) {
    if (covered >> w & 1ull) continue;
    acc.emplace_back(v, w);
    enumerate_matchings_rec(g, covered | (1ull << v) | (1ull << w), acc, out);
    acc.pop_back();
  }
}

inline std::vector<std::vector<Edge>> perfect_matchings(const Graph& g) {
  std::vector<std::vector<Edge>> out;
  if (g.order() % 2 != 0) return out;
  std::vector<Edge> acc;
  enumerate_matchings_rec(g, 0, acc, out);
  for (auto& m : out) std::sort(m.begin(), m.end());
  return out;
}

inline std::vector<Edge> allowed_edges_brute(const Graph& g) {
  std::set<Edge> seen;
  for (const auto& m : perfect_matchings(g)) seen.insert(m.begin(), m.end());
  return {seen.begin(), seen.end()};
}

inline int max_matching_rec(const Graph& g, std::uint64_t used, Vertex from) {
  int best = 0;
  for (Vertex v = from; v < g.order(); ++v) {
    if (used >> v & 1ull) continue;
    for (Vertex w : g.neighbors(v)) {
      if (w < v || (used >> w & 1ull)) continue;
      best = std::max(best, 1 + max_matching_rec(
                                g, used | (1ull << v) | (1ull << w), v + 1));
    }
    // Either v is matched above or stays exposed; both branches explored by
    // moving on.
  }
  return best;
}

inline int max_matching_size_brute(const Graph& g) {
  return max_matching_rec(g, 0, 0);
}

// Berge: a matching is maximum iff no augmenting path exists.
inline bool has_augmenting_path(const Graph& g, const std::vector<Edge>& m) {
  std::vector<int> mate(static_cast<std::size_t>(g.order()), -1);
  for (const Edge& e : m) {
    mate[static_cast<std::size_t>(e.u)] = e.v;
    mate[static_cast<std::size_t>(e.v)] = e.u;
  }
  // DFS over alternating paths from every exposed vertex, tracking the
  // vertex set on the path; exponential but fine at oracle scale.
  std::vector<Vertex> exposed;
  for (Vertex v = 0; v < g.order(); ++v)
    if (mate[static_cast<std::size_t>(v)] == -1) exposed.push_back(v);
  struct Walker {
    const Graph& g;
    const std::vector<int>& mate;
    bool walk(Vertex v, std::uint64_t on_path, bool need_matched) {
      for (Vertex w : g.neighbors(v)) {
        if (on_path >> w & 1ull) continue;
        bool is_matched_edge = mate[static_cast<std::size_t>(v)] == w;
        if (is_matched_edge != need_matched) continue;
        if (!need_matched && mate[static_cast<std::size_t>(w)] == -1)
          return true;  // augmenting
        if (walk(w, on_path | (1ull << w), !need_matched)) return true;
      }
      return false;
    }
  } walker{g, mate};
  for (Vertex v : exposed)
    if (walker.walk(v, 1ull << v, false)) return true;
  return false;
}

inline int odd_components_of(const Graph& g, std::uint64_t removed) {
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!(removed >> v & 1ull)) keep.push_back(v);
  Graph h = mcov::induced_subgraph(g, keep);
  int odd = 0;
  for (const auto& comp : mcov::components(h))
    if (comp.size() % 2 == 1) ++odd;
  return odd;
}

// Tutte-Berge: max matching size = min over S of (n - o(G-S) + |S|) / 2.
inline int tutte_berge_bound(const Graph& g) {
  int best = g.order();
  for (std::uint64_t s = 0; s < (1ull << g.order()); ++s) {
    int value = g.order() - odd_components_of(g, s) +
                std::popcount(s);
    best = std::min(best, value);
  }
  return best / 2;
}

// Tightness from first principles: every perfect matching meets the cut
// exactly once.
inline bool tight_cut_brute(const Graph& g, std::uint64_t shore,
                            const std::vector<std::vector<Edge>>& pms) {
  for (const auto& m : pms) {
    int hits = 0;
    for (const Edge& e : m)
      if (((shore >> e.u) & 1ull) != ((shore >> e.v) & 1ull)) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

inline bool has_nontrivial_tight_cut_brute(const Graph& g) {
  auto pms = perfect_matchings(g);
  const int n = g.order();
  for (std::uint64_t shore = 1; shore < (1ull << n); ++shore) {
    int inside = std::popcount(shore);
    if (inside < 2 || n - inside < 2) continue;
    if (!(shore & 1ull)) continue;  // fix vertex 0 inside; complements agree
    if (tight_cut_brute(g, shore, pms)) return true;
  }
  return false;
}

// All nontrivial 3-cut shores by scanning vertex subsets directly.
inline std::set<std::vector<Vertex>> three_cut_shores_brute(const Graph& g) {
  std::set<std::vector<Vertex>> out;
  const int n = g.order();
  for (std::uint64_t shore = 1; shore < (1ull << n); ++shore) {
    int inside = std::popcount(shore);
    if (inside < 2 || n - inside < 2) continue;
    int boundary = 0;
    for (const Edge& e : g.edges())
      if (((shore >> e.u) & 1ull) != ((shore >> e.v) & 1ull)) ++boundary;
    if (boundary != 3) continue;
    std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
    auto a = mcov::mask_to_vertices(shore);
    auto b = mcov::mask_to_vertices(full & ~shore);
    out.insert(std::min(a, b));
  }
  return out;
}

// Explicit bijection search, independent of canonical labeling.
inline bool isomorphic_by_search(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  const int n = g.order();
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::uint64_t used = 0;
  struct Search {
    const Graph &g, &h;
    int n;
    std::vector<int>& map;
    std::uint64_t& used;
    bool extend(int v) {
      if (v == n) return true;
      for (int w = 0; w < n; ++w) {
        if (used >> w & 1ull) continue;
        if (g.degree(v) != h.degree(w)) continue;
        bool ok = true;
        for (int p = 0; p < v && ok; ++p)
          if (g.adjacent(p, v) !=
              h.adjacent(map[static_cast<std::size_t>(p)], w))
            ok = false;
        if (!ok) continue;
        map[static_cast<std::size_t>(v)] = w;
        used |= 1ull << w;
        if (extend(v + 1)) return true;
        used &= ~(1ull << w);
        map[static_cast<std::size_t>(v)] = -1;
      }
      return false;
    }
  } search{g, h, n, map, used};
  return search.extend(0);
}

// Exhaustive connected cubic census by constrained labeled backtracking:
// vertex 0 gets neighbors 1,2,3, later vertices are introduced contiguously,
// and the smallest incomplete vertex is always completed first. Every
// connected cubic graph admits such a labeling, so deduplication by
// canonical form yields the full census.
struct CubicBrute {
  int n;
  std::vector<std::vector<Vertex>> adj;
  std::vector<int> degree;
  std::set<std::string> seen;
  std::vector<Graph> out;

  explicit CubicBrute(int n_)
      : n(n_), adj(static_cast<std::size_t>(n_)),
        degree(static_cast<std::size_t>(n_), 0) {}

  void add(Vertex a, Vertex b) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
    ++degree[static_cast<std::size_t>(a)];
    ++degree[static_cast<std::size_t>(b)];
  }
  void remove(Vertex a, Vertex b) {
    adj[static_cast<std::size_t>(a)].pop_back();
    adj[static_cast<std::size_t>(b)].pop_back();
    --degree[static_cast<std::size_t>(a)];
    --degree[static_cast<std::size_t>(b)];
  }
  bool adjacent(Vertex a, Vertex b) const {
    for (Vertex w : adj[static_cast<std::size_t>(a)])
      if (w == b) return true;
    return false;
  }

  void finish() {
    std::vector<Edge> es;
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : adj[static_cast<std::size_t>(v)])
        if (w > v) es.emplace_back(v, w);
    Graph g(n, es);
    if (!mcov::is_connected(g)) return;
    if (seen.insert(mcov::canonical_form(g)).second) out.push_back(g);
  }

  void search(int touched) {
    Vertex v = -1;
    for (Vertex w = 0; w < n; ++w)
      if (degree[static_cast<std::size_t>(w)] < 3) {
        v = w;
        break;
      }
    if (v == -1) {
      finish();
      return;
    }
    if (v >= touched) return;  // untouched vertex can never connect back
    for (Vertex w = v + 1; w < n && w <= touched; ++w) {
      if (degree[static_cast<std::size_t>(w)] >= 3 || adjacent(v, w)) continue;
      add(v, w);
      search(std::max(touched, w + 1));
      remove(v, w);
    }
  }

  std::vector<Graph> run() {
    if (n < 4 || n % 2 != 0) return {};
    add(0, 1);
    add(0, 2);
    add(0, 3);
    search(4);
    return out;
  }
};

inline std::vector<Graph> connected_cubic_brute(int n) {
  return CubicBrute(n).run();
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) es.emplace_back(a, b);
  return Graph(n, es);
}

// Random balanced bipartite graph guaranteed to have a perfect matching.
inline Graph random_bipartite_with_pm(std::mt19937& rng, int half, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int i = 0; i < half; ++i) es.emplace_back(i, half + i);
  for (int i = 0; i < half; ++i)
    for (int j = 0; j < half; ++j)
      if (i != j && coin(rng)) es.emplace_back(i, half + j);
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return Graph(2 * half, es);
}

inline Graph petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
    es.emplace_back(i, 5 + i);
  }
  return Graph(10, es);
}

inline Graph prism() {
  std::vector<Edge> es;
  Graph c6 = Graph::cycle(6);
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b)
      if (!c6.adjacent(a, b)) es.emplace_back(a, b);
  return Graph(6, es);
}

}  // namespace oracles
