#include "mcov/matching.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace mcov {

namespace {

int ctz(std::uint64_t x) { return std::countr_zero(x); }

// Edmonds' blossom algorithm over bitmask adjacency. `active` masks out
// vertices removed by forced edges; `adj` already excludes forbidden edges.
struct Blossom {
  int n;
  std::vector<std::uint64_t> adj;
  std::uint64_t active;
  std::vector<int> mate, parent, base;
  std::vector<char> used, in_blossom;

  Blossom(int n_, std::vector<std::uint64_t> adj_, std::uint64_t active_)
      : n(n_),
        adj(std::move(adj_)),
        active(active_),
        mate(static_cast<std::size_t>(n_), -1),
        parent(static_cast<std::size_t>(n_), -1),
        base(static_cast<std::size_t>(n_), 0),
        used(static_cast<std::size_t>(n_), 0),
        in_blossom(static_cast<std::size_t>(n_), 0) {}

  int lowest_common_base(int a, int b) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (;;) {
      a = base[static_cast<std::size_t>(a)];
      seen[static_cast<std::size_t>(a)] = 1;
      if (mate[static_cast<std::size_t>(a)] == -1) break;
      a = parent[static_cast<std::size_t>(mate[static_cast<std::size_t>(a)])];
    }
    for (;;) {
      b = base[static_cast<std::size_t>(b)];
      if (seen[static_cast<std::size_t>(b)]) return b;
      b = parent[static_cast<std::size_t>(mate[static_cast<std::size_t>(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base[static_cast<std::size_t>(v)] != b) {
      in_blossom[static_cast<std::size_t>(base[static_cast<std::size_t>(v)])] =
          1;
      in_blossom[static_cast<std::size_t>(
          base[static_cast<std::size_t>(mate[static_cast<std::size_t>(v)])])] =
          1;
      parent[static_cast<std::size_t>(v)] = child;
      child = mate[static_cast<std::size_t>(v)];
      v = parent[static_cast<std::size_t>(mate[static_cast<std::size_t>(v)])];
    }
  }

  bool augment_from(int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) base[static_cast<std::size_t>(i)] = i;
    std::vector<int> queue{root};
    used[static_cast<std::size_t>(root)] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (std::uint64_t m = adj[static_cast<std::size_t>(v)] & active; m;
           m &= m - 1) {
        int to = ctz(m);
        if (base[static_cast<std::size_t>(v)] ==
                base[static_cast<std::size_t>(to)] ||
            mate[static_cast<std::size_t>(v)] == to)
          continue;
        if (to == root ||
            (mate[static_cast<std::size_t>(to)] != -1 &&
             parent[static_cast<std::size_t>(
                 mate[static_cast<std::size_t>(to)])] != -1)) {
          // Odd cycle: shrink the blossom.
          int cur = lowest_common_base(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i)
            if (in_blossom[static_cast<std::size_t>(
                    base[static_cast<std::size_t>(i)])]) {
              base[static_cast<std::size_t>(i)] = cur;
              if (!used[static_cast<std::size_t>(i)]) {
                used[static_cast<std::size_t>(i)] = 1;
                queue.push_back(i);
              }
            }
        } else if (parent[static_cast<std::size_t>(to)] == -1) {
          parent[static_cast<std::size_t>(to)] = v;
          if (mate[static_cast<std::size_t>(to)] == -1) {
            // Exposed vertex reached: flip the alternating path.
            int u = to;
            while (u != -1) {
              int pv = parent[static_cast<std::size_t>(u)];
              int next = mate[static_cast<std::size_t>(pv)];
              mate[static_cast<std::size_t>(u)] = pv;
              mate[static_cast<std::size_t>(pv)] = u;
              u = next;
            }
            return true;
          }
          int w = mate[static_cast<std::size_t>(to)];
          used[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    return false;
  }

  void solve() {
    // Lexicographic greedy seed keeps results reproducible.
    for (int v = 0; v < n; ++v) {
      if (!(active >> v & 1ull) || mate[static_cast<std::size_t>(v)] != -1)
        continue;
      for (std::uint64_t m = adj[static_cast<std::size_t>(v)] & active; m;
           m &= m - 1) {
        int to = ctz(m);
        if (mate[static_cast<std::size_t>(to)] == -1) {
          mate[static_cast<std::size_t>(v)] = to;
          mate[static_cast<std::size_t>(to)] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if ((active >> v & 1ull) && mate[static_cast<std::size_t>(v)] == -1)
        augment_from(v);
  }
};

std::vector<std::uint64_t> filtered_adjacency(
    const Graph& g, const std::vector<Edge>& forbidden) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v)
    adj[static_cast<std::size_t>(v)] = g.adjacency_mask(v);
  for (const Edge& e : forbidden) {
    adj[static_cast<std::size_t>(e.u)] &= ~(1ull << e.v);
    adj[static_cast<std::size_t>(e.v)] &= ~(1ull << e.u);
  }
  return adj;
}

std::uint64_t full_mask(const Graph& g) {
  return g.order() == 64 ? ~0ull : (1ull << g.order()) - 1;
}

Matching mates_to_matching(const std::vector<int>& mate) {
  Matching m;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v)
    if (mate[static_cast<std::size_t>(v)] > v)
      m.edges.emplace_back(v, mate[static_cast<std::size_t>(v)]);
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

void check_constraint_edges(const Graph& g, const std::vector<Edge>& forced,
                            const std::vector<Edge>& forbidden) {
  for (const Edge& e : forced)
    if (!g.has_edge(e)) throw DomainError("forced edge not in graph: " + to_string(e));
  for (const Edge& e : forbidden)
    if (!g.has_edge(e))
      throw DomainError("forbidden edge not in graph: " + to_string(e));
  for (std::size_t i = 0; i < forced.size(); ++i)
    for (std::size_t j = i + 1; j < forced.size(); ++j)
      if (forced[i].meets(forced[j]))
        throw DomainError("forced edges share an endpoint: " +
                          to_string(forced[i]) + ", " + to_string(forced[j]));
  for (const Edge& e : forced)
    for (const Edge& f : forbidden)
      if (e == f)
        throw DomainError("edge both forced and forbidden: " + to_string(e));
}

}  // namespace

Matching maximum_matching(const Graph& g) {
  Blossom solver(g.order(), filtered_adjacency(g, {}), full_mask(g));
  solver.solve();
  return mates_to_matching(solver.mate);
}

std::optional<Matching> perfect_matching_with(
    const Graph& g, const std::vector<Edge>& forced,
    const std::vector<Edge>& forbidden) {
  check_constraint_edges(g, forced, forbidden);
  std::uint64_t active = full_mask(g);
  for (const Edge& e : forced) active &= ~((1ull << e.u) | (1ull << e.v));
  const int want = std::popcount(active);
  if (want % 2 != 0) return std::nullopt;
  Blossom solver(g.order(), filtered_adjacency(g, forbidden), active);
  solver.solve();
  int matched = 0;
  for (int v = 0; v < g.order(); ++v)
    if ((active >> v & 1ull) && solver.mate[static_cast<std::size_t>(v)] != -1)
      ++matched;
  if (matched < want) return std::nullopt;
  Matching m = mates_to_matching(solver.mate);
  m.edges.insert(m.edges.end(), forced.begin(), forced.end());
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

bool has_perfect_matching(const Graph& g) {
  if (g.order() % 2 != 0) return false;
  return maximum_matching(g).size() * 2 == g.order();
}

std::vector<Edge> allowed_edges(const Graph& g) {
  if (g.order() % 2 != 0)
    throw DomainError("allowed_edges needs an even order graph");
  std::vector<Edge> out;
  Matching m0 = maximum_matching(g);
  if (m0.size() * 2 < g.order()) return out;  // no perfect matching at all
  for (const Edge& e : g.edges()) {
    bool in_m0 =
        std::binary_search(m0.edges.begin(), m0.edges.end(), e);
    if (in_m0 || perfect_matching_with(g, {e}, {}).has_value())
      out.push_back(e);
  }
  return out;
}

int odd_components(const Graph& g, const std::vector<Vertex>& s) {
  Graph h = minus_vertices(g, s);
  int odd = 0;
  for (const auto& comp : components(h))
    if (comp.size() % 2 == 1) ++odd;
  return odd;
}

bool is_barrier(const Graph& g, const std::vector<Vertex>& s) {
  if (s.empty()) throw DomainError("barrier test needs a non-empty set");
  if (!has_perfect_matching(g))
    throw DomainError("barrier semantics assume a graph with a perfect matching");
  return odd_components(g, s) == static_cast<int>(s.size());
}

bool is_bicritical(const Graph& g) {
  if (g.order() % 2 != 0 || g.order() < 4)
    throw DomainError("bicritical test needs an even order >= 4");
  const std::uint64_t full = full_mask(g);
  auto adj = filtered_adjacency(g, {});
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      std::uint64_t active = full & ~((1ull << u) | (1ull << v));
      Blossom solver(g.order(), adj, active);
      solver.solve();
      int matched = 0;
      for (int w = 0; w < g.order(); ++w)
        if ((active >> w & 1ull) &&
            solver.mate[static_cast<std::size_t>(w)] != -1)
          ++matched;
      if (matched < g.order() - 2) return false;
    }
  return true;
}

std::optional<Matching> matching_covering(const Graph& g,
                                          const std::vector<Vertex>& must_cover,
                                          const std::vector<Edge>& forced,
                                          const std::vector<Edge>& forbidden) {
  check_constraint_edges(g, forced, forbidden);
  std::uint64_t cover = subset_mask(g, must_cover);
  for (const Edge& e : forced) cover &= ~((1ull << e.u) | (1ull << e.v));
  // Optional vertices get a private clique (plus one apex on odd totals) so
  // a perfect matching of the extended graph is exactly a matching of g
  // covering the requested set.
  std::uint64_t forced_off = 0;
  for (const Edge& e : forced) forced_off |= (1ull << e.u) | (1ull << e.v);
  std::vector<Vertex> optional_vs;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!(cover >> v & 1ull) && !(forced_off >> v & 1ull))
      optional_vs.push_back(v);
  std::vector<Edge> ext_edges;
  for (const Edge& e : g.edges()) {
    if (std::find(forbidden.begin(), forbidden.end(), e) != forbidden.end())
      continue;
    if ((forced_off >> e.u & 1ull) || (forced_off >> e.v & 1ull)) continue;
    ext_edges.push_back(e);
  }
  int ext_order = g.order();
  int live = g.order() - std::popcount(forced_off);
  if (live % 2 != 0) {
    if (optional_vs.empty()) return std::nullopt;
    ++ext_order;  // apex
  }
  if (ext_order > 64) throw DomainError("graph too large for covering query");
  for (std::size_t i = 0; i < optional_vs.size(); ++i)
    for (std::size_t j = i + 1; j < optional_vs.size(); ++j)
      if (!std::binary_search(ext_edges.begin(), ext_edges.end(),
                              Edge(optional_vs[i], optional_vs[j])))
        ext_edges.emplace_back(optional_vs[i], optional_vs[j]);
  if (live % 2 != 0)
    for (Vertex v : optional_vs) ext_edges.emplace_back(v, ext_order - 1);
  std::uint64_t active = (ext_order == 64 ? ~0ull : (1ull << ext_order) - 1) &
                         ~forced_off;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(ext_order), 0);
  std::sort(ext_edges.begin(), ext_edges.end());
  ext_edges.erase(std::unique(ext_edges.begin(), ext_edges.end()),
                  ext_edges.end());
  for (const Edge& e : ext_edges) {
    adj[static_cast<std::size_t>(e.u)] |= 1ull << e.v;
    adj[static_cast<std::size_t>(e.v)] |= 1ull << e.u;
  }
  Blossom solver(ext_order, std::move(adj), active);
  solver.solve();
  const int want = std::popcount(active);
  int matched = 0;
  for (int v = 0; v < ext_order; ++v)
    if ((active >> v & 1ull) && solver.mate[static_cast<std::size_t>(v)] != -1)
      ++matched;
  if (matched < want) return std::nullopt;
  // Clique and apex pairings between optional vertices are artifacts of the
  // extension; keep only real non-forbidden edges.
  Matching m;
  for (int v = 0; v < g.order(); ++v) {
    int w = solver.mate[static_cast<std::size_t>(v)];
    if (w <= v || w >= g.order() || !g.adjacent(v, w)) continue;
    Edge e(v, w);
    if (std::find(forbidden.begin(), forbidden.end(), e) != forbidden.end())
      continue;
    m.edges.push_back(e);
  }
  m.edges.insert(m.edges.end(), forced.begin(), forced.end());
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

}  // namespace mcov
