#include "mcov/census.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "mcov/isomorphism.hpp"

namespace mcov {
namespace census {

Graph edge_insertion(const Graph& g, const Edge& e1, const Edge& e2) {
  if (e1 == e2) throw DomainError("edge insertion needs two distinct edges");
  if (!g.has_edge(e1) || !g.has_edge(e2))
    throw DomainError("edge insertion needs edges of the graph");
  const Vertex x = g.order();
  const Vertex y = g.order() + 1;
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (e != e1 && e != e2) es.push_back(e);
  es.emplace_back(e1.u, x);
  es.emplace_back(e1.v, x);
  es.emplace_back(e2.u, y);
  es.emplace_back(e2.v, y);
  es.emplace_back(x, y);
  return Graph(g.order() + 2, std::move(es));
}

bool reduction_admissible(const Graph& g, const Edge& xy) {
  if (!g.has_edge(xy)) throw DomainError("no such edge: " + to_string(xy));
  std::vector<Vertex> xo, yo;
  for (Vertex w : g.neighbors(xy.u))
    if (w != xy.v) xo.push_back(w);
  for (Vertex w : g.neighbors(xy.v))
    if (w != xy.u) yo.push_back(w);
  if (xo.size() != 2 || yo.size() != 2) return false;
  Edge a(xo[0], xo[1]);
  Edge b(yo[0], yo[1]);
  if (a == b) return false;            // both rejoined pairs coincide
  if (g.has_edge(a) || g.has_edge(b)) return false;
  return true;
}

bool has_admissible_reduction(const Graph& g) {
  for (const Edge& e : g.edges())
    if (reduction_admissible(g, e)) return true;
  return false;
}

namespace {

// Irreducible building block: K4 minus an edge. Vertices 0,1 are the hub
// pair, 2,3 the ports (one free slot each).
struct Assembly {
  int diamonds = 0;
  int linkers = 0;
  std::vector<Edge> extra;  // port-port and port-linker edges

  int order() const { return 4 * diamonds + linkers; }
};

Graph realize(const Assembly& a) {
  std::vector<Edge> es;
  for (int d = 0; d < a.diamonds; ++d) {
    int b = 4 * d;
    es.emplace_back(b, b + 1);
    es.emplace_back(b, b + 2);
    es.emplace_back(b, b + 3);
    es.emplace_back(b + 1, b + 2);
    es.emplace_back(b + 1, b + 3);
  }
  es.insert(es.end(), a.extra.begin(), a.extra.end());
  return Graph(a.order(), std::move(es));
}

// Backtracking over the pairing of port slots with other ports or with
// linker slots. Linkers take three distinct ports and never touch each
// other, so every completed assembly is irreducible by construction.
void complete_assemblies(int diamonds, int linkers,
                         std::vector<int>& remaining_slots,  // per element
                         std::vector<Edge>& acc,
                         std::map<std::string, Graph>& out) {
  const int ports = 2 * diamonds;
  int first = -1;
  for (int p = 0; p < ports; ++p)
    if (remaining_slots[static_cast<std::size_t>(p)] > 0) {
      first = p;
      break;
    }
  if (first == -1) {
    for (int l = 0; l < linkers; ++l)
      if (remaining_slots[static_cast<std::size_t>(ports + l)] != 0) return;
    Assembly a;
    a.diamonds = diamonds;
    a.linkers = linkers;
    auto port_vertex = [](int p) { return 4 * (p / 2) + 2 + p % 2; };
    for (const Edge& e : acc) {
      Vertex u = e.u < ports ? port_vertex(e.u) : 4 * diamonds + (e.u - ports);
      Vertex v = e.v < ports ? port_vertex(e.v) : 4 * diamonds + (e.v - ports);
      a.extra.emplace_back(u, v);
    }
    Graph g = realize(a);
    if (!is_connected(g)) return;
    out.emplace(canonical_form(g), g);
    return;
  }
  remaining_slots[static_cast<std::size_t>(first)] = 0;
  for (int q = first + 1; q < ports + linkers; ++q) {
    if (remaining_slots[static_cast<std::size_t>(q)] == 0) continue;
    Edge e(first, q);
    if (std::find(acc.begin(), acc.end(), e) != acc.end()) continue;
    --remaining_slots[static_cast<std::size_t>(q)];
    acc.push_back(e);
    complete_assemblies(diamonds, linkers, remaining_slots, acc, out);
    acc.pop_back();
    ++remaining_slots[static_cast<std::size_t>(q)];
  }
  remaining_slots[static_cast<std::size_t>(first)] = 1;
}

}  // namespace

std::vector<Graph> irreducible_connected(int n) {
  std::map<std::string, Graph> out;
  if (n == 4) return {Graph::complete(4)};
  for (int diamonds = 2; 4 * diamonds <= n; ++diamonds) {
    int linkers = n - 4 * diamonds;
    if (3 * linkers > 2 * diamonds) continue;
    if ((2 * diamonds - 3 * linkers) % 2 != 0) continue;
    std::vector<int> slots(static_cast<std::size_t>(2 * diamonds), 1);
    for (int l = 0; l < linkers; ++l) slots.push_back(3);
    std::vector<Edge> acc;
    complete_assemblies(diamonds, linkers, slots, acc, out);
  }
  std::vector<Graph> result;
  for (auto& [key, g] : out) result.push_back(std::move(g));
  return result;
}

namespace {

// Disjoint unions of connected irreducible graphs with n vertices total.
// These are exactly the cubic graphs edge insertion cannot reach.
void irreducible_unions(int n, int min_piece,
                        const std::map<int, std::vector<Graph>>& pieces,
                        const Graph& partial,
                        std::map<std::string, Graph>& out) {
  if (n == 0) {
    if (partial.order() > 0) out.emplace(canonical_form(partial), partial);
    return;
  }
  for (int k = min_piece; k <= n; ++k) {
    auto it = pieces.find(k);
    if (it == pieces.end()) continue;
    for (const Graph& piece : it->second) {
      std::vector<Edge> es = partial.edges();
      for (const Edge& e : piece.edges())
        es.emplace_back(e.u + partial.order(), e.v + partial.order());
      Graph bigger(partial.order() + piece.order(), std::move(es));
      irreducible_unions(n - k, k, pieces, bigger, out);
    }
  }
}

std::mutex cache_mutex;
std::map<int, std::vector<Graph>>& level_cache() {
  static std::map<int, std::vector<Graph>> cache;
  return cache;
}

std::vector<Graph> build_level(int n) {
  std::map<std::string, Graph> out;
  if (n >= 4 && n % 2 == 0) {
    if (n > 4) {
      std::vector<Graph> parents = cubic_graphs(n - 2);
      unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
      jobs = std::min<unsigned>(jobs, static_cast<unsigned>(parents.size()));
      std::vector<std::map<std::string, Graph>> partial(jobs);
      std::atomic<std::size_t> next{0};
      auto worker = [&](unsigned slot) {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= parents.size()) return;
          const Graph& parent = parents[i];
          const auto& es = parent.edges();
          for (std::size_t a = 0; a < es.size(); ++a)
            for (std::size_t b = a + 1; b < es.size(); ++b) {
              Graph child = edge_insertion(parent, es[a], es[b]);
              partial[slot].emplace(canonical_form(child), std::move(child));
            }
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker, t);
      worker(0);
      for (auto& t : pool) t.join();
      for (auto& m : partial)
        for (auto& [key, g] : m) out.emplace(key, std::move(g));
    }
    std::map<int, std::vector<Graph>> pieces;
    for (int k = 4; k <= n; k += 2) pieces[k] = irreducible_connected(k);
    irreducible_unions(n, 4, pieces, Graph(), out);
  }
  std::vector<Graph> result;
  for (auto& [key, g] : out) result.push_back(std::move(g));
  return result;
}

}  // namespace

std::vector<Graph> cubic_graphs(int n) {
  if (n < 0 || n % 2 != 0 || n < 4) return {};
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = level_cache().find(n);
    if (it != level_cache().end()) return it->second;
  }
  std::vector<Graph> level = build_level(n);
  std::lock_guard<std::mutex> lock(cache_mutex);
  level_cache().emplace(n, level);
  return level;
}

std::vector<Graph> connected_cubic_graphs(int n) {
  std::vector<Graph> out;
  for (const Graph& g : cubic_graphs(n))
    if (is_connected(g)) out.push_back(g);
  return out;
}

}  // namespace census
}  // namespace mcov
