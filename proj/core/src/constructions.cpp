#include "mcov/constructions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <string>

#include "mcov/isomorphism.hpp"

namespace mcov {

namespace {

std::string fresh_label(std::set<std::string>& taken, std::string candidate) {
  while (taken.count(candidate)) candidate += "'";
  taken.insert(candidate);
  return candidate;
}

}  // namespace

SplicePairing canonical_pairing(const Graph& g, Vertex u, const Graph& h,
                                Vertex v) {
  SplicePairing p;
  auto nu = g.neighbors(u);
  auto nv = h.neighbors(v);
  if (nu.size() != nv.size())
    throw DomainError("splicing vertices must have equal degrees");
  for (std::size_t i = 0; i < nu.size(); ++i)
    p.pairs.emplace_back(nu[i], nv[i]);
  return p;
}

Graph splice(const Graph& g, Vertex u, const Graph& h, Vertex v,
             const SplicePairing& pairing) {
  auto nu = g.neighbors(u);
  auto nv = h.neighbors(v);
  if (nu.size() != nv.size())
    throw DomainError("splicing vertices must have equal degrees");
  if (pairing.pairs.size() != nu.size())
    throw DomainError("pairing size does not match the degree");
  std::set<Vertex> seen_u, seen_v;
  for (const auto& [a, b] : pairing.pairs) {
    if (!std::binary_search(nu.begin(), nu.end(), a) || !seen_u.insert(a).second)
      throw DomainError("pairing does not cover the edges at u exactly once");
    if (!std::binary_search(nv.begin(), nv.end(), b) || !seen_v.insert(b).second)
      throw DomainError("pairing does not cover the edges at v exactly once");
  }

  const int gn = g.order();
  auto g_index = [&](Vertex w) { return w - (w > u ? 1 : 0); };
  auto h_index = [&](Vertex w) { return gn - 1 + w - (w > v ? 1 : 0); };
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (!e.touches(u)) es.emplace_back(g_index(e.u), g_index(e.v));
  for (const Edge& e : h.edges())
    if (!e.touches(v)) es.emplace_back(h_index(e.u), h_index(e.v));
  for (const auto& [a, b] : pairing.pairs)
    es.emplace_back(g_index(a), h_index(b));

  std::map<Vertex, std::string> labels;
  std::set<std::string> taken;
  for (const auto& [w, name] : g.labels())
    if (w != u) {
      labels[g_index(w)] = name;
      taken.insert(name);
    }
  for (const auto& [w, name] : h.labels())
    if (w != v) labels[h_index(w)] = fresh_label(taken, name);
  return Graph(gn + h.order() - 2, std::move(es), std::move(labels));
}

Graph splice(const Graph& g, Vertex u, const Graph& h, Vertex v) {
  return splice(g, u, h, v, canonical_pairing(g, u, h, v));
}

Graph insert_triangle(const Graph& g, Vertex v) {
  if (g.degree(v) != 3)
    throw DomainError("triangle insertion needs a degree-3 vertex");
  auto nbrs = g.neighbors(v);
  const int n = g.order();
  auto index = [&](Vertex w) { return w - (w > v ? 1 : 0); };
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if (!e.touches(v)) es.emplace_back(index(e.u), index(e.v));
  // Triangle vertices n-1, n, n+1 bond the ascending neighbors of v.
  for (int i = 0; i < 3; ++i) {
    es.emplace_back(index(nbrs[static_cast<std::size_t>(i)]), n - 1 + i);
    for (int j = i + 1; j < 3; ++j) es.emplace_back(n - 1 + i, n - 1 + j);
  }
  std::map<Vertex, std::string> labels;
  std::set<std::string> taken;
  for (const auto& [w, name] : g.labels())
    if (w != v) {
      labels[index(w)] = name;
      taken.insert(name);
    }
  for (int i = 0; i < 3; ++i)
    labels[n - 1 + i] =
        fresh_label(taken, "t" + std::to_string(v) + "." + std::to_string(i));
  return Graph(n + 2, std::move(es), std::move(labels));
}

std::vector<Edge> splicing_edges_of_insertion(const Graph& g, Vertex v) {
  if (g.degree(v) != 3)
    throw DomainError("triangle insertion needs a degree-3 vertex");
  auto nbrs = g.neighbors(v);
  const int n = g.order();
  auto index = [&](Vertex w) { return w - (w > v ? 1 : 0); };
  std::vector<Edge> out;
  for (int i = 0; i < 3; ++i)
    out.emplace_back(index(nbrs[static_cast<std::size_t>(i)]), n - 1 + i);
  std::sort(out.begin(), out.end());
  return out;
}

Graph insert_triangles(const Graph& g, const std::vector<Vertex>& vs) {
  subset_mask(g, vs);  // validates range and distinctness
  Graph cur = g;
  // Track where each original vertex currently lives.
  std::vector<Vertex> where(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v)
    where[static_cast<std::size_t>(v)] = v;
  for (Vertex v : vs) {
    Vertex target = where[static_cast<std::size_t>(v)];
    cur = insert_triangle(cur, target);
    for (Vertex w = 0; w < g.order(); ++w) {
      Vertex& pos = where[static_cast<std::size_t>(w)];
      if (pos > target) --pos;
    }
  }
  return cur;
}

Graph delta_replacement(const Graph& g, const std::vector<Vertex>& xs) {
  EdgeCut cut = edge_cut(g, xs);
  if (cut.boundary.size() != 3)
    throw DomainError("delta replacement needs a 3-cut shore");
  const int complement = g.order() - static_cast<int>(cut.shore.size());
  if (complement < 5)
    throw DomainError("delta replacement needs |V \\ X| >= 5");
  std::uint64_t mask = subset_mask(g, xs);
  std::uint64_t full = g.order() == 64 ? ~0ull : (1ull << g.order()) - 1;
  Graph contracted = contract(g, mask_to_vertices(full & ~mask));
  return insert_triangle(contracted, contracted.order() - 1);
}

Graph staircase(int k) {
  if (k < 1) throw DomainError("staircase parameter must be >= 1");
  // u v w z x y u1..uk v1..vk
  const Vertex u = 0, v = 1, w = 2, z = 3, x = 4, y = 5;
  auto ui = [&](int i) { return 5 + i; };
  auto vi = [&](int i) { return 5 + k + i; };
  std::vector<Edge> es = {{u, v}, {u, w}, {v, w}, {x, y},
                          {x, z}, {y, z}, {w, z}};
  es.emplace_back(u, ui(1));
  es.emplace_back(v, vi(1));
  for (int i = 1; i < k; ++i) {
    es.emplace_back(ui(i), ui(i + 1));
    es.emplace_back(vi(i), vi(i + 1));
  }
  es.emplace_back(ui(k), x);
  es.emplace_back(vi(k), y);
  for (int i = 1; i <= k; ++i) es.emplace_back(ui(i), vi(i));
  std::map<Vertex, std::string> labels = {{u, "u"}, {v, "v"}, {w, "w"},
                                          {z, "z"}, {x, "x"}, {y, "y"}};
  for (int i = 1; i <= k; ++i) {
    labels[ui(i)] = "u" + std::to_string(i);
    labels[vi(i)] = "v" + std::to_string(i);
  }
  return Graph(2 * k + 6, std::move(es), std::move(labels));
}

namespace {

std::vector<std::vector<Vertex>> triangles(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b) {
      if (!g.adjacent(a, b)) continue;
      for (Vertex c = b + 1; c < g.order(); ++c)
        if (g.adjacent(a, c) && g.adjacent(b, c)) out.push_back({a, b, c});
    }
  return out;
}

bool contractible_triangle(const Graph& g, const std::vector<Vertex>& t) {
  std::uint64_t mask = 0;
  for (Vertex v : t) mask |= 1ull << v;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (mask >> w & 1ull) continue;
    if (std::popcount(g.adjacency_mask(w) & mask) >= 2) return false;
  }
  return true;
}

bool family_member(const Graph& g, std::map<std::string, bool>& memo) {
  if (g.order() == 4) return g.size() == 6;  // cubic on 4 vertices means K4
  if (g.order() < 4 || g.order() % 2 != 0) return false;
  std::string key = canonical_form(g);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (const auto& t : triangles(g)) {
    if (!contractible_triangle(g, t)) continue;
    if (family_member(contract(g, t), memo)) {
      ok = true;
      break;
    }
  }
  memo[key] = ok;
  return ok;
}

}  // namespace

bool is_in_family_G(const Graph& g) {
  if (!g.is_cubic())
    throw DomainError("family membership is defined for cubic graphs");
  std::map<std::string, bool> memo;
  return family_member(g, memo);
}

std::vector<Graph> enumerate_family_G(int max_n) {
  if (max_n > 40) throw DomainError("enumeration is supported up to order 40");
  std::vector<Graph> out;
  if (max_n < 4) return out;
  std::map<std::string, Graph> level;
  Graph k4 = Graph::complete(4);
  level[canonical_form(k4)] = k4;
  int n = 4;
  while (!level.empty()) {
    for (const auto& [key, g] : level) out.push_back(g);  // key order
    if (n + 2 > max_n) break;
    std::map<std::string, Graph> next;
    for (const auto& [key, g] : level)
      for (Vertex v = 0; v < g.order(); ++v) {
        Graph child = insert_triangle(g, v);
        next.emplace(canonical_form(child), child);
      }
    level = std::move(next);
    n += 2;
  }
  return out;
}

}  // namespace mcov
