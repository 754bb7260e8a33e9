#include "mcov/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace mcov {

std::vector<Edge> RemovableClassification::doubleton_edges() const {
  std::set<Edge> es;
  for (const auto& [e, f] : doubletons) {
    es.insert(e);
    es.insert(f);
  }
  return {es.begin(), es.end()};
}

bool RemovableClassification::has_overlapping_doubletons() const {
  std::set<Edge> seen;
  for (const auto& [e, f] : doubletons)
    if (!seen.insert(e).second || !seen.insert(f).second) return true;
  return false;
}

bool is_matching_covered(const Graph& g) {
  if (g.order() < 2 || g.order() % 2 != 0) return false;
  if (!is_connected(g)) return false;
  Matching m0 = maximum_matching(g);
  if (m0.size() * 2 != g.order()) return false;
  for (const Edge& e : g.edges()) {
    if (std::binary_search(m0.edges.begin(), m0.edges.end(), e)) continue;
    if (!perfect_matching_with(g, {e}, {}).has_value()) return false;
  }
  return true;
}

namespace {

void require_edges(const Graph& g, const Edge& e, const Edge& f) {
  if (!g.has_edge(e)) throw DomainError("no such edge: " + to_string(e));
  if (!g.has_edge(f)) throw DomainError("no such edge: " + to_string(f));
  if (e == f) throw DomainError("dependence needs two distinct edges");
}

}  // namespace

bool depends_on(const Graph& g, const Edge& e, const Edge& f) {
  require_edges(g, e, f);
  if (!has_perfect_matching(g))
    throw DomainError("dependence is defined on matching covered graphs");
  return !perfect_matching_with(g, {e}, {f}).has_value();
}

RemovableClassification removable_classification(const Graph& g) {
  if (!is_matching_covered(g))
    throw DomainError("removability is defined on matching covered graphs");
  RemovableClassification out;
  std::set<Edge> removable;
  for (const Edge& e : g.edges())
    if (is_matching_covered(minus_edge(g, e))) removable.insert(e);
  out.removable.assign(removable.begin(), removable.end());

  // Doubleton candidates must be mutually dependent pairs of non-removable
  // edges; only those few survive to the full test.
  const auto& es = g.edges();
  std::set<Edge> in_doubleton;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (removable.count(es[i])) continue;
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (removable.count(es[j])) continue;
      if (perfect_matching_with(g, {es[i]}, {es[j]}).has_value()) continue;
      if (perfect_matching_with(g, {es[j]}, {es[i]}).has_value()) continue;
      if (!is_matching_covered(minus_edges(g, {es[i], es[j]}))) continue;
      out.doubletons.emplace_back(es[i], es[j]);
      in_doubleton.insert(es[i]);
      in_doubleton.insert(es[j]);
    }
  }
  for (const Edge& e : es)
    if (!removable.count(e) && !in_doubleton.count(e))
      out.neither.push_back(e);
  return out;
}

std::vector<Edge> removable_edges(const Graph& g) {
  if (!is_matching_covered(g))
    throw DomainError("removability is defined on matching covered graphs");
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (is_matching_covered(minus_edge(g, e))) out.push_back(e);
  return out;
}

std::vector<std::pair<Edge, Edge>> removable_doubletons(const Graph& g) {
  return removable_classification(g).doubletons;
}

Graph contract_simple(const Graph& g, const std::vector<Vertex>& xs) {
  std::uint64_t mask = subset_mask(g, xs);
  if (mask == 0) throw DomainError("contraction of an empty set");
  int outside = g.order() - std::popcount(mask);
  if (outside == 0) throw DomainError("contraction of the full vertex set");
  std::vector<int> new_index(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!(mask >> v & 1ull)) new_index[static_cast<std::size_t>(v)] = next++;
  const Vertex contracted = next;
  std::set<Edge> es;
  for (const Edge& e : g.edges()) {
    bool iu = mask >> e.u & 1ull;
    bool iv = mask >> e.v & 1ull;
    if (iu && iv) continue;
    if (!iu && !iv)
      es.insert(Edge(new_index[static_cast<std::size_t>(e.u)],
                     new_index[static_cast<std::size_t>(e.v)]));
    else
      es.insert(Edge(new_index[static_cast<std::size_t>(iu ? e.v : e.u)],
                     contracted));
  }
  return Graph(outside + 1, {es.begin(), es.end()});
}

CutClassification classify_cut(const Graph& g, const std::vector<Vertex>& xs) {
  EdgeCut cut = edge_cut(g, xs);  // validates the shore
  CutClassification out;

  // Tight: only odd shores qualify (a perfect matching meets the cut with
  // the parity of |X|), and no two disjoint boundary edges may share a
  // perfect matching.
  if (cut.shore.size() % 2 == 1) {
    bool two_together = false;
    const auto& b = cut.boundary;
    for (std::size_t i = 0; i < b.size() && !two_together; ++i)
      for (std::size_t j = i + 1; j < b.size() && !two_together; ++j) {
        if (b[i].meets(b[j])) continue;
        if (perfect_matching_with(g, {b[i], b[j]}, {}).has_value())
          two_together = true;
      }
    out.tight = !two_together;
  }

  std::uint64_t mask = subset_mask(g, xs);
  std::uint64_t full = g.order() == 64 ? ~0ull : (1ull << g.order()) - 1;
  std::vector<Vertex> complement = mask_to_vertices(full & ~mask);
  out.separating = is_matching_covered(contract_simple(g, complement)) &&
                   is_matching_covered(contract_simple(g, xs));
  out.good = out.separating && !out.tight;
  return out;
}

bool is_brick(const Graph& g) {
  if (g.order() < 4 || g.order() % 2 != 0) return false;
  if (!is_connected(g)) return false;
  if (connectivity(g).vertex < 3) return false;
  return is_bicritical(g);
}

bool is_brace(const Graph& g) {
  if (g.order() < 2 || g.order() % 2 != 0) return false;
  auto bp = is_bipartite(g);
  if (!bp) return false;
  if (!is_matching_covered(g)) return false;
  if (bp->a.size() != bp->b.size()) return false;
  // 2-extendability: removing any two vertices per class leaves a perfect
  // matching.
  for (std::size_t i = 0; i < bp->a.size(); ++i)
    for (std::size_t j = i + 1; j < bp->a.size(); ++j)
      for (std::size_t k = 0; k < bp->b.size(); ++k)
        for (std::size_t l = k + 1; l < bp->b.size(); ++l) {
          Graph h = minus_vertices(
              g, {bp->a[i], bp->a[j], bp->b[k], bp->b[l]});
          if (!has_perfect_matching(h)) return false;
        }
  return true;
}

std::optional<std::pair<Edge, Edge>> is_near_bipartite(const Graph& g) {
  if (is_bipartite(g).has_value())
    throw DomainError("near-bipartite test needs a non-bipartite graph");
  if (!is_matching_covered(g))
    throw DomainError("near-bipartite test needs a matching covered graph");
  // For a 3-edge-connected cubic host a bipartite remainder is
  // automatically matching covered, so the check can be skipped.
  const bool fast_path =
      g.is_cubic() && connectivity(g).edge >= 3;
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      Graph h = minus_edges(g, {es[i], es[j]});
      if (!is_bipartite(h).has_value()) continue;
      if (fast_path || is_matching_covered(h))
        return std::make_pair(es[i], es[j]);
    }
  return std::nullopt;
}

bool is_essentially_4ec(const Graph& g) {
  if (!g.is_cubic())
    throw DomainError("essential 4-edge-connectivity is a cubic notion");
  if (!is_connected(g)) return false;
  if (connectivity(g).edge < 2) return false;
  return enumerate_nontrivial_3cuts(g).empty();
}

DMPartition dm_witness(const Graph& g, const Edge& e) {
  auto bp = is_bipartite(g);
  if (!bp) throw DomainError("witness construction needs a bipartite graph");
  if (!g.has_edge(e)) throw DomainError("no such edge: " + to_string(e));
  Matching pm = maximum_matching(g);
  if (pm.size() * 2 != g.order())
    throw DomainError("witness construction needs a perfect matching");
  if (perfect_matching_with(g, {e}, {}).has_value())
    throw NotApplicableError("edge lies in a perfect matching: " +
                             to_string(e));

  std::uint64_t a_mask = 0;
  for (Vertex v : bp->a) a_mask |= 1ull << v;
  std::vector<int> mate(static_cast<std::size_t>(g.order()), -1);
  for (const Edge& m : pm.edges) {
    mate[static_cast<std::size_t>(m.u)] = m.v;
    mate[static_cast<std::size_t>(m.v)] = m.u;
  }
  const Vertex b0 = (a_mask >> e.u & 1ull) ? e.v : e.u;

  // Alternating reachability from b0 in g - e: matched arcs B -> A,
  // unmatched arcs A -> B.
  std::uint64_t reached_b = 1ull << b0;
  std::uint64_t reached_a = 0;
  std::vector<Vertex> stack{b0};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (!(a_mask >> v & 1ull)) {
      Vertex w = mate[static_cast<std::size_t>(v)];
      if (!(reached_a >> w & 1ull)) {
        reached_a |= 1ull << w;
        stack.push_back(w);
      }
    } else {
      for (Vertex w : g.neighbors(v)) {
        if (Edge(v, w) == e) continue;
        if (w == mate[static_cast<std::size_t>(v)]) continue;
        if (!(reached_b >> w & 1ull)) {
          reached_b |= 1ull << w;
          stack.push_back(w);
        }
      }
    }
  }
  DMPartition out;
  for (Vertex v : bp->a)
    ((reached_a >> v & 1ull) ? out.a1 : out.a2).push_back(v);
  for (Vertex v : bp->b)
    ((reached_b >> v & 1ull) ? out.b1 : out.b2).push_back(v);
  return out;
}

std::vector<std::vector<Vertex>> doubleton_decomposition(const Graph& g) {
  if (!g.is_cubic() || !is_essentially_4ec(g))
    throw DomainError(
        "decomposition needs an essentially 4-edge-connected cubic graph");
  if (!is_brick(g)) throw DomainError("decomposition needs a brick");
  if (g.order() == 4) throw DomainError("K4 is excluded");
  auto doubletons = removable_doubletons(g);
  if (doubletons.size() < 2)
    throw DomainError("decomposition needs at least two removable doubletons");
  std::vector<Edge> all;
  for (const auto& [e, f] : doubletons) {
    all.push_back(e);
    all.push_back(f);
  }
  Graph h = minus_edges(g, all);
  auto parts = components(h);
  const std::size_t s = doubletons.size();
  if (parts.size() != s)
    throw DomainError("doubleton removal did not split into one part per doubleton");

  auto part_of = [&](Vertex v) -> std::size_t {
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (std::binary_search(parts[i].begin(), parts[i].end(), v)) return i;
    throw DomainError("vertex missing from decomposition");
  };
  // Each doubleton must join exactly one pair of parts, and the pairs must
  // chain into a single cycle.
  std::map<std::size_t, std::vector<std::size_t>> adj;
  for (const auto& [e, f] : doubletons) {
    std::size_t pu = part_of(e.u), pv = part_of(e.v);
    std::size_t qu = part_of(f.u), qv = part_of(f.v);
    if (pu == pv || qu == qv || std::minmax(pu, pv) != std::minmax(qu, qv))
      throw DomainError("doubleton does not join two parts cleanly");
    adj[pu].push_back(pv);
    adj[pv].push_back(pu);
  }
  for (const auto& [part, nbrs] : adj)
    if (nbrs.size() != 2)
      throw DomainError("doubleton cuts do not form a single cycle");
  // Verify each part is balanced bipartite.
  for (const auto& part : parts) {
    Graph sub = induced_subgraph(h, part);
    auto bp = is_bipartite(sub);
    if (!bp || bp->a.size() != bp->b.size())
      throw DomainError("part is not balanced bipartite");
  }
  // Walk the cycle starting at the part containing vertex 0, toward the
  // smaller-indexed neighbor.
  std::vector<std::vector<Vertex>> out;
  std::size_t start = part_of(0);
  std::size_t prev = start;
  std::size_t cur = std::min(adj[start][0], adj[start][1]);
  out.push_back(parts[start]);
  while (cur != start) {
    out.push_back(parts[cur]);
    std::size_t next =
        adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    // s == 2 degenerates to a 2-cycle; both neighbors equal.
    if (s == 2) break;
    prev = cur;
    cur = next;
  }
  return out;
}

}  // namespace mcov
