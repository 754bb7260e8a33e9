#include "mcov/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace mcov {

namespace {

constexpr int kMaxOrder = 64;

int ctz(std::uint64_t x) { return std::countr_zero(x); }

}  // namespace

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

Graph::Graph(int order, std::vector<Edge> edges,
             std::map<Vertex, std::string> labels)
    : order_(order), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (order_ < 0 || order_ > kMaxOrder)
    throw DomainError("graph order out of range: " + std::to_string(order_));
  std::sort(edges_.begin(), edges_.end());
  adj_.assign(static_cast<std::size_t>(order_), 0);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.v >= order_)
      throw DomainError("edge endpoint out of range: " + to_string(e));
    if (i > 0 && edges_[i - 1] == e)
      throw DomainError("parallel edge: " + to_string(e));
    adj_[static_cast<std::size_t>(e.u)] |= 1ull << e.v;
    adj_[static_cast<std::size_t>(e.v)] |= 1ull << e.u;
  }
  std::set<std::string> seen;
  for (const auto& [v, name] : labels_) {
    if (v < 0 || v >= order_)
      throw DomainError("label on unknown vertex " + std::to_string(v));
    if (!seen.insert(name).second)
      throw DomainError("duplicate label: " + name);
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order_)
    throw DomainError("vertex out of range: " + std::to_string(v));
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  return (adj_[static_cast<std::size_t>(a)] >> b) & 1ull;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

bool Graph::is_cubic() const {
  for (Vertex v = 0; v < order_; ++v)
    if (degree(v) != 3) return false;
  return true;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return mask_to_vertices(adj_[static_cast<std::size_t>(v)]);
}

std::uint64_t Graph::adjacency_mask(Vertex v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

std::optional<std::string> Graph::label(Vertex v) const {
  check_vertex(v);
  auto it = labels_.find(v);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

std::optional<Vertex> Graph::vertex_with_label(const std::string& label) const {
  for (const auto& [v, name] : labels_)
    if (name == label) return v;
  return std::nullopt;
}

Graph Graph::complete(int n) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, std::move(es));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(es));
}

std::uint64_t subset_mask(const Graph& g, const std::vector<Vertex>& xs) {
  std::uint64_t m = 0;
  for (Vertex v : xs) {
    if (v < 0 || v >= g.order())
      throw DomainError("vertex out of range: " + std::to_string(v));
    std::uint64_t bit = 1ull << v;
    if (m & bit)
      throw DomainError("duplicate vertex in subset: " + std::to_string(v));
    m |= bit;
  }
  return m;
}

std::vector<Vertex> mask_to_vertices(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (std::uint64_t m = mask; m; m &= m - 1) out.push_back(ctz(m));
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::uint64_t seen = 1ull;
  std::uint64_t frontier = 1ull;
  while (frontier) {
    Vertex v = ctz(frontier);
    frontier &= frontier - 1;
    std::uint64_t nb = g.adjacency_mask(v) & ~seen;
    seen |= nb;
    frontier |= nb;
  }
  return std::popcount(seen) == g.order();
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::uint64_t left =
      g.order() == 64 ? ~0ull : (1ull << g.order()) - 1;
  while (left) {
    Vertex root = ctz(left);
    std::uint64_t comp = 1ull << root;
    std::uint64_t frontier = comp;
    while (frontier) {
      Vertex v = ctz(frontier);
      frontier &= frontier - 1;
      std::uint64_t nb = g.adjacency_mask(v) & ~comp;
      comp |= nb;
      frontier |= nb;
    }
    out.push_back(mask_to_vertices(comp));
    left &= ~comp;
  }
  return out;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  Bipartition bp;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (color[static_cast<std::size_t>(root)] != -1) continue;
    color[static_cast<std::size_t>(root)] = 0;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (color[static_cast<std::size_t>(w)] == -1) {
          color[static_cast<std::size_t>(w)] =
              1 - color[static_cast<std::size_t>(v)];
          stack.push_back(w);
        } else if (color[static_cast<std::size_t>(w)] ==
                   color[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  for (Vertex v = 0; v < g.order(); ++v)
    (color[static_cast<std::size_t>(v)] == 0 ? bp.a : bp.b).push_back(v);
  return bp;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& xs) {
  std::uint64_t mask = subset_mask(g, xs);
  std::vector<Vertex> sorted = mask_to_vertices(mask);
  std::vector<int> new_index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    new_index[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
  std::vector<Edge> es;
  for (const Edge& e : g.edges())
    if ((mask >> e.u & 1ull) && (mask >> e.v & 1ull))
      es.emplace_back(new_index[static_cast<std::size_t>(e.u)],
                      new_index[static_cast<std::size_t>(e.v)]);
  std::map<Vertex, std::string> labels;
  for (const auto& [v, name] : g.labels())
    if (mask >> v & 1ull)
      labels[new_index[static_cast<std::size_t>(v)]] = name;
  return Graph(static_cast<int>(sorted.size()), std::move(es),
               std::move(labels));
}

namespace {

std::string unique_label(const std::set<std::string>& taken,
                         std::string candidate) {
  while (taken.count(candidate)) candidate += "'";
  return candidate;
}

}  // namespace

Graph contract(const Graph& g, const std::vector<Vertex>& xs) {
  std::uint64_t mask = subset_mask(g, xs);
  if (mask == 0) throw DomainError("contraction of an empty set");
  int outside = g.order() - std::popcount(mask);
  if (outside == 0)
    throw DomainError("contraction of the full vertex set");
  for (Vertex w = 0; w < g.order(); ++w) {
    if (mask >> w & 1ull) continue;
    if (std::popcount(g.adjacency_mask(w) & mask) >= 2)
      throw MultigraphError("contraction would create parallel edges at " +
                            std::to_string(w));
  }
  // Outside vertices keep their relative order; the contracted vertex is
  // appended last.
  std::vector<int> new_index(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!(mask >> v & 1ull)) new_index[static_cast<std::size_t>(v)] = next++;
  const Vertex contracted = next;
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    bool iu = mask >> e.u & 1ull;
    bool iv = mask >> e.v & 1ull;
    if (iu && iv) continue;
    if (!iu && !iv)
      es.emplace_back(new_index[static_cast<std::size_t>(e.u)],
                      new_index[static_cast<std::size_t>(e.v)]);
    else
      es.emplace_back(
          new_index[static_cast<std::size_t>(iu ? e.v : e.u)], contracted);
  }
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  std::map<Vertex, std::string> labels;
  std::set<std::string> taken;
  for (const auto& [v, name] : g.labels())
    if (!(mask >> v & 1ull)) {
      labels[new_index[static_cast<std::size_t>(v)]] = name;
      taken.insert(name);
    }
  labels[contracted] = unique_label(taken, "contracted:x");
  return Graph(outside + 1, std::move(es), std::move(labels));
}

Graph minus_edge(const Graph& g, const Edge& e) {
  return minus_edges(g, {e});
}

Graph minus_edges(const Graph& g, const std::vector<Edge>& es) {
  for (const Edge& e : es)
    if (!g.has_edge(e)) throw DomainError("no such edge: " + to_string(e));
  std::vector<Edge> keep;
  for (const Edge& e : g.edges())
    if (std::find(es.begin(), es.end(), e) == es.end()) keep.push_back(e);
  return Graph(g.order(), std::move(keep), g.labels());
}

Graph minus_vertices(const Graph& g, const std::vector<Vertex>& xs) {
  std::uint64_t mask = subset_mask(g, xs);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!(mask >> v & 1ull)) keep.push_back(v);
  return induced_subgraph(g, keep);
}

EdgeCut edge_cut(const Graph& g, const std::vector<Vertex>& xs) {
  std::uint64_t mask = subset_mask(g, xs);
  int inside = std::popcount(mask);
  if (inside == 0 || inside == g.order())
    throw DomainError("shore must be a proper non-empty subset");
  EdgeCut cut;
  cut.shore = mask_to_vertices(mask);
  for (const Edge& e : g.edges())
    if (((mask >> e.u) & 1ull) != ((mask >> e.v) & 1ull))
      cut.boundary.push_back(e);
  cut.nontrivial = inside >= 2 && g.order() - inside >= 2;
  return cut;
}

std::vector<EdgeCut> enumerate_nontrivial_3cuts(const Graph& g) {
  if (!g.is_cubic()) throw DomainError("3-cut enumeration needs a cubic graph");
  if (!is_connected(g)) throw DomainError("graph must be connected");
  const auto& es = g.edges();
  const int m = static_cast<int>(es.size());
  std::set<std::vector<Vertex>> shores;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        Graph h = minus_edges(g, {es[i], es[j], es[k]});
        auto comps = components(h);
        if (comps.size() < 2) continue;
        for (const auto& comp : comps) {
          int c = static_cast<int>(comp.size());
          if (c < 2 || g.order() - c < 2) continue;
          EdgeCut cut = edge_cut(g, comp);
          if (cut.boundary.size() != 3) continue;
          std::uint64_t mask = subset_mask(g, comp);
          std::uint64_t full =
              g.order() == 64 ? ~0ull : (1ull << g.order()) - 1;
          std::vector<Vertex> other = mask_to_vertices(full & ~mask);
          shores.insert(std::min(comp, other));
        }
      }
  std::vector<EdgeCut> out;
  for (const auto& shore : shores) out.push_back(edge_cut(g, shore));
  return out;
}

namespace {

// Unit-capacity max flow by repeated BFS augmentation; enough to separate
// desk-scale graphs.
struct FlowNet {
  int n;
  std::vector<std::vector<int>> cap;

  explicit FlowNet(int n_) : n(n_), cap(n_, std::vector<int>(n_, 0)) {}

  int max_flow(int s, int t, int stop_at) {
    int flow = 0;
    while (flow < stop_at) {
      std::vector<int> prev(static_cast<std::size_t>(n), -1);
      prev[static_cast<std::size_t>(s)] = s;
      std::vector<int> queue{s};
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[static_cast<std::size_t>(qi)];
        for (int w = 0; w < n; ++w)
          if (prev[static_cast<std::size_t>(w)] == -1 &&
              cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] >
                  0) {
            prev[static_cast<std::size_t>(w)] = v;
            queue.push_back(w);
          }
      }
      if (prev[static_cast<std::size_t>(t)] == -1) break;
      for (int v = t; v != s; v = prev[static_cast<std::size_t>(v)]) {
        int u = prev[static_cast<std::size_t>(v)];
        --cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
        ++cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
      }
      ++flow;
    }
    return flow;
  }
};

int edge_flow(const Graph& g, int s, int t) {
  FlowNet net(g.order());
  for (const Edge& e : g.edges()) {
    net.cap[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    net.cap[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  }
  return net.max_flow(s, t, g.order() * g.order());
}

// Vertex connectivity flow with the usual in/out splitting.
int vertex_flow(const Graph& g, int s, int t) {
  const int n = g.order();
  FlowNet net(2 * n);
  auto in = [](int v) { return 2 * v; };
  auto out = [](int v) { return 2 * v + 1; };
  const int inf = n;
  for (int v = 0; v < n; ++v)
    net.cap[static_cast<std::size_t>(in(v))][static_cast<std::size_t>(
        out(v))] = (v == s || v == t) ? inf : 1;
  for (const Edge& e : g.edges()) {
    net.cap[static_cast<std::size_t>(out(e.u))]
           [static_cast<std::size_t>(in(e.v))] = inf;
    net.cap[static_cast<std::size_t>(out(e.v))]
           [static_cast<std::size_t>(in(e.u))] = inf;
  }
  return net.max_flow(out(s), in(t), inf);
}

}  // namespace

Connectivity connectivity(const Graph& g) {
  if (g.order() < 2) throw DomainError("connectivity needs order >= 2");
  if (!is_connected(g)) throw DomainError("graph is disconnected");
  int lambda = g.order();
  for (int t = 1; t < g.order(); ++t)
    lambda = std::min(lambda, edge_flow(g, 0, t));
  int kappa = g.order() - 1;
  bool any_nonadjacent = false;
  for (int s = 0; s < g.order(); ++s)
    for (int t = s + 1; t < g.order(); ++t) {
      if (g.adjacent(s, t)) continue;
      any_nonadjacent = true;
      kappa = std::min(kappa, vertex_flow(g, s, t));
    }
  if (!any_nonadjacent) kappa = g.order() - 1;  // complete graph
  return Connectivity{kappa, lambda};
}

bool cuts_cross(const Graph& g, const std::vector<Vertex>& xs,
                const std::vector<Vertex>& ys) {
  std::uint64_t x = subset_mask(g, xs);
  std::uint64_t y = subset_mask(g, ys);
  std::uint64_t full = g.order() == 64 ? ~0ull : (1ull << g.order()) - 1;
  if (x == 0 || x == full || y == 0 || y == full)
    throw DomainError("shores must be proper non-empty subsets");
  return (x & y) && (x & ~y & full) && (~x & y & full) && (~x & ~y & full);
}

}  // namespace mcov
