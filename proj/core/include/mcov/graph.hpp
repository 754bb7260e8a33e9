#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcov/errors.hpp"

namespace mcov {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;

  Edge() : u(0), v(0) {}
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw DomainError("loop edge (" + std::to_string(a) + ")");
  }

  bool touches(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool meets(const Edge& o) const {
    return touches(o.u) || touches(o.v);
  }

  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

/// Immutable simple undirected graph on vertices 0..order-1 with optional
/// per-vertex role labels. Order is capped at 62 only by the graph6 codec;
/// the in-memory representation allows up to 64 vertices.
class Graph {
public:
  Graph() = default;
  Graph(int order, std::vector<Edge> edges,
        std::map<Vertex, std::string> labels = {});

  int order() const { return order_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::map<Vertex, std::string>& labels() const { return labels_; }

  bool adjacent(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }
  int degree(Vertex v) const;
  bool is_cubic() const;
  std::vector<Vertex> neighbors(Vertex v) const;
  std::uint64_t adjacency_mask(Vertex v) const;

  std::optional<std::string> label(Vertex v) const;
  /// Smallest vertex carrying the given label, if any.
  std::optional<Vertex> vertex_with_label(const std::string& label) const;

  bool operator==(const Graph& o) const {
    return order_ == o.order_ && edges_ == o.edges_ && labels_ == o.labels_;
  }

  static Graph complete(int n);
  static Graph cycle(int n);

private:
  void check_vertex(Vertex v) const;

  int order_ = 0;
  std::vector<Edge> edges_;                 // sorted, duplicate free
  std::vector<std::uint64_t> adj_;          // adjacency rows as bitmasks
  std::map<Vertex, std::string> labels_;    // values pairwise distinct
};

/// A shore together with its boundary edges.
struct EdgeCut {
  std::vector<Vertex> shore;   // sorted
  std::vector<Edge> boundary;  // sorted
  bool nontrivial = false;
};

struct Connectivity {
  int vertex;
  int edge;
};

struct Bipartition {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
};

// -- basic predicates and traversals ----------------------------------------

bool is_connected(const Graph& g);
/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<Vertex>> components(const Graph& g);
/// Two-coloring of every component when one exists. Component roots (their
/// smallest vertices) are placed in side `a`.
std::optional<Bipartition> is_bipartite(const Graph& g);

// -- subset helpers ----------------------------------------------------------

std::uint64_t subset_mask(const Graph& g, const std::vector<Vertex>& xs);
std::vector<Vertex> mask_to_vertices(std::uint64_t mask);

// -- derived graphs ----------------------------------------------------------

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& xs);
/// Contract the set X to a single vertex, appended last and labelled.
/// Raises MultigraphError when some outside vertex has two neighbors in X.
Graph contract(const Graph& g, const std::vector<Vertex>& xs);
Graph minus_edge(const Graph& g, const Edge& e);
Graph minus_edges(const Graph& g, const std::vector<Edge>& es);
Graph minus_vertices(const Graph& g, const std::vector<Vertex>& xs);

// -- cuts and connectivity ---------------------------------------------------

EdgeCut edge_cut(const Graph& g, const std::vector<Vertex>& xs);
/// All nontrivial 3-cuts of a connected cubic graph, one EdgeCut per
/// shore/complement pair (the lexicographically smaller shore is reported).
std::vector<EdgeCut> enumerate_nontrivial_3cuts(const Graph& g);
/// Exact vertex and edge connectivity of a connected graph of order >= 2.
Connectivity connectivity(const Graph& g);
/// Whether the four quadrants X∩Y, X∩Ȳ, X̄∩Y, X̄∩Ȳ are all nonempty.
bool cuts_cross(const Graph& g, const std::vector<Vertex>& xs,
                const std::vector<Vertex>& ys);

}  // namespace mcov
