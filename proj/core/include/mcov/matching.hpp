#pragma once

#include <optional>
#include <vector>

#include "mcov/graph.hpp"

namespace mcov {

/// A set of pairwise disjoint edges of some host graph.
struct Matching {
  std::vector<Edge> edges;  // sorted

  int size() const { return static_cast<int>(edges.size()); }
  bool covers(Vertex v) const {
    for (const Edge& e : edges)
      if (e.touches(v)) return true;
    return false;
  }
};

/// Maximum cardinality matching (general graphs, blossom shrinking).
/// Deterministic: greedy lexicographic seed, then augmentation from the
/// smallest exposed vertex with ascending neighbor scans.
Matching maximum_matching(const Graph& g);

/// A perfect matching containing every `forced` and no `forbidden` edge,
/// or nothing when none exists.
std::optional<Matching> perfect_matching_with(const Graph& g,
                                              const std::vector<Edge>& forced,
                                              const std::vector<Edge>& forbidden);

bool has_perfect_matching(const Graph& g);

/// Edges lying in at least one perfect matching. Requires even order.
std::vector<Edge> allowed_edges(const Graph& g);

/// Number of odd components of g - S.
int odd_components(const Graph& g, const std::vector<Vertex>& s);

/// Whether o(g - S) = |S|. Requires a graph with a perfect matching and a
/// non-empty S.
bool is_barrier(const Graph& g, const std::vector<Vertex>& s);

/// Whether g - {x, y} has a perfect matching for every vertex pair.
/// Requires even order >= 4.
bool is_bicritical(const Graph& g);

/// A matching covering all of `must_cover`, containing every `forced` and no
/// `forbidden` edge; vertices outside `must_cover` may stay exposed.
std::optional<Matching> matching_covering(const Graph& g,
                                          const std::vector<Vertex>& must_cover,
                                          const std::vector<Edge>& forced,
                                          const std::vector<Edge>& forbidden);

}  // namespace mcov
