#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mcov/graph.hpp"
#include "mcov/matching.hpp"

namespace mcov {

/// Per-edge removability status of a matching covered graph. Doubletons are
/// stored as unordered pairs without assuming disjointness; `neither` are
/// the edges in no removable class.
struct RemovableClassification {
  std::vector<Edge> removable;                    // sorted
  std::vector<std::pair<Edge, Edge>> doubletons;  // each pair ordered, sorted
  std::vector<Edge> neither;                      // sorted

  std::size_t class_count() const {
    return removable.size() + doubletons.size();
  }
  /// Union of all doubleton edges.
  std::vector<Edge> doubleton_edges() const;
  /// Whether some edge lies in two different doubletons.
  bool has_overlapping_doubletons() const;
};

/// Witness that an edge of a bipartite graph lies in no perfect matching:
/// no edge joins A1 to B2, |A1| = |B1|, and the edge joins A2 to B1.
struct DMPartition {
  std::vector<Vertex> a1, a2, b1, b2;
};

struct CutClassification {
  bool separating = false;
  bool tight = false;
  bool good = false;  // separating and not tight
};

bool is_matching_covered(const Graph& g);

/// Whether every perfect matching through e also uses f.
bool depends_on(const Graph& g, const Edge& e, const Edge& f);

RemovableClassification removable_classification(const Graph& g);
std::vector<Edge> removable_edges(const Graph& g);
std::vector<std::pair<Edge, Edge>> removable_doubletons(const Graph& g);

/// Tight / separating / good status of the cut with the given shore.
/// The host is assumed matching covered.
CutClassification classify_cut(const Graph& g, const std::vector<Vertex>& xs);

/// 3-connected and bicritical.
bool is_brick(const Graph& g);

/// Bipartite, matching covered, free of nontrivial tight cuts (tested via
/// 2-extendability).
bool is_brace(const Graph& g);

/// First pair (lexicographic) whose removal leaves a bipartite matching
/// covered graph, if any. Input must be matching covered and non-bipartite.
std::optional<std::pair<Edge, Edge>> is_near_bipartite(const Graph& g);

/// 2-edge-connected cubic graph free of nontrivial 3-cuts.
bool is_essentially_4ec(const Graph& g);

/// Constructive witness for a non-allowed edge of a bipartite graph with a
/// perfect matching. Raises NotApplicableError when the edge is allowed.
DMPartition dm_witness(const Graph& g, const Edge& e);

/// Components of g minus all doubleton edges, in the cyclic order induced
/// by the doubleton cuts. Requires an essentially 4-edge-connected cubic
/// brick other than K4 with at least two removable doubletons.
std::vector<std::vector<Vertex>> doubleton_decomposition(const Graph& g);

// internal building block, exposed for the harness: contraction that
// collapses parallel edges instead of failing (matching-covered status is
// insensitive to multiplicities)
Graph contract_simple(const Graph& g, const std::vector<Vertex>& xs);

}  // namespace mcov
