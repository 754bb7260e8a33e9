#pragma once

#include <vector>

#include "mcov/graph.hpp"

namespace mcov {
namespace census {

/// All simple cubic graphs on n vertices (connected or not), one per
/// isomorphism class, sorted by canonical form. Generated by edge
/// insertion: subdividing two distinct edges of a smaller cubic graph and
/// joining the subdivision vertices, seeded with the graphs this operation
/// can never produce.
std::vector<Graph> cubic_graphs(int n);

/// The connected members of cubic_graphs(n).
std::vector<Graph> connected_cubic_graphs(int n);

/// Insert an edge between subdivisions of e1 and e2 (distinct edges, a
/// shared endpoint is fine). The two new vertices get the highest indices.
Graph edge_insertion(const Graph& g, const Edge& e1, const Edge& e2);

/// Shrink edge xy back out: remove its endpoints and rejoin their other
/// neighbors. Empty result when that would create a parallel edge.
bool reduction_admissible(const Graph& g, const Edge& xy);

/// Whether some edge admits the reduction inverse to edge_insertion.
bool has_admissible_reduction(const Graph& g);

/// The connected cubic graphs on n vertices with no admissible reduction:
/// assemblies of diamonds (K4 minus an edge) whose ports pair up directly
/// or through independent degree-3 linker vertices.
std::vector<Graph> irreducible_connected(int n);

}  // namespace census
}  // namespace mcov
