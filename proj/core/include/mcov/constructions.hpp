#pragma once

#include <utility>
#include <vector>

#include "mcov/graph.hpp"

namespace mcov {

/// Correspondence between the edges at the two splicing vertices, given as
/// (neighbor of u in g, neighbor of v in h) pairs. Must cover each side
/// exactly once.
struct SplicePairing {
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

/// Ascending neighbors of u matched to ascending neighbors of v.
SplicePairing canonical_pairing(const Graph& g, Vertex u, const Graph& h,
                                Vertex v);

/// (g - u) ⊎ (h - v) plus one new edge per correspondence pair. Vertices of
/// g - u come first (ascending), then those of h - v.
Graph splice(const Graph& g, Vertex u, const Graph& h, Vertex v,
             const SplicePairing& pairing);
Graph splice(const Graph& g, Vertex u, const Graph& h, Vertex v);

/// Splice with K4 at a degree-3 vertex: replaces v by a triangle whose
/// vertices are appended last and labelled. The three new bonds are the
/// splicing edges, returned by splicing_edges_of_insertion.
Graph insert_triangle(const Graph& g, Vertex v);
/// The three splicing edges of insert_triangle(g, v), as edges of the
/// result graph (neighbor i of v in ascending order bonds triangle vertex i).
std::vector<Edge> splicing_edges_of_insertion(const Graph& g, Vertex v);
/// Successive insertions; the given vertices refer to the original graph.
Graph insert_triangles(const Graph& g, const std::vector<Vertex>& vs);

/// Contract the complement of X (a 3-cut shore with |V \ X| >= 5), then
/// insert a triangle at the contracted vertex.
Graph delta_replacement(const Graph& g, const std::vector<Vertex>& xs);

/// The 2k+6 vertex brick with two triangles joined through w-z and k rungs.
/// Vertices carry labels u,v,w,z,x,y,u1..uk,v1..vk.
Graph staircase(int k);

/// Membership in the family generated from K4 by triangle insertions,
/// decided by backtracking over triangle contractions.
bool is_in_family_G(const Graph& g);
/// All members with at most max_n vertices, ordered by (order, canonical form).
std::vector<Graph> enumerate_family_G(int max_n);

}  // namespace mcov
