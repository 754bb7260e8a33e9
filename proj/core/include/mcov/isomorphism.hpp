#pragma once

#include <string>

#include "mcov/graph.hpp"

namespace mcov {

/// Label-invariant canonical form: the graph6 encoding of a canonical
/// relabeling. Equal exactly on isomorphic graphs; role labels are ignored.
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace mcov
