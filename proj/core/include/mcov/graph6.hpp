#pragma once

#include <istream>
#include <string>
#include <vector>

#include "mcov/graph.hpp"

namespace mcov {

/// Decode one short-form graph6 line (order <= 62). Labels come back empty.
Graph parse_graph6(const std::string& line);

/// Encode a graph of order <= 62 in short-form graph6.
std::string to_graph6(const Graph& g);

struct NumberedGraph {
  long line;  // 1-based input line number
  std::string graph6;
  Graph graph;
};

/// Read a whole census: one graph per line, optional ">>graph6<<" header
/// lines skipped. Parse failures are rethrown as InputError with the line
/// number.
std::vector<NumberedGraph> read_graph6_stream(std::istream& in);

}  // namespace mcov
