#include "mcov/graph6.hpp"

#include <string>

namespace mcov {

namespace {

constexpr int kBias = 63;
constexpr int kMaxShortOrder = 62;

}  // namespace

Graph parse_graph6(const std::string& line) {
  if (line.empty()) throw ParseError("empty graph6 line", 0);
  const unsigned char head = static_cast<unsigned char>(line[0]);
  if (head == 126)
    throw UnsupportedSizeError(
        "long-form graph6 (order > 62) is not supported");
  if (head < kBias || head > kBias + kMaxShortOrder)
    throw ParseError("invalid order byte", 0);
  const int n = head - kBias;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (line.size() < 1 + body)
    throw ParseError("truncated bit field", line.size());
  if (line.size() > 1 + body)
    throw ParseError("trailing junk after bit field", 1 + body);
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex col = 1; col < n; ++col)
    for (Vertex row = 0; row < col; ++row, ++bit) {
      const std::size_t byte_index = 1 + bit / 6;
      const unsigned char c = static_cast<unsigned char>(line[byte_index]);
      if (c < kBias || c > kBias + 63)
        throw ParseError("invalid data byte", byte_index);
      const int value = c - kBias;
      if (value >> (5 - bit % 6) & 1) edges.emplace_back(row, col);
    }
  // Padding bits must be zero for the encoding to round-trip.
  for (; bit < body * 6; ++bit) {
    const std::size_t byte_index = 1 + bit / 6;
    const unsigned char c = static_cast<unsigned char>(line[byte_index]);
    if ((c - kBias) >> (5 - bit % 6) & 1)
      throw ParseError("nonzero padding bit", byte_index);
  }
  return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxShortOrder)
    throw UnsupportedSizeError("graph6 short form is limited to order 62, got " +
                               std::to_string(n));
  std::string out;
  out.push_back(static_cast<char>(kBias + n));
  int acc = 0;
  int filled = 0;
  for (Vertex col = 1; col < n; ++col)
    for (Vertex row = 0; row < col; ++row) {
      acc = acc << 1 | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0)
    out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

std::vector<NumberedGraph> read_graph6_stream(std::istream& in) {
  std::vector<NumberedGraph> out;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) {
      // Header; anything after the marker on the same line is a graph.
      line = line.substr(10);
      if (line.empty()) continue;
    }
    try {
      Graph g = parse_graph6(line);
      out.push_back(NumberedGraph{line_no, line, std::move(g)});
    } catch (const Error& e) {
      throw InputError(e.what(), line_no);
    }
  }
  return out;
}

}  // namespace mcov
