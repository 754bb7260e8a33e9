#pragma once

#include <optional>
#include <string>

#include "mcov/graph.hpp"
#include "mcov/structure.hpp"

namespace mcov {

/// Summary of one graph. Classification fields are absent when they do not
/// apply (non matching covered input, non-cubic input for the cubic-only
/// notions).
struct AnalysisReport {
  int order = 0;
  bool cubic = false;
  bool matching_covered = false;
  std::optional<bool> brick;
  std::optional<bool> brace;
  std::optional<bool> near_bipartite;
  std::optional<bool> essentially_4ec;
  std::optional<int> removable_edge_count;
  std::optional<int> doubleton_count;
  std::optional<int> removable_class_count;
  std::optional<int> max_removable_matching;
  std::optional<int> neither_count;
};

AnalysisReport analyze(const Graph& g);

/// Size of a maximum matching inside the subgraph spanned by the removable
/// edges. Requires a matching covered graph.
int max_removable_matching(const Graph& g);

std::string analysis_csv_header();
std::string analysis_csv_row(const std::string& graph6,
                             const AnalysisReport& r);
std::string analysis_json(const std::string& graph6, const AnalysisReport& r);

}  // namespace mcov
