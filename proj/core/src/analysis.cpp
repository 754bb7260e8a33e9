#include "mcov/analysis.hpp"

#include <sstream>

#include <json.hpp>

#include "mcov/matching.hpp"

namespace mcov {

int max_removable_matching(const Graph& g) {
  auto removable = removable_edges(g);  // validates matching covered
  Graph sub(g.order(), removable);
  return maximum_matching(sub).size();
}

AnalysisReport analyze(const Graph& g) {
  AnalysisReport r;
  r.order = g.order();
  r.cubic = g.is_cubic();
  r.matching_covered = is_matching_covered(g);
  if (r.cubic)
    r.essentially_4ec = is_connected(g) ? is_essentially_4ec(g) : false;
  if (!r.matching_covered) return r;
  r.brick = is_brick(g);
  r.brace = is_brace(g);
  r.near_bipartite = is_bipartite(g).has_value()
                         ? false
                         : is_near_bipartite(g).has_value();
  RemovableClassification cls = removable_classification(g);
  r.removable_edge_count = static_cast<int>(cls.removable.size());
  r.doubleton_count = static_cast<int>(cls.doubletons.size());
  r.removable_class_count = static_cast<int>(cls.class_count());
  r.neither_count = static_cast<int>(cls.neither.size());
  Graph sub(g.order(), cls.removable);
  r.max_removable_matching = maximum_matching(sub).size();
  return r;
}

namespace {

std::string cell(const std::optional<bool>& v) {
  if (!v) return "NA";
  return *v ? "true" : "false";
}

std::string cell(const std::optional<int>& v) {
  if (!v) return "NA";
  return std::to_string(*v);
}

void put(nlohmann::json& j, const char* key, const std::optional<bool>& v) {
  j[key] = v ? nlohmann::json(*v) : nlohmann::json();
}

void put(nlohmann::json& j, const char* key, const std::optional<int>& v) {
  j[key] = v ? nlohmann::json(*v) : nlohmann::json();
}

}  // namespace

std::string analysis_csv_header() {
  return "graph6,order,cubic,matching_covered,brick,brace,near_bipartite,"
         "essentially_4ec,removable_edge_count,doubleton_count,"
         "removable_class_count,max_removable_matching,neither_count";
}

std::string analysis_csv_row(const std::string& graph6,
                             const AnalysisReport& r) {
  std::ostringstream out;
  out << graph6 << ',' << r.order << ',' << (r.cubic ? "true" : "false") << ','
      << (r.matching_covered ? "true" : "false") << ',' << cell(r.brick) << ','
      << cell(r.brace) << ',' << cell(r.near_bipartite) << ','
      << cell(r.essentially_4ec) << ',' << cell(r.removable_edge_count) << ','
      << cell(r.doubleton_count) << ',' << cell(r.removable_class_count) << ','
      << cell(r.max_removable_matching) << ',' << cell(r.neither_count);
  return out.str();
}

std::string analysis_json(const std::string& graph6, const AnalysisReport& r) {
  nlohmann::json j;
  j["graph6"] = graph6;
  j["order"] = r.order;
  j["cubic"] = r.cubic;
  j["matching_covered"] = r.matching_covered;
  put(j, "brick", r.brick);
  put(j, "brace", r.brace);
  put(j, "near_bipartite", r.near_bipartite);
  put(j, "essentially_4ec", r.essentially_4ec);
  put(j, "removable_edge_count", r.removable_edge_count);
  put(j, "doubleton_count", r.doubleton_count);
  put(j, "removable_class_count", r.removable_class_count);
  put(j, "max_removable_matching", r.max_removable_matching);
  put(j, "neither_count", r.neither_count);
  return j.dump();
}

}  // namespace mcov
