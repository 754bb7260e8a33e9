#include "mcov/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "mcov/constructions.hpp"
#include "mcov/graph6.hpp"
#include "mcov/isomorphism.hpp"
#include "mcov/structure.hpp"

namespace mcov {

namespace {

using nlohmann::json;

Graph reference_construction(const std::string& name) {
  if (name == "k4") return Graph::complete(4);
  if (name == "c6bar") {
    // Complement of the 6-cycle, i.e. the prism.
    std::vector<Edge> es;
    Graph c6 = Graph::cycle(6);
    for (Vertex a = 0; a < 6; ++a)
      for (Vertex b = a + 1; b < 6; ++b)
        if (!c6.adjacent(a, b)) es.emplace_back(a, b);
    return Graph(6, std::move(es));
  }
  if (name == "r8") return staircase(1);
  if (name == "g0star") return Graph(3, {{0, 1}, {0, 2}, {1, 2}});
  if (name == "g2star")
    return Graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  if (name == "g3star") {
    std::vector<Edge> es;
    for (int t = 0; t < 3; ++t) {
      es.emplace_back(3 * t, 3 * t + 1);
      es.emplace_back(3 * t, 3 * t + 2);
      es.emplace_back(3 * t + 1, 3 * t + 2);
    }
    es.emplace_back(1, 3);
    es.emplace_back(4, 6);
    es.emplace_back(7, 0);
    return Graph(9, std::move(es));
  }
  if (name == "g4star")
    return Graph(7, {{0, 1},
                     {0, 4},
                     {1, 2},
                     {1, 3},
                     {2, 3},
                     {2, 5},
                     {4, 5},
                     {4, 6},
                     {5, 6}});
  return Graph();
}

void validate_entry(const CatalogEntry& entry, const json& spec) {
  const Graph& g = entry.graph;
  if (g.order() != entry.order)
    throw CatalogIntegrityError(entry.name + ": order " +
                                std::to_string(g.order()) + ", expected " +
                                std::to_string(entry.order));
  if (spec.contains("degree_profile")) {
    std::vector<int> degrees;
    for (Vertex v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
    std::sort(degrees.begin(), degrees.end());
    std::vector<int> expected = spec["degree_profile"].get<std::vector<int>>();
    std::sort(expected.begin(), expected.end());
    if (degrees != expected)
      throw CatalogIntegrityError(entry.name + ": degree profile mismatch");
  }
  Graph reference = reference_construction(entry.name);
  if (reference.order() > 0 && !is_isomorphic(g, reference))
    throw CatalogIntegrityError(entry.name +
                                ": stored graph differs from its construction");
  if (spec.contains("removable_edge_count")) {
    auto removable = removable_edges(g);
    if (static_cast<int>(removable.size()) !=
        spec["removable_edge_count"].get<int>())
      throw CatalogIntegrityError(entry.name + ": removable edge count " +
                                  std::to_string(removable.size()));
  }
  if (spec.contains("removable_class_count")) {
    auto cls = removable_classification(g);
    if (static_cast<int>(cls.class_count()) !=
        spec["removable_class_count"].get<int>())
      throw CatalogIntegrityError(entry.name + ": removable class count " +
                                  std::to_string(cls.class_count()));
  }
  if (spec.contains("brick") && spec["brick"].get<bool>() != is_brick(g))
    throw CatalogIntegrityError(entry.name + ": brick status mismatch");
}

}  // namespace

Catalog::Catalog(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::path manifest_path = fs::path(dir) / "manifest.json";
  std::ifstream in(manifest_path);
  if (!in)
    throw CatalogIntegrityError("cannot open catalog manifest: " +
                                manifest_path.string());
  json manifest;
  try {
    in >> manifest;
  } catch (const json::exception& e) {
    throw CatalogIntegrityError("bad catalog manifest: " +
                                std::string(e.what()));
  }
  for (const auto& spec : manifest.at("entries")) {
    CatalogEntry entry;
    entry.name = spec.at("name").get<std::string>();
    entry.provenance = spec.value("provenance", "");
    entry.order = spec.value("order", 0);
    entry.pending = spec.value("pending", false);
    if (!entry.pending) {
      fs::path file = fs::path(dir) / spec.at("file").get<std::string>();
      std::ifstream gf(file);
      if (!gf)
        throw CatalogIntegrityError("missing catalog file: " + file.string());
      std::string line;
      std::getline(gf, line);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      try {
        entry.graph = parse_graph6(line);
      } catch (const Error& e) {
        throw CatalogIntegrityError(entry.name + ": " + e.what());
      }
      validate_entry(entry, spec);
    }
    entries_[entry.name] = std::move(entry);
  }
}

const CatalogEntry& Catalog::entry(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw LookupError("unknown catalog name: " + name);
  return it->second;
}

const Graph& Catalog::get(const std::string& name) const {
  const CatalogEntry& e = entry(name);
  if (e.pending)
    throw LookupError("catalog entry '" + name +
                      "' is pending figure transcription and has no adjacency");
  return e.graph;
}

bool Catalog::has(const std::string& name) const {
  return entries_.count(name) > 0;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& [name, entry] : entries_) out.push_back(name);
  return out;
}

std::string default_catalog_dir() {
  if (const char* env = std::getenv("MCOV_CATALOG")) return env;
  namespace fs = std::filesystem;
  for (const char* candidate : {
#ifdef MCOV_INSTALL_CATALOG_DIR
           MCOV_INSTALL_CATALOG_DIR,
#endif
#ifdef MCOV_SOURCE_CATALOG_DIR
           MCOV_SOURCE_CATALOG_DIR,
#endif
           "data/catalog"}) {
    if (fs::exists(fs::path(candidate) / "manifest.json")) return candidate;
  }
  throw CatalogIntegrityError(
      "no catalog directory found; set MCOV_CATALOG");
}

const Catalog& default_catalog() {
  static std::once_flag flag;
  static const Catalog* instance = nullptr;
  std::call_once(flag, [] { instance = new Catalog(default_catalog_dir()); });
  return *instance;
}

Graph named_graph(const std::string& name) {
  return default_catalog().get(name);
}

}  // namespace mcov
