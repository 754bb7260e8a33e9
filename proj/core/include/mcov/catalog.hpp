#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcov/graph.hpp"

namespace mcov {

/// One named graph bundled with the toolkit. Entries whose adjacency is not
/// derivable from available sources ship as pending: they are listed but
/// cannot be fetched.
struct CatalogEntry {
  std::string name;
  std::string provenance;
  bool pending = false;
  int order = 0;
  Graph graph;  // empty when pending
};

class Catalog {
public:
  /// Loads and validates the bundled data. Structural expectations from the
  /// manifest (order, degree profile, removable counts) are enforced here;
  /// a mismatch raises CatalogIntegrityError.
  explicit Catalog(const std::string& dir);

  const Graph& get(const std::string& name) const;
  const CatalogEntry& entry(const std::string& name) const;
  bool has(const std::string& name) const;
  std::vector<std::string> names() const;  // sorted, pending included

private:
  std::map<std::string, CatalogEntry> entries_;
};

/// Directory resolution: $MCOV_CATALOG, else the first existing compiled-in
/// location.
std::string default_catalog_dir();

/// Shared catalog at the default location, loaded once.
const Catalog& default_catalog();

/// Lookup in the default catalog.
Graph named_graph(const std::string& name);

}  // namespace mcov
