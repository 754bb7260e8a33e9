#pragma once

#include <map>
#include <string>
#include <vector>

#include "mcov/graph6.hpp"

namespace mcov {

struct Violation {
  long line = 0;  // census line, 0 for constructed instances
  std::string graph6;
  std::string detail;
};

struct VerificationReport {
  std::string check_id;
  long inputs_processed = 0;
  std::vector<Violation> violations;  // sorted by (line, detail)
  std::map<std::string, long long> counters;
  std::map<std::string, std::vector<std::string>> lists;
  bool skipped = false;
  std::string notice;

  bool pass() const { return violations.empty(); }
};

struct CheckInfo {
  std::string id;
  std::string statement;  // the property being verified
  std::string scope;      // which census graphs are in scope
  bool census_driven;     // false for self-seeded construction checks
};

/// The fixed registry, in canonical order.
const std::vector<CheckInfo>& check_registry();
bool is_known_check(const std::string& id);

struct RunOptions {
  int jobs = 0;  // <= 0 means hardware concurrency
};

/// Evaluate the selected checks over a census. Census graphs are processed
/// in parallel; reports are aggregated by input line so the output does not
/// depend on scheduling. Unknown ids raise UsageError.
std::vector<VerificationReport> run_checks(
    const std::vector<NumberedGraph>& census,
    const std::vector<std::string>& check_ids, const RunOptions& options = {});

/// Deterministic JSON rendering ({check_id, inputs_processed, violations,
/// summary}); arrays ordered, object keys sorted.
std::string report_json(const VerificationReport& report);
std::string reports_json(const std::vector<VerificationReport>& reports);

}  // namespace mcov
