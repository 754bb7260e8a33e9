#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "mcov/analysis.hpp"
#include "mcov/census.hpp"
#include "mcov/checks.hpp"
#include "mcov/constructions.hpp"
#include "mcov/graph6.hpp"
#include "mcov/isomorphism.hpp"
#include "oracles.hpp"

using namespace mcov;

namespace {

std::vector<NumberedGraph> as_census(const std::vector<Graph>& graphs) {
  std::vector<NumberedGraph> out;
  long line = 0;
  for (const Graph& g : graphs)
    out.push_back(NumberedGraph{++line, to_graph6(g), g});
  return out;
}

std::vector<std::string> all_check_ids() {
  std::vector<std::string> ids;
  for (const auto& info : check_registry()) ids.push_back(info.id);
  return ids;
}

}  // namespace

TEST_CASE("analyze on the reference graphs") {
  AnalysisReport k4 = analyze(Graph::complete(4));
  CHECK(k4.cubic);
  CHECK(k4.matching_covered);
  CHECK(k4.brick.value());
  CHECK_FALSE(k4.brace.value());
  CHECK(k4.removable_edge_count.value() == 0);
  CHECK(k4.doubleton_count.value() == 3);
  CHECK(k4.removable_class_count.value() == 3);
  CHECK(k4.max_removable_matching.value() == 0);

  AnalysisReport s1 = analyze(staircase(1));
  CHECK(s1.brick.value());
  CHECK(s1.near_bipartite.value());
  CHECK(s1.removable_edge_count.value() == 1);
  CHECK(s1.doubleton_count.value() == 2);
  CHECK(s1.removable_class_count.value() == 3);
  CHECK(s1.max_removable_matching.value() == 1);

  AnalysisReport p4 = analyze(Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK_FALSE(p4.matching_covered);
  CHECK_FALSE(p4.brick.has_value());
  CHECK_FALSE(p4.removable_edge_count.has_value());
}

TEST_CASE("analysis report invariants over the census") {
  for (int n = 4; n <= 10; n += 2)
    for (const Graph& g : census::connected_cubic_graphs(n)) {
      AnalysisReport r = analyze(g);
      if (!r.matching_covered) continue;
      CHECK(r.removable_class_count.value() ==
            r.removable_edge_count.value() + r.doubleton_count.value());
      CHECK(r.max_removable_matching.value() <= r.removable_edge_count.value());
      CHECK(2 * r.max_removable_matching.value() <= r.order);
      if (r.brick.value()) {
        CHECK(r.matching_covered);
        CHECK_FALSE(r.brace.value());
      }
    }
}

TEST_CASE("max removable matching") {
  for (int k = 1; k <= 5; ++k)
    CHECK(max_removable_matching(staircase(k)) == k);
  CHECK(max_removable_matching(Graph::complete(4)) == 0);
  CHECK(max_removable_matching(oracles::petersen()) == 5);
  CHECK_THROWS_AS(max_removable_matching(Graph::cycle(5)), DomainError);
}

TEST_CASE("csv and json rendering") {
  std::string row = analysis_csv_row("C~", analyze(Graph::complete(4)));
  CHECK(row.rfind("C~,4,true,true,true,false", 0) == 0);
  std::string row_na =
      analysis_csv_row("Cr", analyze(parse_graph6("Cr")));
  CHECK(row_na.find("NA") != std::string::npos);
  std::string js = analysis_json("C~", analyze(Graph::complete(4)));
  CHECK(js.find("\"brick\":true") != std::string::npos);
}

TEST_CASE("run_checks is deterministic and scheduling independent") {
  auto census = as_census(census::connected_cubic_graphs(10));
  RunOptions serial{1}, parallel{3};
  auto ids = all_check_ids();
  auto a = run_checks(census, ids, serial);
  auto b = run_checks(census, ids, parallel);
  auto c = run_checks(census, ids, parallel);
  CHECK(reports_json(a) == reports_json(b));
  CHECK(reports_json(b) == reports_json(c));
}

TEST_CASE("checks skip graphs outside their scope") {
  // mix in a non-cubic graph; only the cubic ones count as in scope
  std::vector<Graph> graphs = {Graph::cycle(6), Graph::complete(4)};
  auto census = as_census(graphs);
  auto reports = run_checks(census, {"lem-2e"});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].inputs_processed == 2);
  CHECK(reports[0].counters.at("in_scope") == 1);
  CHECK(reports[0].pass());
}

TEST_CASE("self-seeded checks ignore the census") {
  auto reports = run_checks({}, {"prop-3con", "prop-ne"});
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].check_id == "prop-3con");
  CHECK(reports[0].inputs_processed == 8);
  CHECK(reports[0].pass());
  CHECK(reports[1].skipped);
  CHECK(reports[1].notice.find("g1star") != std::string::npos);
}

TEST_CASE("unknown check ids are rejected") {
  CHECK_THROWS_AS(run_checks({}, {"no-such-check"}), UsageError);
  CHECK(is_known_check("thm-main"));
  CHECK_FALSE(is_known_check("thm-nope"));
}

TEST_CASE("malformed census lines carry their line number") {
  std::istringstream bad("C~\n!!!\n");
  try {
    read_graph6_stream(bad);
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("registry checks pass over the small census") {
  std::vector<Graph> combined;
  for (int n = 4; n <= 10; n += 2)
    for (const Graph& g : census::connected_cubic_graphs(n))
      combined.push_back(g);
  auto census = as_census(combined);
  auto reports = run_checks(census, all_check_ids());
  for (const auto& report : reports) {
    INFO(report.check_id);
    CHECK(report.pass());
  }
  // through order 10 there are five bricks with exactly three removable
  // classes: one each at orders 4, 6, 8 and two at order 10
  for (const auto& report : reports) {
    if (report.check_id != "prop-three-classes") continue;
    CHECK(report.counters.at("three_class_bricks") == 5);
    const auto& listed = report.lists.at("three_class_graphs");
    std::set<std::string> canons;
    for (const std::string& g6 : listed)
      canons.insert(canonical_form(parse_graph6(g6)));
    CHECK(canons.count(canonical_form(Graph::complete(4))) == 1);
    CHECK(canons.count(canonical_form(oracles::prism())) == 1);
    CHECK(canons.count(canonical_form(staircase(1))) == 1);
  }
}

TEST_CASE("json report shape") {
  auto reports =
      run_checks(as_census({Graph::complete(4)}), {"prop-three-classes"});
  std::string js = report_json(reports[0]);
  CHECK(js.find("\"check_id\": \"prop-three-classes\"") != std::string::npos);
  CHECK(js.find("\"inputs_processed\": 1") != std::string::npos);
  CHECK(js.find("\"violations\": []") != std::string::npos);
  CHECK(js.find("\"three_class_bricks\": 1") != std::string::npos);
}
