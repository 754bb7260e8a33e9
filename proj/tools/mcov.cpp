#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcov/analysis.hpp"
#include "mcov/catalog.hpp"
#include "mcov/checks.hpp"
#include "mcov/constructions.hpp"
#include "mcov/errors.hpp"
#include "mcov/graph6.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitError = 2;

std::vector<mcov::NumberedGraph> load_census(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mcov::UsageError("cannot open input file: " + path);
  return mcov::read_graph6_stream(in);
}

std::vector<std::string> split_ids(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_analyze(const std::string& input, bool as_json, bool as_csv) {
  auto census = load_census(input);
  if (as_json) {
    std::cout << "[";
    for (std::size_t i = 0; i < census.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << "\n  "
                << mcov::analysis_json(census[i].graph6,
                                       mcov::analyze(census[i].graph));
    }
    std::cout << "\n]\n";
    return kExitOk;
  }
  if (as_csv) {
    std::cout << mcov::analysis_csv_header() << "\n";
    for (const auto& item : census)
      std::cout << mcov::analysis_csv_row(item.graph6,
                                          mcov::analyze(item.graph))
                << "\n";
    return kExitOk;
  }
  std::cout << std::left << std::setw(22) << "graph6" << std::setw(7) << "order"
            << std::setw(7) << "cubic" << std::setw(5) << "mc" << std::setw(7)
            << "brick" << std::setw(7) << "brace" << std::setw(9) << "nearbip"
            << std::setw(7) << "e4ec" << std::setw(5) << "rem" << std::setw(5)
            << "dbl" << std::setw(5) << "cls" << std::setw(5) << "mrm"
            << std::setw(8) << "neither" << "\n";
  auto show_b = [](const std::optional<bool>& v) {
    return !v ? std::string("-") : (*v ? std::string("yes") : std::string("no"));
  };
  auto show_i = [](const std::optional<int>& v) {
    return !v ? std::string("-") : std::to_string(*v);
  };
  for (const auto& item : census) {
    mcov::AnalysisReport r = mcov::analyze(item.graph);
    std::cout << std::left << std::setw(22) << item.graph6 << std::setw(7)
              << r.order << std::setw(7) << (r.cubic ? "yes" : "no")
              << std::setw(5) << (r.matching_covered ? "yes" : "no")
              << std::setw(7) << show_b(r.brick) << std::setw(7)
              << show_b(r.brace) << std::setw(9) << show_b(r.near_bipartite)
              << std::setw(7) << show_b(r.essentially_4ec) << std::setw(5)
              << show_i(r.removable_edge_count) << std::setw(5)
              << show_i(r.doubleton_count) << std::setw(5)
              << show_i(r.removable_class_count) << std::setw(5)
              << show_i(r.max_removable_matching) << std::setw(8)
              << show_i(r.neither_count) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& ids_csv, int jobs,
               const std::string& json_out) {
  std::vector<std::string> ids = split_ids(ids_csv);
  if (ids.empty()) throw mcov::UsageError("no check ids given");
  for (const auto& id : ids)
    if (!mcov::is_known_check(id))
      throw mcov::UsageError("unknown check id: " + id);
  std::vector<mcov::NumberedGraph> census;
  if (!input.empty()) census = load_census(input);
  if (const char* env = std::getenv("MCOV_JOBS")) jobs = std::atoi(env);
  mcov::RunOptions options;
  options.jobs = jobs;
  auto reports = mcov::run_checks(census, ids, options);
  bool violations = false;
  for (const auto& report : reports) {
    std::cout << report.check_id << ": "
              << (report.skipped
                      ? "SKIP"
                      : (report.pass() ? "PASS" : "FAIL"))
              << " (" << report.inputs_processed << " inputs, "
              << report.violations.size() << " violations)\n";
    if (report.skipped) std::cout << "  " << report.notice << "\n";
    for (const auto& v : report.violations)
      std::cout << "  line " << v.line << " " << v.graph6 << ": " << v.detail
                << "\n";
    if (!report.pass()) violations = true;
  }
  if (!json_out.empty()) {
    std::ofstream out(json_out);
    if (!out) throw mcov::UsageError("cannot write: " + json_out);
    out << mcov::reports_json(reports) << "\n";
  }
  return violations ? kExitViolations : kExitOk;
}

int cmd_generate(const std::string& family, int k, int max_n,
                 const std::string& name) {
  if (!name.empty()) {
    std::cout << mcov::to_graph6(mcov::named_graph(name)) << "\n";
    return kExitOk;
  }
  if (family == "staircase") {
    if (k < 1) throw mcov::UsageError("--k must be >= 1");
    std::cout << mcov::to_graph6(mcov::staircase(k)) << "\n";
    return kExitOk;
  }
  if (family == "gfamily") {
    if (max_n < 4) throw mcov::UsageError("--max-n must be >= 4");
    for (const auto& g : mcov::enumerate_family_G(max_n))
      std::cout << mcov::to_graph6(g) << "\n";
    return kExitOk;
  }
  throw mcov::UsageError("unknown family: " + family +
                         " (use staircase or gfamily, or --name)");
}

int cmd_checks() {
  for (const auto& info : mcov::check_registry()) {
    std::cout << info.id << "\n  scope: " << info.scope
              << "\n  asserts: " << info.statement << "\n";
    if (!info.census_driven) std::cout << "  (self-seeded, census input unused)\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matching covered graph toolkit"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "per-graph structure report");
  std::string analyze_input;
  bool analyze_json = false, analyze_csv = false;
  analyze->add_option("input", analyze_input, "graph6 file")->required();
  auto* flag_json = analyze->add_flag("--json", analyze_json, "JSON output");
  analyze->add_flag("--csv", analyze_csv, "CSV output")->excludes(flag_json);

  auto* verify = app.add_subcommand("verify", "run checks over a census");
  std::string verify_checks, verify_input, verify_json;
  int verify_jobs = 0;
  verify->add_option("--check", verify_checks, "comma separated check ids")
      ->required();
  verify->add_option("--input", verify_input, "graph6 census file");
  verify->add_option("--jobs", verify_jobs,
                     "worker threads (MCOV_JOBS overrides)");
  verify->add_option("--json", verify_json, "write JSON report here");

  auto* generate = app.add_subcommand("generate", "emit graphs as graph6");
  std::string gen_family, gen_name;
  int gen_k = 0, gen_max_n = 0;
  generate->add_option("--family", gen_family, "staircase | gfamily");
  generate->add_option("--k", gen_k, "staircase parameter");
  generate->add_option("--max-n", gen_max_n, "largest order for gfamily");
  generate->add_option("--name", gen_name, "catalog entry name");

  auto* checks = app.add_subcommand("checks", "list the check registry");

  try {
    app.parse(argc, argv);
    if (analyze->parsed())
      return cmd_analyze(analyze_input, analyze_json, analyze_csv);
    if (verify->parsed())
      return cmd_verify(verify_input, verify_checks, verify_jobs, verify_json);
    if (generate->parsed()) {
      if (gen_family.empty() && gen_name.empty())
        throw mcov::UsageError("generate needs --family or --name");
      return cmd_generate(gen_family, gen_k, gen_max_n, gen_name);
    }
    if (checks->parsed()) return cmd_checks();
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  } catch (const mcov::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
