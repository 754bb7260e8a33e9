#include "mcov/checks.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mcov/analysis.hpp"
#include "mcov/constructions.hpp"
#include "mcov/isomorphism.hpp"
#include "mcov/matching.hpp"
#include "mcov/structure.hpp"

namespace mcov {

namespace {

std::string shore_string(const std::vector<Vertex>& xs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    out << xs[i];
  }
  out << '}';
  return out.str();
}

// Lazily evaluated per-graph facts shared by all checks.
class GraphContext {
public:
  explicit GraphContext(const NumberedGraph& input) : input_(input) {}

  const NumberedGraph& input() const { return input_; }
  const Graph& graph() const { return input_.graph; }

  bool cubic() {
    if (!cubic_) cubic_ = graph().is_cubic();
    return *cubic_;
  }
  bool connected() {
    if (!connected_) connected_ = is_connected(graph());
    return *connected_;
  }
  int edge_connectivity() {
    if (!lambda_) lambda_ = connectivity(graph()).edge;
    return *lambda_;
  }
  bool matching_covered() {
    if (!mc_) mc_ = is_matching_covered(graph());
    return *mc_;
  }
  bool bipartite() {
    if (!bipartite_) bipartite_ = is_bipartite(graph()).has_value();
    return *bipartite_;
  }
  bool brick() {
    if (!brick_) brick_ = is_brick(graph());
    return *brick_;
  }
  bool near_bipartite() {
    if (!near_bip_) {
      near_bip_ = matching_covered() && !bipartite() &&
                  is_near_bipartite(graph()).has_value();
    }
    return *near_bip_;
  }
  bool essentially_4ec() {
    if (!ess4ec_) ess4ec_ = connected() && is_essentially_4ec(graph());
    return *ess4ec_;
  }
  const RemovableClassification& classification() {
    if (!cls_) cls_ = removable_classification(graph());
    return *cls_;
  }
  int max_removable_matching() {
    if (!mrm_) {
      Graph sub(graph().order(), classification().removable);
      mrm_ = maximum_matching(sub).size();
    }
    return *mrm_;
  }
  const std::vector<EdgeCut>& nontrivial_3cuts() {
    if (!cuts_) cuts_ = enumerate_nontrivial_3cuts(graph());
    return *cuts_;
  }
  const std::string& canonical() {
    if (canon_.empty()) canon_ = canonical_form(graph());
    return canon_;
  }

private:
  const NumberedGraph& input_;
  std::optional<bool> cubic_, connected_, mc_, bipartite_, brick_, near_bip_,
      ess4ec_;
  std::optional<int> lambda_, mrm_;
  std::optional<RemovableClassification> cls_;
  std::optional<std::vector<EdgeCut>> cuts_;
  std::string canon_;
};

// Per-check, per-graph contributions, merged deterministically afterwards.
struct Contribution {
  std::vector<std::string> violations;
  std::vector<std::pair<std::string, long long>> counters;
  std::vector<std::pair<std::string, std::string>> list_items;
};

class Sink {
public:
  void violation(std::string detail) {
    contribution.violations.push_back(std::move(detail));
  }
  void count(const std::string& key, long long delta = 1) {
    contribution.counters.emplace_back(key, delta);
  }
  void list_item(const std::string& key, std::string value) {
    contribution.list_items.emplace_back(key, std::move(value));
  }
  Contribution contribution;
};

const std::string& k4_canon() {
  static const std::string c = canonical_form(Graph::complete(4));
  return c;
}
const std::string& c6bar_canon() {
  static const std::string c = [] {
    std::vector<Edge> es;
    Graph c6 = Graph::cycle(6);
    for (Vertex a = 0; a < 6; ++a)
      for (Vertex b = a + 1; b < 6; ++b)
        if (!c6.adjacent(a, b)) es.emplace_back(a, b);
    return canonical_form(Graph(6, es));
  }();
  return c;
}
const std::string& r8_canon() {
  static const std::string c = canonical_form(staircase(1));
  return c;
}

// ---- census-driven checks ---------------------------------------------------

void check_thm_main(GraphContext& ctx, Sink& sink) {
  if (!ctx.cubic() || !ctx.brick()) return;
  const std::string& canon = ctx.canonical();
  if (canon == k4_canon() || canon == c6bar_canon() || canon == r8_canon()) {
    sink.count("exceptional_skipped");
    return;
  }
  sink.count("in_scope");
  const int n = ctx.graph().order();
  const int mrm = ctx.max_removable_matching();
  if (7 * mrm < n)
    sink.violation("removable matching " + std::to_string(mrm) +
                   " below bound: 7*" + std::to_string(mrm) + " < " +
                   std::to_string(n));
}

void check_thm_con(GraphContext& ctx, Sink& sink) {
  if (!ctx.cubic() || !ctx.connected() || ctx.edge_connectivity() < 3) return;
  if (!ctx.matching_covered() || ctx.bipartite() || !ctx.near_bipartite())
    return;
  if (ctx.canonical() == k4_canon()) return;
  sink.count("in_scope");
  const bool brick = ctx.brick();
  sink.count(brick ? "bricks_in_scope" : "non_bricks_in_scope");
  const int n = ctx.graph().order();
  const int mrm = ctx.max_removable_matching();
  if (2 * mrm < n - 6) {
    sink.count(brick ? "violations_bricks" : "violations_non_bricks");
    sink.violation("removable matching " + std::to_string(mrm) +
                   " below bound: 2*" + std::to_string(mrm) + " < " +
                   std::to_string(n) + "-6");
  }
}

void check_prop_three_classes(GraphContext& ctx, Sink& sink) {
  if (!ctx.cubic() || !ctx.brick()) return;
  sink.count("bricks");
  const auto& cls = ctx.classification();
  if (cls.has_overlapping_doubletons()) {
    sink.count("doubleton_overlap_graphs");
    sink.list_item("doubleton_overlap", ctx.input().graph6);
  }
  if (cls.class_count() == 3) {
    sink.count("three_class_bricks");
    sink.list_item("three_class_graphs", ctx.input().graph6);
  }
}

void check_lem_2e(GraphContext& ctx, Sink& sink) {
  if (!ctx.cubic() || !ctx.connected() || ctx.edge_connectivity() < 2) return;
  sink.count("in_scope");
  if (!ctx.matching_covered()) sink.violation("not matching covered");
}

void check_prop_3cut_sep(GraphContext& ctx, Sink& sink) {
  if (!ctx.cubic() || !ctx.connected() || ctx.edge_connectivity() < 2) return;
  sink.count("in_scope");
  for (const EdgeCut& cut : ctx.nontrivial_3cuts()) {
    sink.count("cuts_checked");
    if (!classify_cut(ctx.graph(), cut.shore).separating)
      sink.violation("3-cut " + shore_string(cut.shore) + " not separating");
  }
}

void check_cor_bip(GraphContext& ctx, Sink& sink) {
  if (!ctx.cubic() || !ctx.connected() || ctx.edge_connectivity() < 3 ||
      !ctx.bipartite())
    return;
  sink.count("in_scope");
  const auto& cls = ctx.classification();
  if (cls.removable.size() != ctx.graph().edges().size()) {
    std::string missing;
    for (const Edge& e : ctx.graph().edges())
      if (!std::binary_search(cls.removable.begin(), cls.removable.end(), e))
        missing += (missing.empty() ? "" : " ") + to_string(e);
    sink.violation("non-removable edges: " + missing);
  }
}

void check_thm_4ecr(GraphContext& ctx, Sink& sink) {
  if (!ctx.cubic() || !ctx.essentially_4ec() || !ctx.brick()) return;
  sink.count("in_scope");
  const auto& cls = ctx.classification();
  if (!cls.neither.empty()) {
    std::string edges;
    for (const Edge& e : cls.neither)
      edges += (edges.empty() ? "" : " ") + to_string(e);
    sink.violation("edges in no removable class: " + edges);
  }
}

void check_cor_4ecr(GraphContext& ctx, Sink& sink) {
  if (!ctx.cubic() || !ctx.essentially_4ec() || !ctx.brick()) return;
  if (ctx.canonical() == k4_canon()) return;
  sink.count("in_scope");
  if (2 * ctx.max_removable_matching() < ctx.graph().order())
    sink.violation("removable edges contain no perfect matching");
}

void check_prop_4econ_ii(GraphContext& ctx, Sink& sink) {
  if (!ctx.cubic() || !ctx.essentially_4ec() || !ctx.brick()) return;
  if (ctx.canonical() == k4_canon()) return;
  const auto& cls = ctx.classification();
  if (cls.doubletons.empty()) return;
  sink.count("in_scope");
  if (!perfect_matching_with(ctx.graph(), {}, cls.doubleton_edges())
           .has_value())
    sink.violation("no perfect matching avoids the doubleton edges");
}

void check_thm_lo(GraphContext& ctx, Sink& sink) {
  if (!ctx.cubic() || !ctx.brick()) return;
  sink.count("in_scope");
  const auto& es = ctx.graph().edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (perfect_matching_with(ctx.graph(), {es[i]}, {es[j]}).has_value())
        continue;
      if (perfect_matching_with(ctx.graph(), {es[j]}, {es[i]}).has_value())
        continue;
      sink.count("dependent_pairs");
      if (!is_bipartite(minus_edges(ctx.graph(), {es[i], es[j]})).has_value())
        sink.violation("mutually dependent pair " + to_string(es[i]) + "," +
                       to_string(es[j]) + " leaves a non-bipartite graph");
    }
}

void check_cor_tc(GraphContext& ctx, Sink& sink) {
  if (!ctx.cubic() || !ctx.connected() || ctx.edge_connectivity() < 3) return;
  if (!ctx.matching_covered() || ctx.bipartite() || !ctx.near_bipartite())
    return;
  sink.count("in_scope");
  const Graph& g = ctx.graph();
  std::uint64_t full = g.order() == 64 ? ~0ull : (1ull << g.order()) - 1;
  for (const EdgeCut& cut : ctx.nontrivial_3cuts()) {
    sink.count("cuts_checked");
    bool tight = classify_cut(g, cut.shore).tight;
    std::uint64_t mask = subset_mask(g, cut.shore);
    bool side_bip =
        is_bipartite(contract_simple(g, mask_to_vertices(full & ~mask)))
            .has_value() ||
        is_bipartite(contract_simple(g, cut.shore)).has_value();
    if (tight != side_bip)
      sink.violation("cut " + shore_string(cut.shore) +
                     (tight ? ": tight but no contraction is bipartite"
                            : ": a contraction is bipartite but cut not tight"));
  }
}

void check_prop_nocross(GraphContext& ctx, Sink& sink) {
  if (!ctx.cubic() || !ctx.brick()) return;
  sink.count("in_scope");
  const auto& cuts = ctx.nontrivial_3cuts();
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (std::size_t j = i + 1; j < cuts.size(); ++j)
      if (cuts_cross(ctx.graph(), cuts[i].shore, cuts[j].shore))
        sink.violation("crossing 3-cuts " + shore_string(cuts[i].shore) +
                       " and " + shore_string(cuts[j].shore));
}

void check_prop_e3(GraphContext& ctx, Sink& sink) {
  if (!ctx.cubic() || !ctx.matching_covered()) return;
  sink.count("in_scope");
  const Graph& g = ctx.graph();
  for (Vertex v = 0; v < g.order(); ++v) {
    Graph child = insert_triangle(g, v);
    for (const Edge& s : splicing_edges_of_insertion(g, v)) {
      sink.count("splicing_edges_checked");
      if (is_matching_covered(minus_edge(child, s)))
        sink.violation("splicing edge " + to_string(s) + " of insertion at " +
                       std::to_string(v) + " is removable");
    }
  }
}

void check_prop_spl_i(GraphContext& ctx, Sink& sink) {
  if (!ctx.cubic() || !ctx.matching_covered()) return;
  sink.count("in_scope");
  const Graph& g = ctx.graph();
  const auto& removable = ctx.classification().removable;
  for (Vertex v = 0; v < g.order(); ++v) {
    Graph child = insert_triangle(g, v);
    for (const Edge& e : removable) {
      if (e.touches(v)) continue;
      Edge mapped(e.u - (e.u > v ? 1 : 0), e.v - (e.v > v ? 1 : 0));
      sink.count("edges_checked");
      if (!is_matching_covered(minus_edge(child, mapped)))
        sink.violation("removable edge " + to_string(e) +
                       " lost removability after insertion at " +
                       std::to_string(v));
    }
  }
}

void check_prop_easy(GraphContext& ctx, Sink& sink) {
  if (!ctx.cubic() || !ctx.matching_covered()) return;
  sink.count("in_scope");
  const Graph& g = ctx.graph();
  std::uint64_t full = g.order() == 64 ? ~0ull : (1ull << g.order()) - 1;
  const auto& removable = ctx.classification().removable;
  for (const EdgeCut& cut : ctx.nontrivial_3cuts()) {
    if (!classify_cut(g, cut.shore).good) continue;
    for (int side = 0; side < 2; ++side) {
      std::uint64_t mask = subset_mask(g, cut.shore);
      if (side == 1) mask = full & ~mask;
      std::vector<Vertex> shore = mask_to_vertices(mask);
      std::vector<Edge> inside, outside;
      for (const Edge& e : g.edges()) {
        bool iu = mask >> e.u & 1ull, iv = mask >> e.v & 1ull;
        if (iu && iv) inside.push_back(e);
        if (!iu && !iv) outside.push_back(e);
      }
      // candidate bonding edges: no outside edge depends on them
      std::vector<Edge> e1_candidates;
      for (const Edge& c : cut.boundary) {
        bool depended = false;
        for (const Edge& f : outside)
          if (!perfect_matching_with(g, {f}, {c}).has_value()) {
            depended = true;
            break;
          }
        if (!depended) e1_candidates.push_back(c);
      }
      for (const Edge& e0 : inside) {
        Graph without = minus_edge(g, e0);
        bool hypothesis_holds = false;
        for (const Edge& e1 : e1_candidates) {
          bool ok = true;
          for (const Edge& e : cut.boundary) {
            if (!ok) break;
            std::vector<Edge> forbid;
            if (e != e1)
              for (const Edge& c : cut.boundary)
                if (c != e) forbid.push_back(c);
            if (!matching_covering(without, shore, {e}, forbid).has_value())
              ok = false;
          }
          for (const Edge& e : inside) {
            if (!ok) break;
            if (e == e0) continue;
            if (!matching_covering(without, shore, {e}, {}).has_value())
              ok = false;
          }
          if (ok) {
            hypothesis_holds = true;
            break;
          }
        }
        if (!hypothesis_holds) continue;
        sink.count("hypothesis_instances");
        if (!std::binary_search(removable.begin(), removable.end(), e0))
          sink.violation("edge " + to_string(e0) + " inside good cut " +
                         shore_string(shore) +
                         " meets the hypothesis but is not removable");
      }
    }
  }
}

// ---- self-seeded checks -----------------------------------------------------

void run_prop_3con(VerificationReport& report) {
  for (int k = 1; k <= 8; ++k) {
    Graph s = staircase(k);
    ++report.inputs_processed;
    std::vector<Edge> rungs;
    for (int i = 1; i <= k; ++i) {
      Vertex ui = 5 + i, vi = 5 + k + i;
      rungs.emplace_back(ui, vi);
    }
    std::sort(rungs.begin(), rungs.end());
    auto removable = removable_edges(s);
    if (removable != rungs) {
      std::ostringstream detail;
      detail << "staircase(" << k << "): removable edges differ from the rungs";
      report.violations.push_back(Violation{0, to_graph6(s), detail.str()});
    }
  }
  report.counters["staircases_checked"] = 8;
}

void run_prop_ne(VerificationReport& report) {
  report.skipped = true;
  report.notice =
      "skipped: catalog entry g1star is pending figure transcription";
}

using CensusCheckFn = void (*)(GraphContext&, Sink&);

struct CheckImpl {
  CheckInfo info;
  CensusCheckFn census_fn;  // null for self-seeded checks
  void (*seeded_fn)(VerificationReport&);
};

const std::vector<CheckImpl>& registry_impl() {
  static const std::vector<CheckImpl> impls = {
      {{"thm-main",
        "cubic bricks other than K4, C6bar and R8 have a matching of at least "
        "order/7 removable edges",
        "cubic bricks", true},
       check_thm_main, nullptr},
      {{"thm-con",
        "3-edge-connected near-bipartite cubic graphs other than K4 have a "
        "matching of at least order/2-3 removable edges",
        "3-edge-connected near-bipartite cubic graphs", true},
       check_thm_con, nullptr},
      {{"prop-three-classes",
        "census count of cubic bricks with exactly three removable classes",
        "cubic bricks", true},
       check_prop_three_classes, nullptr},
      {{"lem-2e", "2-edge-connected cubic graphs are matching covered",
        "2-edge-connected cubic graphs", true},
       check_lem_2e, nullptr},
      {{"prop-3cut-sep",
        "every nontrivial 3-cut of a 2-edge-connected cubic graph is "
        "separating",
        "2-edge-connected cubic graphs", true},
       check_prop_3cut_sep, nullptr},
      {{"cor-bip",
        "every edge of a 3-edge-connected cubic bipartite graph is removable",
        "3-edge-connected cubic bipartite graphs", true},
       check_cor_bip, nullptr},
      {{"thm-4ecr",
        "in an essentially 4-edge-connected cubic brick every edge is "
        "removable or in a removable doubleton",
        "essentially 4-edge-connected cubic bricks", true},
       check_thm_4ecr, nullptr},
      {{"cor-4ecr",
        "essentially 4-edge-connected cubic bricks other than K4 have a "
        "perfect matching of removable edges",
        "essentially 4-edge-connected cubic bricks", true},
       check_cor_4ecr, nullptr},
      {{"prop-4econ-ii",
        "essentially 4-edge-connected cubic bricks with a removable doubleton "
        "have a perfect matching avoiding all doubleton edges",
        "essentially 4-edge-connected cubic bricks with doubletons", true},
       check_prop_4econ_ii, nullptr},
      {{"thm-lo",
        "removing a mutually dependent pair from a cubic brick leaves a "
        "bipartite graph",
        "cubic bricks", true},
       check_thm_lo, nullptr},
      {{"cor-tc",
        "a nontrivial 3-cut of a 3-edge-connected near-bipartite cubic graph "
        "is tight exactly when one contraction is bipartite",
        "3-edge-connected near-bipartite cubic graphs", true},
       check_cor_tc, nullptr},
      {{"prop-nocross", "no two nontrivial 3-cuts of a cubic brick cross",
        "cubic bricks", true},
       check_prop_nocross, nullptr},
      {{"prop-e3",
        "no splicing edge of a triangle insertion into a matching covered "
        "cubic graph is removable",
        "matching covered cubic graphs (construction seeds)", true},
       check_prop_e3, nullptr},
      {{"prop-spl-i",
        "removable edges away from the insertion vertex stay removable after "
        "a triangle insertion",
        "matching covered cubic graphs (construction seeds)", true},
       check_prop_spl_i, nullptr},
      {{"prop-easy",
        "an edge inside a good 3-cut satisfying the covering-matching "
        "hypothesis is removable",
        "matching covered cubic graphs (construction seeds)", true},
       check_prop_easy, nullptr},
      {{"prop-ne",
        "removable-matching lower bounds for catalog shores embedded in "
        "census bricks",
        "cubic bricks with catalog shores", false},
       nullptr, run_prop_ne},
      {{"prop-3con",
        "the removable edges of the staircases are exactly the rungs",
        "staircases k = 1..8 (constructed)", false},
       nullptr, run_prop_3con},
  };
  return impls;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& impl : registry_impl()) out.push_back(impl.info);
    return out;
  }();
  return infos;
}

bool is_known_check(const std::string& id) {
  for (const auto& impl : registry_impl())
    if (impl.info.id == id) return true;
  return false;
}

std::vector<VerificationReport> run_checks(
    const std::vector<NumberedGraph>& census,
    const std::vector<std::string>& check_ids, const RunOptions& options) {
  std::vector<const CheckImpl*> selected;
  for (const std::string& id : check_ids) {
    const CheckImpl* found = nullptr;
    for (const auto& impl : registry_impl())
      if (impl.info.id == id) found = &impl;
    if (!found) throw UsageError("unknown check id: " + id);
    selected.push_back(found);
  }

  std::vector<VerificationReport> reports(selected.size());
  for (std::size_t c = 0; c < selected.size(); ++c)
    reports[c].check_id = selected[c]->info.id;

  std::vector<std::size_t> census_checks;
  for (std::size_t c = 0; c < selected.size(); ++c)
    if (selected[c]->census_fn) census_checks.push_back(c);

  if (!census_checks.empty() && !census.empty()) {
    // One contribution slot per (graph, check); workers fill disjoint slots,
    // aggregation below is order-independent of scheduling.
    std::vector<std::vector<Contribution>> slots(
        census.size(), std::vector<Contribution>(census_checks.size()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    int jobs = options.jobs > 0
                   ? options.jobs
                   : static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(census.size()));
    auto worker = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= census.size()) return;
        try {
          GraphContext ctx(census[i]);
          for (std::size_t k = 0; k < census_checks.size(); ++k) {
            Sink sink;
            selected[census_checks[k]]->census_fn(ctx, sink);
            slots[i][k] = std::move(sink.contribution);
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    for (std::size_t i = 0; i < census.size(); ++i)
      for (std::size_t k = 0; k < census_checks.size(); ++k) {
        VerificationReport& report = reports[census_checks[k]];
        const Contribution& contribution = slots[i][k];
        ++report.inputs_processed;
        for (const std::string& detail : contribution.violations)
          report.violations.push_back(
              Violation{census[i].line, census[i].graph6, detail});
        for (const auto& [key, delta] : contribution.counters)
          report.counters[key] += delta;
        for (const auto& [key, value] : contribution.list_items)
          report.lists[key].push_back(value);
      }
  } else {
    for (std::size_t c : census_checks)
      reports[c].inputs_processed = static_cast<long>(census.size());
  }

  for (std::size_t c = 0; c < selected.size(); ++c)
    if (selected[c]->seeded_fn) selected[c]->seeded_fn(reports[c]);

  for (auto& report : reports)
    std::sort(report.violations.begin(), report.violations.end(),
              [](const Violation& a, const Violation& b) {
                if (a.line != b.line) return a.line < b.line;
                return a.detail < b.detail;
              });
  return reports;
}

namespace {

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["check_id"] = report.check_id;
  j["inputs_processed"] = report.inputs_processed;
  nlohmann::json violations = nlohmann::json::array();
  for (const Violation& v : report.violations)
    violations.push_back({{"graph6", v.graph6}, {"detail", v.detail}});
  j["violations"] = violations;
  nlohmann::json summary = nlohmann::json::object();
  summary["violation_count"] = report.violations.size();
  for (const auto& [key, value] : report.counters) summary[key] = value;
  for (const auto& [key, values] : report.lists) summary[key] = values;
  if (report.skipped) {
    summary["skipped"] = true;
    summary["notice"] = report.notice;
  }
  j["summary"] = summary;
  return j;
}

}  // namespace

std::string report_json(const VerificationReport& report) {
  return report_to_json(report).dump(2);
}

std::string reports_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& report : reports) arr.push_back(report_to_json(report));
  return arr.dump(2);
}

}  // namespace mcov
