#include <atomic>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rombond/audit.hpp"
#include "rombond/bondage.hpp"
#include "rombond/families.hpp"
#include "rombond/formulas.hpp"
#include "rombond/graph.hpp"
#include "rombond/roman.hpp"
#include "rombond/verify.hpp"

using nlohmann::json;
using namespace rombond;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 2;
constexpr int exit_no_bondage = 3;
constexpr int exit_budget = 4;
constexpr int exit_mismatch = 5;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::no_bondage_set: return exit_no_bondage;
    case ErrorKind::budget_exhausted: return exit_budget;
    default: return exit_input;
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorKind::invalid_spec, "bad spec item \"" + item + "\"");
    long v = std::stol(item);
    if (v > Graph::max_order)
      throw Error(ErrorKind::too_large, "spec item " + item + " too large");
    out.push_back(static_cast<int>(v));
  }
  if (out.empty())
    throw Error(ErrorKind::invalid_spec, "empty spec \"" + text + "\"");
  return out;
}

std::string lowercase(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

// Family spec grammar: "3,3,3" (t-partite), "co:3,6" (complement of
// cycles), or a named graph (c5, prism, k3,3).
std::optional<Graph> graph_from_spec(const std::string& text) {
  const std::string s = lowercase(text);
  if (s == "c5")
    return Graph::from_edges(
        5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 0)});
  if (s == "prism")
    return Graph::from_edges(6, {Edge(0, 1), Edge(1, 2), Edge(0, 2),
                                 Edge(3, 4), Edge(4, 5), Edge(3, 5),
                                 Edge(0, 3), Edge(1, 4), Edge(2, 5)});
  if (s == "k3,3") return gen_tpartite(PartiteSpec::of({3, 3})).graph;
  if (s.rfind("co:", 0) == 0)
    return gen_co_cycles(CoCycleSpec::of(parse_int_list(s.substr(3))));
  if (s.find_first_not_of("0123456789,") == std::string::npos)
    return gen_tpartite(PartiteSpec::of(parse_int_list(s))).graph;
  return std::nullopt;
}

// Graph sources unify family specs, "-" for stdin, and file paths.
Graph load_graph(const std::string& source) {
  if (source == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_edge_list(buf.str());
  }
  if (auto g = graph_from_spec(source)) return *g;
  std::ifstream file(source);
  if (!file)
    throw Error(ErrorKind::syntax, "cannot open \"" + source + "\"");
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_edge_list(buf.str());
}

json edges_json(const EdgeSet& b) {
  json arr = json::array();
  for (const Edge& e : b) arr.push_back({e.u, e.v});
  return arr;
}

std::string vertices_string(const std::vector<int>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

std::string rdf_string(const RomanAssignment& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(f.values[i]);
  }
  return out + "]";
}

int run_solve(const std::string& source, bool as_json) {
  Graph g = load_graph(source);
  GammaResult roman = gamma_roman(g);
  DominationResult classic = gamma_classical(g);
  if (as_json) {
    json doc = {
        {"schema_version", 1},
        {"command", "solve"},
        {"n", g.order()},
        {"m", g.edge_count()},
        {"gamma_roman",
         {{"value", roman.value},
          {"assignment", roman.witness.values},
          {"nodes_explored", roman.nodes_explored}}},
        {"gamma",
         {{"value", classic.value},
          {"dominating_set", classic.witness},
          {"nodes_explored", classic.nodes_explored}}},
    };
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "n = " << g.order() << ", m = " << g.edge_count() << "\n"
              << "gamma_R = " << roman.value << "\n"
              << "rdf = " << rdf_string(roman.witness) << "\n"
              << "gamma = " << classic.value << "\n"
              << "dominating_set = " << vertices_string(classic.witness)
              << "\n";
  }
  return exit_ok;
}

int run_bondage(const std::string& source, std::optional<int> budget,
                bool prune_regular, bool force, bool as_json) {
  Graph g = load_graph(source);
  if (g.edge_count() > 40 && !budget && !force)
    throw Error(ErrorKind::too_large,
                "m = " + std::to_string(g.edge_count()) +
                    " > 40: subset search is exponential; pass --budget or "
                    "--force");
  BondageOptions opt;
  opt.budget = budget;
  opt.prune_regular = prune_regular;
  BondageResult res = bondage_roman(g, opt);
  if (as_json) {
    json doc = {
        {"schema_version", 1},
        {"command", "bondage"},
        {"n", g.order()},
        {"m", g.edge_count()},
        {"gamma_roman", res.base},
        {"b_roman", res.value},
        {"bondage_set", edges_json(res.witness)},
        {"gamma_roman_after", res.raised},
        {"subsets_tested", res.subsets_tested},
    };
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "n = " << g.order() << ", m = " << g.edge_count() << "\n"
              << "gamma_R = " << res.base << "\n"
              << "b_R = " << res.value << "\n"
              << "bondage_set = " << to_string(res.witness) << "\n"
              << "gamma_R_after = " << res.raised << "\n"
              << "subsets_tested = " << res.subsets_tested << "\n";
  }
  return exit_ok;
}

int run_gen(const std::string& spec, bool as_json) {
  auto g = graph_from_spec(spec);
  if (!g)
    throw Error(ErrorKind::invalid_spec, "unknown family spec \"" + spec +
                                             "\" (expected \"m1,m2,...\", "
                                             "\"co:l1,l2,...\", or a named "
                                             "graph)");
  if (as_json) {
    json doc = {{"schema_version", 1},
                {"command", "gen"},
                {"n", g->order()},
                {"m", g->edge_count()},
                {"edges", edges_json(g->edges())}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << to_edge_list(*g);
  }
  return exit_ok;
}

constexpr const char* kCeilNote =
    "note: the m_i=1 case uses ceil(i/2); floor(i/2) would give 0 at i=1, "
    "impossible since b_R >= 1 whenever a bondage set exists";

void print_rows(const std::vector<VerificationRow>& rows) {
  std::printf("%-12s %-22s %8s %8s %6s %10s %12s\n", "spec", "case",
              "formula", "search", "match", "time_ms", "tested");
  for (const auto& r : rows)
    std::printf("%-12s %-22s %8d %8d %6s %10.1f %12llu\n", r.spec.c_str(),
                r.case_tag.c_str(), r.expected, r.actual,
                r.match ? "yes" : "NO", r.time_ms,
                static_cast<unsigned long long>(r.subsets_tested));
}

json rows_json(const std::vector<VerificationRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json row = {{"spec", r.spec},       {"case", r.case_tag},
                {"expected", r.expected}, {"actual", r.actual},
                {"match", r.match},     {"time_ms", r.time_ms},
                {"subsets_tested", r.subsets_tested}};
    if (!r.match) row["counterexample"] = r.counterexample;
    arr.push_back(row);
  }
  return arr;
}

int finish_rows(const std::string& target, int max_n,
                const std::vector<VerificationRow>& rows, bool as_json,
                const char* note) {
  bool ok = all_match(rows);
  if (as_json) {
    json doc = {{"schema_version", 1}, {"command", "verify"},
                {"target", target},    {"max_n", max_n},
                {"rows", rows_json(rows)}, {"all_match", ok}};
    if (note) doc["note"] = note;
    std::cout << doc.dump(2) << "\n";
  } else {
    print_rows(rows);
    if (note) std::cout << note << "\n";
    if (ok) {
      std::cout << "PASS: " << rows.size() << "/" << rows.size()
                << " rows match\n";
    } else {
      for (const auto& r : rows)
        if (!r.match)
          std::cout << "MISMATCH " << r.spec << ": formula " << r.expected
                    << ", search " << r.actual << "\ncounterexample:\n"
                    << r.counterexample;
      std::cout << "FAIL\n";
    }
  }
  return ok ? exit_ok : exit_mismatch;
}

int run_verify(const std::string& target, std::optional<int> max_n_opt,
               std::uint64_t seed, int threads, bool as_json) {
  if (target == "lemma2.1") {
    int max_n = max_n_opt.value_or(10);
    if (max_n < 2 || max_n > 20)
      throw Error(ErrorKind::invalid_spec, "lemma2.1 supports max-n 2..20");
    return finish_rows(target, max_n, verify_lemma_2_1(max_n), as_json,
                       nullptr);
  }
  if (target == "lemma2.2") {
    return finish_rows(target, 0, verify_lemma_2_2(), as_json, kCeilNote);
  }
  if (target == "lemma2.3") {
    int max_n = max_n_opt.value_or(8);
    auto rows = verify_lemma_2_3(max_n, seed);
    bool ok = all_match(rows);
    if (as_json) {
      json arr = json::array();
      for (const auto& r : rows) {
        json row = {{"n", r.n},
                    {"mode", r.mode},
                    {"graphs_checked", r.graphs_checked},
                    {"mismatches", r.mismatches}};
        if (r.mismatches) row["counterexample"] = r.counterexample;
        arr.push_back(row);
      }
      json doc = {{"schema_version", 1}, {"command", "verify"},
                  {"target", target},    {"max_n", max_n},
                  {"seed", seed},        {"rows", arr},
                  {"all_match", ok}};
      std::cout << doc.dump(2) << "\n";
    } else {
      std::printf("%4s %-11s %10s %10s\n", "n", "mode", "graphs", "mismatch");
      for (const auto& r : rows)
        std::printf("%4d %-11s %10llu %10llu\n", r.n, r.mode.c_str(),
                    static_cast<unsigned long long>(r.graphs_checked),
                    static_cast<unsigned long long>(r.mismatches));
      for (const auto& r : rows)
        if (r.mismatches)
          std::cout << "counterexample at n=" << r.n << ":\n"
                    << r.counterexample;
      std::cout << (ok ? "PASS\n" : "FAIL\n");
    }
    return ok ? exit_ok : exit_mismatch;
  }
  if (target == "lemma2.4") {
    int max_n = max_n_opt.value_or(10);
    if (max_n < 4 || max_n > 20)
      throw Error(ErrorKind::invalid_spec, "lemma2.4 supports max-n 4..20");
    return finish_rows(target, max_n, verify_lemma_2_4(max_n), as_json,
                       nullptr);
  }
  if (target == "thm3.1") {
    int max_n = max_n_opt.value_or(8);
    if (max_n < 3 || max_n > 10)
      throw Error(ErrorKind::invalid_spec, "thm3.1 supports max-n 3..10");
    return finish_rows(target, max_n, verify_thm_3_1(max_n, threads), as_json,
                       kCeilNote);
  }
  if (target == "thm4.1") {
    int max_n = max_n_opt.value_or(8);
    if (max_n < 5 || max_n > 10)
      throw Error(ErrorKind::invalid_spec, "thm4.1 supports max-n 5..10");
    return finish_rows(target, max_n, verify_thm_4_1(max_n, threads), as_json,
                       nullptr);
  }
  throw Error(ErrorKind::invalid_spec, "unknown verify target \"" + target +
                                           "\" (lemma2.1|lemma2.2|lemma2.3|"
                                           "lemma2.4|thm3.1|thm4.1)");
}

json audit_json(const AuditReport& rep) {
  json lemmas = json::object();
  for (const LemmaTally& t : rep.lemmas) {
    json entry = {{"holds", t.holds},
                  {"fails", t.fails},
                  {"not_applicable", t.not_applicable}};
    if (t.first_failure) {
      entry["first_counterexample"] = {
          {"graph", t.first_failure->graph},
          {"bondage_set", edges_json(t.first_failure->bondage_set)},
          {"binding", t.first_failure->binding}};
    }
    lemmas[t.lemma] = entry;
  }
  return {{"spec", rep.spec.label()},
          {"gamma_roman", rep.gamma_base},
          {"b_roman", rep.b_r},
          {"witnesses_examined", rep.witnesses_examined},
          {"truncated", rep.truncated},
          {"lemmas", lemmas}};
}

std::pair<int, int> parse_n_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    std::vector<int> single = parse_int_list(text);
    if (single.size() != 1)
      throw Error(ErrorKind::invalid_spec, "bad --n range \"" + text + "\"");
    return {single[0], single[0]};
  }
  std::vector<int> lo = parse_int_list(text.substr(0, dots));
  std::vector<int> hi = parse_int_list(text.substr(dots + 2));
  if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0])
    throw Error(ErrorKind::invalid_spec, "bad --n range \"" + text + "\"");
  return {lo[0], hi[0]};
}

int run_audit(const std::string& range, std::size_t max_witnesses,
              int threads, bool as_json) {
  auto [n_lo, n_hi] = parse_n_range(range);
  if (n_lo < 5 || n_hi > 10)
    throw Error(ErrorKind::invalid_spec,
                "audit supports orders 5..10, got " + range);

  std::vector<CoCycleSpec> specs;
  for (int n = n_lo; n <= n_hi; ++n)
    for (const CoCycleSpec& spec : enum_n_minus_3_regular(n))
      specs.push_back(spec);

  std::vector<AuditReport> reports(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= specs.size()) return;
      reports[i] = audit(specs[i], max_witnesses);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < std::min<int>(threads, specs.size()); ++t)
      pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::uint64_t violations = 0;
  for (const auto& rep : reports)
    for (const auto& t : rep.lemmas) violations += t.fails;

  if (as_json) {
    json arr = json::array();
    for (const auto& rep : reports) arr.push_back(audit_json(rep));
    json doc = {{"schema_version", 1},
                {"command", "audit"},
                {"max_witnesses", max_witnesses},
                {"reports", arr},
                {"violations", violations}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::printf("%-10s %4s %4s %10s %6s", "spec", "g_R", "b_R", "witnesses",
                "trunc");
    for (const char* l : {"2.5", "2.6", "2.7", "2.8"})
      std::printf("  %12s", (std::string("lemma") + l).c_str());
    std::printf("\n");
    for (const auto& rep : reports) {
      std::printf("%-10s %4d %4d %10llu %6s", rep.spec.label().c_str(),
                  rep.gamma_base, rep.b_r,
                  static_cast<unsigned long long>(rep.witnesses_examined),
                  rep.truncated ? "yes" : "no");
      for (const auto& t : rep.lemmas)
        std::printf("  %4llu/%llu/%llu",
                    static_cast<unsigned long long>(t.holds),
                    static_cast<unsigned long long>(t.fails),
                    static_cast<unsigned long long>(t.not_applicable));
      std::printf("\n");
    }
    std::cout << "columns per lemma: holds/fails/not-applicable\n";
    for (const auto& rep : reports)
      for (const auto& t : rep.lemmas)
        if (t.first_failure)
          std::cout << "VIOLATION lemma " << t.lemma << " on "
                    << rep.spec.label() << " (" << t.first_failure->binding
                    << ") B=" << to_string(t.first_failure->bondage_set)
                    << "\n"
                    << t.first_failure->graph;
    std::cout << (violations == 0 ? "PASS: no violations\n" : "FAIL\n");
  }
  return violations == 0 ? exit_ok : exit_mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Roman domination / Roman bondage toolkit"};
  app.require_subcommand(1);

  std::string source, spec, target, range = "5..8";
  std::optional<int> budget;
  std::optional<int> max_n;
  bool prune_regular = false, force = false, as_json = false;
  std::uint64_t seed = 1;
  int threads = 1;
  std::size_t max_witnesses = 50;

  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "emit one structured JSON document");
  };

  auto* solve = app.add_subcommand(
      "solve", "compute gamma_R and gamma of a graph");
  solve->add_option("source", source,
                    "edge-list file, '-' for stdin, or family spec")
      ->required();
  add_json(solve);

  auto* bondage = app.add_subcommand(
      "bondage", "compute the Roman bondage number of a graph");
  bondage->add_option("source", source,
                      "edge-list file, '-' for stdin, or family spec")
      ->required();
  bondage->add_option("--budget", budget, "give up past this subset size");
  bondage->add_flag("--prune-regular", prune_regular,
                    "edge-cover pruning (verified (n-3)-regular input only)");
  bondage->add_flag("--force", force, "search despite m > 40");
  add_json(bondage);

  auto* gen = app.add_subcommand("gen", "emit a family graph as edge list");
  gen->add_option("spec", spec, "\"m1,m2,...\", \"co:l1,...\", c5, prism, k3,3")
      ->required();
  add_json(gen);

  auto* verify = app.add_subcommand(
      "verify", "sweep a family: closed-form values vs. search");
  verify->add_option("target", target,
                     "lemma2.1|lemma2.2|lemma2.3|lemma2.4|thm3.1|thm4.1")
      ->required();
  verify->add_option("--max-n", max_n, "largest order to sweep");
  verify->add_option("--seed", seed, "seed for randomized spot checks");
  verify->add_option("--threads", threads, "worker cap (output unchanged)");
  add_json(verify);

  auto* audit_cmd = app.add_subcommand(
      "audit", "check bondage-set structure lemmas on (n-3)-regular graphs");
  audit_cmd->add_option("--n", range, "order or range, e.g. 7 or 5..8");
  audit_cmd->add_option("--max-witnesses", max_witnesses,
                        "minimum bondage sets examined per graph");
  audit_cmd->add_option("--threads", threads, "worker cap (output unchanged)");
  add_json(audit_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*solve) return run_solve(source, as_json);
    if (*bondage)
      return run_bondage(source, budget, prune_regular, force, as_json);
    if (*gen) return run_gen(spec, as_json);
    if (*verify) return run_verify(target, max_n, seed, threads, as_json);
    if (*audit_cmd) return run_audit(range, max_witnesses, threads, as_json);
  } catch (const Error& e) {
    std::cerr << "error [" << error_kind_name(e.kind()) << "]: " << e.what()
              << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}
