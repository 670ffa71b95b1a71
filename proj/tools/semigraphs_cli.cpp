#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semigraphs/characterizations.hpp"
#include "semigraphs/constructors.hpp"
#include "semigraphs/enumeration.hpp"
#include "semigraphs/graphs.hpp"
#include "semigraphs/semigroup.hpp"

namespace {

using namespace semigraphs;

const char* yesno(bool b) { return b ? "yes" : "no"; }

nlohmann::json row_to_json(const ReportRow& row) {
  nlohmann::json j;
  j["construct"] = row.construct;
  j["theorem"] = theorem_key(row.report.theorem);
  j["predicate"] = row.report.predicate_verdict;
  j["graph"] = row.report.graph_verdict;
  j["witness"] =
      row.report.witness ? nlohmann::json(*row.report.witness) : nullptr;
  return j;
}

void print_rows(const std::vector<ReportRow>& rows, bool as_json) {
  if (as_json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ReportRow& row : rows) {
      arr.push_back(row_to_json(row));
    }
    std::cout << arr.dump() << "\n";
    return;
  }
  for (const ReportRow& row : rows) {
    std::printf("%-18s %-14s predicate=%-5s graph=%-5s %s\n",
                row.construct.c_str(), theorem_key(row.report.theorem).c_str(),
                yesno(row.report.predicate_verdict),
                yesno(row.report.graph_verdict),
                row.report.ok() ? "ok"
                                : ("MISMATCH: " + row.report.witness.value_or(
                                                      ""))
                                      .c_str());
  }
}

int run_validate(const std::string& path) {
  try {
    const Semigroup s = load_semigroup_file(path);
    std::cout << "valid semigroup of order " << s.order() << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "invalid: " << e.what() << "\n";
    return 1;
  }
}

int run_analyze(const std::string& construct, bool as_json) {
  const Semigroup s = build_construct(construct);
  const std::vector<MonogenicProfile> profiles = all_profiles(s);
  const std::vector<element> idem = idempotents(s).members();
  const bool commutative = s.is_commutative();
  const GraphBundle graphs(s);
  const bool complete_pow = is_complete(graphs.pow);
  const bool complete_gamma = is_complete(graphs.gamma);
  const bool complete_pe = is_complete(graphs.pe);
  const bool complete_pc = is_complete(graphs.pc);

  if (as_json) {
    nlohmann::json j;
    j["construct"] = construct;
    j["order"] = s.order();
    j["commutative"] = commutative;
    auto elems = nlohmann::json::array();
    for (element a = 0; a < s.order(); ++a) {
      nlohmann::json e;
      e["id"] = a;
      e["label"] = s.label(a);
      e["index"] = profiles[a].index;
      e["period"] = profiles[a].period;
      e["orbit_size"] = profiles[a].orbit.size();
      e["idempotent"] = profiles[a].idempotent;
      elems.push_back(std::move(e));
    }
    j["elements"] = std::move(elems);
    j["idempotents"] = idem;
    j["complete"] = {{"power", complete_pow},
                     {"cyclic", complete_gamma},
                     {"enhanced", complete_pe},
                     {"commuting", complete_pc}};
    std::cout << j.dump() << "\n";
    return 0;
  }

  std::cout << "construct: " << construct << "\n";
  std::cout << "order: " << s.order() << "\n";
  std::cout << "commutative: " << yesno(commutative) << "\n";
  std::cout << "idempotents:";
  for (element e : idem) {
    std::cout << " " << s.label(e);
  }
  std::cout << "\n";
  std::cout << "elements:\n";
  std::printf("  %-4s %-10s %-6s %-7s %-6s %s\n", "id", "label", "index",
              "period", "orbit", "idempotent");
  for (element a = 0; a < s.order(); ++a) {
    std::printf("  %-4u %-10s %-6u %-7u %-6zu %s\n", a, s.label(a).c_str(),
                profiles[a].index, profiles[a].period,
                profiles[a].orbit.size(),
                s.label(profiles[a].idempotent).c_str());
  }
  std::printf("complete: power=%s cyclic=%s enhanced=%s commuting=%s\n",
              yesno(complete_pow), yesno(complete_gamma), yesno(complete_pe),
              yesno(complete_pc));
  return 0;
}

int run_graph(const std::string& construct, const std::string& kind,
              const std::string& format) {
  const Semigroup s = build_construct(construct);
  const SimpleGraph g = build_graph(s, kind_from_name(kind));
  std::cout << export_graph(g, format);
  if (format == "json") {
    std::cout << "\n";
  }
  return 0;
}

int run_verify_construct(const std::string& construct, bool as_json) {
  const Semigroup s = build_construct(construct);
  const GraphBundle graphs(s);
  std::vector<ReportRow> rows;
  for (TheoremId t : kAllTheorems) {
    rows.push_back({construct, verify(s, graphs, t)});
  }
  print_rows(rows, as_json);
  std::size_t mismatches = 0;
  for (const ReportRow& row : rows) {
    if (!row.report.ok()) {
      ++mismatches;
    }
  }
  if (!as_json) {
    std::printf("10 theorems x 1 semigroup, %zu mismatches\n", mismatches);
  }
  return mismatches == 0 ? 0 : 1;
}

int run_verify_census(unsigned max_order, unsigned workers, bool as_json) {
  CensusConfig config;
  config.max_order = max_order;
  config.worker_count = workers;
  const std::vector<ReportRow> rows =
      verification_report(config, /*include_families=*/false);
  std::vector<ReportRow> mismatches;
  for (const ReportRow& row : rows) {
    if (!row.report.ok()) {
      mismatches.push_back(row);
    }
  }
  if (as_json) {
    print_rows(mismatches, true);
  } else {
    print_rows(mismatches, false);
    std::printf("10 theorems x %zu semigroups, %zu mismatches\n",
                rows.size() / 10, mismatches.size());
  }
  return mismatches.empty() ? 0 : 1;
}

int run_report(unsigned max_order, unsigned workers, bool as_json) {
  CensusConfig config;
  config.max_order = max_order;
  config.worker_count = workers;
  const std::vector<ReportRow> rows =
      verification_report(config, /*include_families=*/true);
  print_rows(rows, as_json);
  std::size_t mismatches = 0;
  for (const ReportRow& row : rows) {
    if (!row.report.ok()) {
      ++mismatches;
    }
  }
  if (!as_json) {
    std::printf("10 theorems x %zu semigroups, %zu mismatches\n",
                rows.size() / 10, mismatches);
  }
  return mismatches == 0 ? 0 : 1;
}

int run_enumerate(unsigned order, bool up_to_iso, unsigned workers) {
  for (const Semigroup& s : enumerate_semigroups(order, up_to_iso, workers)) {
    std::cout << semigroup_to_json(s) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power, cyclic, enhanced power and commuting graphs of finite "
               "semigroups"};
  app.require_subcommand(1);

  std::string path;
  std::string construct;
  std::string kind = "power";
  std::string format = "dot";
  unsigned max_order = 4;
  unsigned order = 2;
  unsigned workers = 1;
  bool as_json = false;
  bool census = false;
  bool up_to_iso = false;

  CLI::App* validate = app.add_subcommand("validate", "check a Cayley-table JSON file");
  validate->add_option("file", path, "path to the JSON file")->required();

  CLI::App* analyze = app.add_subcommand("analyze", "per-element structure of a semigroup");
  analyze->add_option("construct", construct, "construct expression or file")->required();
  analyze->add_flag("--json", as_json, "emit JSON");

  CLI::App* graph = app.add_subcommand("graph", "export one graph of a semigroup");
  graph->add_option("construct", construct, "construct expression or file")->required();
  graph->add_option("--kind", kind, "power|cyclic|enhanced|commuting")
      ->check(CLI::IsMember({"power", "cyclic", "enhanced", "commuting"}));
  graph->add_option("--format", format, "dot|json")
      ->check(CLI::IsMember({"dot", "json"}));

  CLI::App* verify_cmd = app.add_subcommand("verify", "check predicates against built graphs");
  verify_cmd->add_option("--construct", construct, "construct expression or file");
  verify_cmd->add_flag("--census", census, "verify the whole census instead");
  verify_cmd->add_option("--max-order", max_order, "census orders 1..N")
      ->check(CLI::Range(1u, kMaxCensusOrder));
  verify_cmd->add_option("--workers", workers, "census worker threads")
      ->check(CLI::Range(1u, 64u));
  verify_cmd->add_flag("--json", as_json, "emit JSON");

  CLI::App* report = app.add_subcommand("report", "full verification rows over census and families");
  report->add_option("--max-order", max_order, "census orders 1..N")
      ->check(CLI::Range(1u, kMaxCensusOrder));
  report->add_option("--workers", workers, "census worker threads")
      ->check(CLI::Range(1u, 64u));
  report->add_flag("--json", as_json, "emit JSON");

  CLI::App* enumerate = app.add_subcommand("enumerate", "stream the census as JSON lines");
  enumerate->add_option("--order", order, "semigroup order")
      ->required()
      ->check(CLI::Range(1u, kMaxCensusOrder));
  enumerate->add_flag("--up-to-iso", up_to_iso, "one table per isomorphism class");
  enumerate->add_option("--workers", workers, "worker threads")
      ->check(CLI::Range(1u, 64u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate->parsed()) {
      return run_validate(path);
    }
    if (analyze->parsed()) {
      return run_analyze(construct, as_json);
    }
    if (graph->parsed()) {
      return run_graph(construct, kind, format);
    }
    if (verify_cmd->parsed()) {
      if (census == !construct.empty()) {
        // Exactly one of --construct and --census.
        std::cerr << "verify needs --construct <c> or --census\n";
        return 2;
      }
      return census ? run_verify_census(max_order, workers, as_json)
                    : run_verify_construct(construct, as_json);
    }
    if (report->parsed()) {
      return run_report(max_order, workers, as_json);
    }
    if (enumerate->parsed()) {
      return run_enumerate(order, up_to_iso, workers);
    }
  } catch (const InvalidParameters& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownFormat& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
