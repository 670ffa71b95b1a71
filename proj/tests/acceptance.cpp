// Acceptance gate: seven criteria, one PASS/FAIL line each, exit code equal
// to the number of failures.  Run by ctest as the "acceptance" test.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "semigraphs/characterizations.hpp"
#include "semigraphs/constructors.hpp"
#include "semigraphs/enumeration.hpp"
#include "semigraphs/graphs.hpp"
#include "semigraphs/semigroup.hpp"

using namespace semigraphs;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail = "not evaluated";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SimpleGraph load_golden(const std::string& name) {
  return import_graph_json(read_file(std::string(SEMIGRAPHS_GOLDEN_DIR) +
                                     "/" + name + ".json"));
}

bool same_edges(const SimpleGraph& built, const SimpleGraph& golden,
                std::string& detail, const std::string& name) {
  if (built.order() != golden.order() ||
      built.edges() != golden.edges()) {
    detail = "edge set of " + name + " differs from the golden file";
    return false;
  }
  return true;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1fs", s);
  return buf;
}

}  // namespace

int main() {
  std::array<Outcome, 7> results;

  // Shared state, built up front; failures there fail the dependent criteria.
  std::vector<CorpusEntry> corpus;
  std::vector<GraphBundle> bundles;
  std::map<std::string, std::size_t> by_name;
  std::array<std::size_t, 4> census_counts{};
  double census_seconds = 0.0;
  double bundle_seconds = 0.0;
  std::string setup_error;

  try {
    const auto census_start = Clock::now();
    std::vector<CorpusEntry> census = census_corpus(4, true, 1);
    census_seconds = seconds_since(census_start);
    for (const CorpusEntry& entry : census) {
      census_counts[entry.semigroup.order() - 1]++;
    }

    corpus = std::move(census);
    std::vector<CorpusEntry> families = family_corpus();
    corpus.insert(corpus.end(), std::make_move_iterator(families.begin()),
                  std::make_move_iterator(families.end()));
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      by_name[corpus[i].construct] = i;
    }

    const auto bundle_start = Clock::now();
    bundles.reserve(corpus.size());
    for (const CorpusEntry& entry : corpus) {
      bundles.emplace_back(entry.semigroup);
    }
    bundle_seconds = seconds_since(bundle_start);
  } catch (const std::exception& e) {
    setup_error = e.what();
  }

  const auto run = [&](std::size_t index,
                       const std::function<bool(std::string&)>& body) {
    Outcome& out = results[index];
    if (!setup_error.empty()) {
      out.detail = "setup failed: " + setup_error;
      return;
    }
    try {
      std::string detail;
      out.pass = body(detail);
      out.detail = detail;
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = e.what();
    }
  };

  // 1. Spanning chain Pow <= Gamma <= P_e <= P_c over the whole corpus.
  run(0, [&](std::string& detail) {
    const auto start = Clock::now();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const GraphBundle& g = bundles[i];
      if (!is_spanning_subgraph(g.pow, g.gamma) ||
          !is_spanning_subgraph(g.gamma, g.pe) ||
          !is_spanning_subgraph(g.pe, g.pc)) {
        detail = "chain violated for " + corpus[i].construct;
        return false;
      }
    }
    const double total = bundle_seconds + seconds_since(start);
    detail = "no violation over " + std::to_string(corpus.size()) +
             " semigroups (" + format_seconds(total) + ")";
    if (total >= 300.0) {
      detail += ", exceeding the 5 minute budget";
      return false;
    }
    return true;
  });

  // 2. Every predicate verdict agrees with the directly built graphs, the
  // chain condition tracks power-graph completeness, and the two
  // subsemigroup modes agree wherever the exhaustive one is tractable.
  run(1, [&](std::string& detail) {
    std::size_t checks = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Semigroup& s = corpus[i].semigroup;
      for (TheoremId t : kAllTheorems) {
        const VerificationReport row = verify(s, bundles[i], t);
        ++checks;
        if (!row.ok()) {
          detail = theorem_key(t) + " wrong for " + corpus[i].construct +
                   ": " + row.witness.value_or("(no witness)");
          return false;
        }
      }
      if (chain_condition(s) != pow_complete_pred(s)) {
        detail = "chain condition disagrees with pow_complete for " +
                 corpus[i].construct;
        return false;
      }
      if (s.order() <= kDefaultExhaustiveBound &&
          gamma_eq_pc_pred(s, SubsemigroupMode::TwoGenerated) !=
              gamma_eq_pc_pred(s, SubsemigroupMode::Exhaustive)) {
        detail = "subsemigroup modes disagree for " + corpus[i].construct;
        return false;
      }
    }
    detail = std::to_string(checks) + " theorem checks, 0 mismatches";
    return true;
  });

  // 3. The committed golden drawings are reproduced edge for edge.
  run(2, [&](std::string& detail) {
    const Semigroup m32 = make_monogenic(3, 2);
    const Semigroup m26 = make_monogenic(2, 6);
    const Semigroup z4 = make_zn_mult(4);
    const Semigroup signs = signs_semigroup();
    const Semigroup b2 = make_brandt(2);

    const SimpleGraph pe_m32 = enhanced_power_graph(m32);
    if (!same_edges(pe_m32, load_golden("pe_m32"), detail,
                    "P_e(M(3,2))")) {
      return false;
    }
    if (!is_complete(pe_m32) || pe_m32.edge_count() != 6) {
      detail = "P_e(M(3,2)) should be complete on 4 vertices";
      return false;
    }
    const SimpleGraph gamma_m32 = cyclic_graph(m32);
    if (!same_edges(gamma_m32, load_golden("gamma_m32"), detail,
                    "Gamma(M(3,2))")) {
      return false;
    }
    if (gamma_m32.edge_count() != 5 || gamma_m32.adjacent(1, 2)) {
      detail = "Gamma(M(3,2)) should miss exactly the a^2 -- a^3 edge";
      return false;
    }

    const SimpleGraph gamma_m26 = cyclic_graph(m26);
    if (!same_edges(gamma_m26, load_golden("gamma_m26"), detail,
                    "Gamma(M(2,6))")) {
      return false;
    }
    if (!is_complete(gamma_m26) || gamma_m26.edge_count() != 21) {
      detail = "Gamma(M(2,6)) should be complete on 7 vertices";
      return false;
    }
    const SimpleGraph pow_m26 = power_graph(m26);
    if (!same_edges(pow_m26, load_golden("pow_m26"), detail,
                    "Pow(M(2,6))")) {
      return false;
    }
    if (graphs_equal(pow_m26, gamma_m26) || pow_m26.adjacent(1, 2)) {
      detail = "Pow(M(2,6)) should differ from Gamma with a^2 and a^3 "
               "non-adjacent";
      return false;
    }

    const SimpleGraph pc_z4 = commuting_graph(z4);
    if (!same_edges(pc_z4, load_golden("pc_zmult4"), detail,
                    "P_c(Zmult(4))")) {
      return false;
    }
    const SimpleGraph gamma_z4 = cyclic_graph(z4);
    if (!same_edges(gamma_z4, load_golden("gamma_zmult4"), detail,
                    "Gamma(Zmult(4))")) {
      return false;
    }
    if (!is_complete(pc_z4) || gamma_z4.adjacent(0, 1)) {
      detail = "P_c(Zmult(4)) should be complete with 0 and 1 non-adjacent "
               "in Gamma";
      return false;
    }

    const SimpleGraph pc_signs = commuting_graph(signs);
    if (!same_edges(pc_signs, load_golden("pc_signs"), detail,
                    "P_c(signs)")) {
      return false;
    }
    const SimpleGraph pe_signs = enhanced_power_graph(signs);
    if (!same_edges(pe_signs, load_golden("pe_signs"), detail,
                    "P_e(signs)")) {
      return false;
    }
    if (!is_complete(pc_signs) || pe_signs.adjacent(0, 1)) {
      detail = "P_c(signs) should be complete with -1 and 0 non-adjacent "
               "in P_e";
      return false;
    }

    const SimpleGraph pc_b2 = commuting_graph(b2);
    if (!same_edges(pc_b2, load_golden("pc_b2"), detail, "P_c(B(2))")) {
      return false;
    }
    const SimpleGraph pow_b2 = power_graph(b2);
    if (!same_edges(pow_b2, load_golden("pow_b2"), detail,
                    "Pow(B(2))")) {
      return false;
    }
    if (!pc_b2.adjacent(0, 1) || pow_b2.adjacent(0, 1)) {
      detail = "0 and (1,1) should be adjacent in P_c(B(2)) only";
      return false;
    }

    detail = "10 golden graphs reproduced";
    return true;
  });

  // 4. Census counts for orders 1..4 up to isomorphism.
  run(3, [&](std::string& detail) {
    const std::array<std::size_t, 4> expected = {1, 5, 24, 188};
    detail = "counts";
    for (unsigned n = 0; n < 4; ++n) {
      detail += (n == 0 ? " " : ", ") + std::to_string(census_counts[n]);
    }
    detail += " (" + format_seconds(census_seconds) + ")";
    if (census_counts != expected) {
      detail += ", expected 1, 5, 24, 188";
      return false;
    }
    if (census_seconds >= 600.0) {
      detail += ", exceeding the 10 minute budget";
      return false;
    }
    return true;
  });

  // 5. Elementwise invariants: one idempotent per orbit, index-1 orbits are
  // groups, and the idempotent blocks partition S.
  run(4, [&](std::string& detail) {
    for (const CorpusEntry& entry : corpus) {
      const Semigroup& s = entry.semigroup;
      const ElementSet es = idempotents(s);
      for (const MonogenicProfile& p : all_profiles(s)) {
        std::size_t found = 0;
        for (element w : p.orbit) {
          if (es.contains(w)) {
            ++found;
          }
        }
        if (found != 1 || !es.contains(p.idempotent)) {
          detail = "orbit of " + s.label(p.generator) + " in " +
                   entry.construct + " has " + std::to_string(found) +
                   " idempotents";
          return false;
        }
        if (p.index == 1) {
          // The orbit must be a group: an identity, closure, inverses.
          const element e = p.idempotent;
          const ElementSet orbit = p.orbit_set();
          for (element x : p.orbit) {
            if (s.product(e, x) != x || s.product(x, e) != x) {
              detail = "index-1 orbit of " + s.label(p.generator) + " in " +
                       entry.construct + " lacks an identity";
              return false;
            }
            bool inverse = false;
            for (element y : p.orbit) {
              if (!orbit.contains(s.product(x, y))) {
                detail = "index-1 orbit of " + s.label(p.generator) +
                         " in " + entry.construct + " is not closed";
                return false;
              }
              if (s.product(x, y) == e && s.product(y, x) == e) {
                inverse = true;
              }
            }
            if (!inverse) {
              detail = "index-1 orbit of " + s.label(p.generator) + " in " +
                       entry.construct + " lacks inverses";
              return false;
            }
          }
        }
      }
      // Blocks indexed by idempotent, pairwise disjoint, covering S.
      const std::map<element, ElementSet> blocks = s_f_partition(s);
      ElementSet seen(s.order());
      for (const auto& [f, block] : blocks) {
        if (!es.contains(f) || seen.intersects(block)) {
          detail = "overlapping idempotent blocks in " + entry.construct;
          return false;
        }
        seen |= block;
      }
      if (seen != ElementSet::full(s.order())) {
        detail = "idempotent blocks do not cover " + entry.construct;
        return false;
      }
    }
    detail = "all invariants hold over " + std::to_string(corpus.size()) +
             " semigroups";
    return true;
  });

  // 6. Group corollaries.
  run(5, [&](std::string& detail) {
    std::size_t groups = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const std::string& name = corpus[i].construct;
      if (name.rfind("C(", 0) != 0) {
        continue;  // groups in the corpus are C(n) and C(a)xC(b)
      }
      ++groups;
      if (!graphs_equal(bundles[i].gamma, bundles[i].pe)) {
        detail = "Gamma != P_e for the group " + name;
        return false;
      }
    }
    for (unsigned n = 1; n <= 60; ++n) {
      const std::size_t i = by_name.at("C(" + std::to_string(n) + ")");
      if (is_complete(bundles[i].pow) != is_prime_power(n)) {
        detail = "Pow(C(" + std::to_string(n) +
                 ")) completeness disagrees with prime-power test";
        return false;
      }
    }
    for (unsigned a = 1; a <= 6; ++a) {
      for (unsigned b = 1; b <= 6; ++b) {
        const std::size_t i = by_name.at("C(" + std::to_string(a) + ")xC(" +
                                         std::to_string(b) + ")");
        const bool equal = graphs_equal(bundles[i].pe, bundles[i].pc);
        if (equal != (std::gcd(a, b) == 1)) {
          detail = "P_e = P_c should hold for C(a)xC(b) exactly when "
                   "gcd(a,b) = 1; fails at a=" +
                   std::to_string(a) + ", b=" + std::to_string(b);
          return false;
        }
      }
    }
    detail = std::to_string(groups) + " groups checked";
    return true;
  });

  // 7. Negative control: a deliberately corrupted predicate must be caught.
  run(6, [&](std::string& detail) {
    CensusConfig config;
    config.max_order = 2;
    const PredicateOverride lie = [](const Semigroup&,
                                     TheoremId t) -> std::optional<bool> {
      if (t == TheoremId::PcComplete) {
        return true;
      }
      return std::nullopt;
    };
    const std::vector<ReportRow> rows = fuzz_theorems(config, lie);
    if (rows.empty()) {
      detail = "corrupted predicate went undetected";
      return false;
    }
    for (const ReportRow& row : rows) {
      if (row.report.theorem != TheoremId::PcComplete ||
          !row.report.witness.has_value()) {
        detail = "mismatch rows must name the corrupted theorem and a "
                 "witness";
        return false;
      }
    }
    if (!fuzz_theorems(config).empty()) {
      detail = "honest predicates reported a mismatch";
      return false;
    }
    detail = std::to_string(rows.size()) +
             " mismatches caught, honest run clean";
    return true;
  });

  static const char* const kNames[7] = {
      "spanning chain Pow <= Gamma <= P_e <= P_c",
      "predicates agree with direct graph verdicts",
      "golden graph fixtures reproduced",
      "census counts 1, 5, 24, 188",
      "orbit, kernel and partition invariants",
      "group corollaries",
      "corrupted predicate detected",
  };
  int failures = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Outcome& out = results[i];
    if (!out.pass) {
      ++failures;
    }
    std::printf("[%s] criterion %zu: %s — %s\n", out.pass ? "PASS" : "FAIL",
                i + 1, kNames[i], out.detail.c_str());
  }
  std::printf("%d of 7 criteria passed\n", 7 - failures);
  return failures;
}
