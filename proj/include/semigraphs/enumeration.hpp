#ifndef SEMIGRAPHS_ENUMERATION_HPP
#define SEMIGRAPHS_ENUMERATION_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "semigraphs/characterizations.hpp"
#include "semigraphs/semigroup.hpp"

namespace semigraphs {

inline constexpr unsigned kMaxCensusOrder = 5;

struct CensusConfig {
  unsigned max_order = 4;
  bool up_to_iso = true;
  unsigned worker_count = 1;
};

// Every Cayley table of order n that is associative, in lexicographic table
// order; with up_to_iso, only those lexicographically minimal under all n!
// relabelings (one representative per isomorphism class).  1 <= n <= 5
// (OrderTooLarge otherwise).
void for_each_semigroup(unsigned n, bool up_to_iso,
                        const std::function<void(const Semigroup&)>& visit);

// Same enumeration, collected; workers > 1 splits the search by first-row
// prefix while keeping the output order identical.
std::vector<Semigroup> enumerate_semigroups(unsigned n, bool up_to_iso,
                                            unsigned workers = 1);

struct CorpusEntry {
  std::string construct;
  Semigroup semigroup;
};

// The built-in construct corpus: M(m,r) for m <= 6, r <= 12; C(n) for
// n <= 60; B(n) for n <= 3; Zmult(n) for n <= 30; C(a)xC(b) for a, b <= 6;
// signs.
std::vector<CorpusEntry> family_corpus();

// The census as corpus entries named census(n,#k), orders 1..max_order.
std::vector<CorpusEntry> census_corpus(unsigned max_order, bool up_to_iso,
                                       unsigned workers = 1);

struct ReportRow {
  std::string construct;
  VerificationReport report;
};

// Replaces the predicate verdict wherever it returns a value (test hook).
using PredicateOverride =
    std::function<std::optional<bool>(const Semigroup&, TheoremId)>;

// verify() for all ten theorems over the census (and optionally the family
// corpus), every row, sorted by construct then theorem.
std::vector<ReportRow> verification_report(
    const CensusConfig& config, bool include_families,
    const PredicateOverride& override = {});

// The rows of verification_report over census plus families where predicate
// and graph verdicts disagree.  Empty unless a predicate is wrong (or
// deliberately overridden).
std::vector<ReportRow> fuzz_theorems(const CensusConfig& config,
                                     const PredicateOverride& override = {});

}  // namespace semigraphs

#endif  // SEMIGRAPHS_ENUMERATION_HPP
