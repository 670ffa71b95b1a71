#include "semigraphs/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <limits>
#include <numeric>
#include <thread>

#include "semigraphs/constructors.hpp"

namespace semigraphs {

namespace {

constexpr element kUnassigned = std::numeric_limits<element>::max();

// Backtracking over Cayley-table cells in row-major order.  A partial table
// is extended one cell at a time; a branch dies as soon as some fully
// determined triple breaks associativity.
class CensusSearch {
 public:
  explicit CensusSearch(unsigned n)
      : n_(n), table_(static_cast<std::size_t>(n) * n, kUnassigned) {}

  // Triple (a, b, c) holds, or is not yet fully determined.
  bool triple_ok(unsigned a, unsigned b, unsigned c) const {
    const element u = table_[a * n_ + b];
    if (u == kUnassigned) {
      return true;
    }
    const element w = table_[b * n_ + c];
    if (w == kUnassigned) {
      return true;
    }
    const element p = table_[u * n_ + c];
    if (p == kUnassigned) {
      return true;
    }
    const element q = table_[a * n_ + w];
    if (q == kUnassigned) {
      return true;
    }
    return p == q;
  }

  // All triples whose value could hinge on cell (x, y): those using it as
  // (a,b), as (b,c), as ((ab),c), or as (a,(bc)).  Whichever of a triple's
  // four lookups is filled last triggers the full check.
  bool consistent_after(unsigned x, unsigned y) const {
    for (unsigned c = 0; c < n_; ++c) {
      if (!triple_ok(x, y, c)) {
        return false;
      }
    }
    for (unsigned a = 0; a < n_; ++a) {
      if (!triple_ok(a, x, y)) {
        return false;
      }
    }
    for (unsigned a = 0; a < n_; ++a) {
      for (unsigned b = 0; b < n_; ++b) {
        const element v = table_[a * n_ + b];
        if (v == x && !triple_ok(a, b, y)) {
          return false;
        }
        if (v == y && !triple_ok(x, a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  // Explore everything below the partial assignment of the first `depth`
  // cells.
  void run(std::size_t depth, bool up_to_iso,
           const std::function<void(const std::vector<element>&)>& emit) {
    if (depth == table_.size()) {
      if (!up_to_iso || is_canonical()) {
        emit(table_);
      }
      return;
    }
    const unsigned x = static_cast<unsigned>(depth / n_);
    const unsigned y = static_cast<unsigned>(depth % n_);
    for (element v = 0; v < n_; ++v) {
      table_[depth] = v;
      if (consistent_after(x, y)) {
        run(depth + 1, up_to_iso, emit);
      }
    }
    table_[depth] = kUnassigned;
  }

  // Depth-first up to the end of the first row only, collecting surviving
  // prefixes; used to split work across threads.
  void collect_prefixes(std::size_t depth,
                        std::vector<std::vector<element>>& out) {
    if (depth == n_) {
      out.emplace_back(table_.begin(), table_.begin() + n_);
      return;
    }
    for (element v = 0; v < n_; ++v) {
      table_[depth] = v;
      if (consistent_after(0, static_cast<unsigned>(depth))) {
        collect_prefixes(depth + 1, out);
      }
    }
    table_[depth] = kUnassigned;
  }

  void seed_prefix(const std::vector<element>& prefix) {
    std::copy(prefix.begin(), prefix.end(), table_.begin());
  }

  // Lexicographically minimal among all relabelings of itself.
  bool is_canonical() const {
    std::vector<element> perm(n_);
    std::iota(perm.begin(), perm.end(), 0u);
    std::vector<element> relabeled(table_.size());
    while (std::next_permutation(perm.begin(), perm.end())) {
      for (unsigned a = 0; a < n_; ++a) {
        for (unsigned b = 0; b < n_; ++b) {
          relabeled[perm[a] * n_ + perm[b]] = perm[table_[a * n_ + b]];
        }
      }
      if (relabeled < table_) {
        return false;
      }
    }
    return true;
  }

 private:
  unsigned n_;
  std::vector<element> table_;
};

void check_census_order(unsigned n) {
  if (n < 1 || n > kMaxCensusOrder) {
    throw OrderTooLarge(n, kMaxCensusOrder);
  }
}

}  // namespace

void for_each_semigroup(unsigned n, bool up_to_iso,
                        const std::function<void(const Semigroup&)>& visit) {
  check_census_order(n);
  CensusSearch search(n);
  search.run(0, up_to_iso, [&](const std::vector<element>& table) {
    visit(Semigroup(n, table));
  });
}

std::vector<Semigroup> enumerate_semigroups(unsigned n, bool up_to_iso,
                                            unsigned workers) {
  check_census_order(n);
  if (workers <= 1) {
    std::vector<Semigroup> out;
    for_each_semigroup(n, up_to_iso,
                       [&](const Semigroup& s) { out.push_back(s); });
    return out;
  }
  // Partition by first-row prefix; buckets keep the sequential order no
  // matter which thread finishes when.
  std::vector<std::vector<element>> prefixes;
  {
    CensusSearch seed(n);
    seed.collect_prefixes(0, prefixes);
  }
  std::vector<std::vector<std::vector<element>>> buckets(prefixes.size());
  std::atomic<std::size_t> next{0};
  auto drain = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size()) {
        return;
      }
      CensusSearch search(n);
      search.seed_prefix(prefixes[i]);
      search.run(n, up_to_iso, [&](const std::vector<element>& table) {
        buckets[i].push_back(table);
      });
    }
  };
  std::vector<std::thread> pool;
  const unsigned count = std::min<unsigned>(workers, std::thread::hardware_concurrency() > 0
                                                         ? std::thread::hardware_concurrency()
                                                         : workers);
  for (unsigned t = 0; t < count; ++t) {
    pool.emplace_back(drain);
  }
  for (auto& t : pool) {
    t.join();
  }
  std::vector<Semigroup> out;
  for (const auto& bucket : buckets) {
    for (const auto& table : bucket) {
      out.emplace_back(n, table);
    }
  }
  return out;
}

std::vector<CorpusEntry> family_corpus() {
  std::vector<CorpusEntry> corpus;
  for (unsigned m = 1; m <= 6; ++m) {
    for (unsigned r = 1; r <= 12; ++r) {
      corpus.push_back({"M(" + std::to_string(m) + "," + std::to_string(r) +
                            ")",
                        make_monogenic(m, r)});
    }
  }
  for (unsigned n = 1; n <= 60; ++n) {
    corpus.push_back({"C(" + std::to_string(n) + ")", make_cyclic_group(n)});
  }
  for (unsigned n = 1; n <= 3; ++n) {
    corpus.push_back({"B(" + std::to_string(n) + ")", make_brandt(n)});
  }
  for (unsigned n = 1; n <= 30; ++n) {
    corpus.push_back({"Zmult(" + std::to_string(n) + ")", make_zn_mult(n)});
  }
  for (unsigned a = 1; a <= 6; ++a) {
    for (unsigned b = 1; b <= 6; ++b) {
      corpus.push_back({"C(" + std::to_string(a) + ")xC(" + std::to_string(b) +
                            ")",
                        make_direct_product(make_cyclic_group(a),
                                            make_cyclic_group(b))});
    }
  }
  corpus.push_back({"signs", signs_semigroup()});
  return corpus;
}

std::vector<CorpusEntry> census_corpus(unsigned max_order, bool up_to_iso,
                                       unsigned workers) {
  check_census_order(max_order);
  std::vector<CorpusEntry> corpus;
  for (unsigned n = 1; n <= max_order; ++n) {
    std::size_t index = 0;
    for (Semigroup& s : enumerate_semigroups(n, up_to_iso, workers)) {
      char name[32];
      std::snprintf(name, sizeof(name), "census(%u,#%04zu)", n, index++);
      corpus.push_back({name, std::move(s)});
    }
  }
  return corpus;
}

std::vector<ReportRow> verification_report(const CensusConfig& config,
                                           bool include_families,
                                           const PredicateOverride& override) {
  std::vector<CorpusEntry> corpus =
      census_corpus(config.max_order, config.up_to_iso, config.worker_count);
  if (include_families) {
    std::vector<CorpusEntry> families = family_corpus();
    corpus.insert(corpus.end(), std::make_move_iterator(families.begin()),
                  std::make_move_iterator(families.end()));
  }
  std::vector<ReportRow> rows;
  rows.reserve(corpus.size() * kAllTheorems.size());
  for (const CorpusEntry& entry : corpus) {
    const GraphBundle graphs(entry.semigroup);
    for (TheoremId t : kAllTheorems) {
      const std::optional<bool> forced =
          override ? override(entry.semigroup, t) : std::nullopt;
      rows.push_back(
          {entry.construct, verify(entry.semigroup, graphs, t, forced)});
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const ReportRow& a, const ReportRow& b) {
              if (a.construct != b.construct) {
                return a.construct < b.construct;
              }
              return static_cast<int>(a.report.theorem) <
                     static_cast<int>(b.report.theorem);
            });
  return rows;
}

std::vector<ReportRow> fuzz_theorems(const CensusConfig& config,
                                     const PredicateOverride& override) {
  std::vector<ReportRow> rows = verification_report(config, true, override);
  std::vector<ReportRow> mismatches;
  for (ReportRow& row : rows) {
    if (!row.report.ok()) {
      mismatches.push_back(std::move(row));
    }
  }
  return mismatches;
}

}  // namespace semigraphs
