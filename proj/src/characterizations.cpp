#include "semigraphs/characterizations.hpp"

#include <cstdlib>
#include <stdexcept>

namespace semigraphs {

std::string theorem_key(TheoremId t) {
  switch (t) {
    case TheoremId::PeComplete:
      return "pe_complete";
    case TheoremId::GammaComplete:
      return "gamma_complete";
    case TheoremId::PowComplete:
      return "pow_complete";
    case TheoremId::PcComplete:
      return "pc_complete";
    case TheoremId::PeEqGamma:
      return "pe_eq_gamma";
    case TheoremId::GammaEqPow:
      return "gamma_eq_pow";
    case TheoremId::PeEqPow:
      return "pe_eq_pow";
    case TheoremId::GammaEqPc:
      return "gamma_eq_pc";
    case TheoremId::PeEqPc:
      return "pe_eq_pc";
    case TheoremId::PowEqPc:
      return "pow_eq_pc";
  }
  return "?";
}

std::string theorem_label(TheoremId t) {
  switch (t) {
    case TheoremId::PeComplete:
      return "P_e(S) complete";
    case TheoremId::GammaComplete:
      return "Gamma(S) complete";
    case TheoremId::PowComplete:
      return "Pow(S) complete";
    case TheoremId::PcComplete:
      return "P_c(S) complete";
    case TheoremId::PeEqGamma:
      return "P_e(S) = Gamma(S)";
    case TheoremId::GammaEqPow:
      return "Gamma(S) = Pow(S)";
    case TheoremId::PeEqPow:
      return "P_e(S) = Pow(S)";
    case TheoremId::GammaEqPc:
      return "Gamma(S) = P_c(S)";
    case TheoremId::PeEqPc:
      return "P_e(S) = P_c(S)";
    case TheoremId::PowEqPc:
      return "Pow(S) = P_c(S)";
  }
  return "?";
}

bool is_prime(unsigned n) {
  if (n < 2) {
    return false;
  }
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

bool is_prime_power(unsigned n) {
  if (n == 0) {
    return false;
  }
  if (n == 1) {
    return true;
  }
  unsigned p = 2;
  while (n % p != 0) {
    ++p;
  }
  while (n % p == 0) {
    n /= p;
  }
  return n == 1;
}

namespace {

// Index/period shape shared by the completeness and equality conditions:
// m in {1, 2}, or m = 3 with odd period.
bool index_period_shape(unsigned index, unsigned period) {
  return index <= 2 || (index == 3 && period % 2 == 1);
}

}  // namespace

bool pe_complete_pred(const Semigroup& s) {
  return is_monogenic(s).has_value();
}

bool gamma_complete_pred(const Semigroup& s) {
  const std::optional<element> gen = is_monogenic(s);
  if (!gen) {
    return false;
  }
  const MonogenicProfile p = monogenic_profile(s, *gen);
  return index_period_shape(p.index, p.period);
}

bool pow_complete_pred(const Semigroup& s) {
  const std::optional<element> gen = is_monogenic(s);
  if (!gen) {
    return false;
  }
  const MonogenicProfile p = monogenic_profile(s, *gen);
  return is_prime_power(p.period) && index_period_shape(p.index, p.period);
}

bool chain_condition(const Semigroup& s) {
  std::vector<ElementSet> orbits;
  orbits.reserve(s.order());
  for (element a = 0; a < s.order(); ++a) {
    orbits.push_back(monogenic_profile(s, a).orbit_set());
  }
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    for (std::size_t j = i + 1; j < orbits.size(); ++j) {
      if (!orbits[i].is_subset_of(orbits[j]) &&
          !orbits[j].is_subset_of(orbits[i])) {
        return false;
      }
    }
  }
  return true;
}

bool pc_complete_pred(const Semigroup& s) { return s.is_commutative(); }

bool pe_eq_gamma_pred(const Semigroup& s) {
  for (element a = 0; a < s.order(); ++a) {
    const MonogenicProfile p = monogenic_profile(s, a);
    if (!index_period_shape(p.index, p.period)) {
      return false;
    }
  }
  return true;
}

bool gamma_eq_pow_pred(const Semigroup& s) {
  bool by_periods = true;
  for (element a = 0; a < s.order(); ++a) {
    if (!is_prime_power(monogenic_profile(s, a).period)) {
      by_periods = false;
      break;
    }
  }
  bool by_subgroups = true;
  for (const ElementSet& k : cyclic_subgroups(s)) {
    if (!is_prime_power(static_cast<unsigned>(k.size()))) {
      by_subgroups = false;
      break;
    }
  }
  if (by_periods != by_subgroups) {
    throw std::logic_error(
        "period and cyclic-subgroup formulations disagree");
  }
  return by_periods;
}

bool pe_eq_pow_pred(const Semigroup& s) {
  for (element a = 0; a < s.order(); ++a) {
    const MonogenicProfile p = monogenic_profile(s, a);
    if (!is_prime_power(p.period)) {
      return false;
    }
    // With a prime-power period, an odd period means an odd base prime, so
    // the m = 3 case of the shape is exactly "p odd" (period 1 included).
    if (!index_period_shape(p.index, p.period)) {
      return false;
    }
  }
  return true;
}

std::size_t exhaustive_bound_from_env() {
  if (const char* raw = std::getenv("SEMIGRAPHS_MAX_EXHAUSTIVE")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(raw, &end, 10);
    if (end != raw && *end == '\0' && v > 0) {
      return static_cast<std::size_t>(v);
    }
  }
  return kDefaultExhaustiveBound;
}

bool gamma_eq_pc_pred(const Semigroup& s, SubsemigroupMode mode,
                      std::optional<std::size_t> bound) {
  const unsigned n = s.order();
  if (mode == SubsemigroupMode::TwoGenerated) {
    for (element x = 0; x < n; ++x) {
      for (element y = x + 1; y < n; ++y) {
        if (s.product(x, y) != s.product(y, x)) {
          continue;
        }
        ElementSet pair(n);
        pair.add(x);
        pair.add(y);
        if (!is_monogenic(s, generated(s, pair))) {
          return false;
        }
      }
    }
    return true;
  }
  const std::size_t limit = bound ? *bound : exhaustive_bound_from_env();
  if (n > limit || n > 63) {
    throw TooLargeForExhaustive(n, limit);
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet subset(n);
    for (unsigned i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        subset.add(i);
      }
    }
    const std::vector<element> members = subset.members();
    bool commutative_closed = true;
    for (element u : members) {
      for (element v : members) {
        if (!subset.contains(s.product(u, v)) ||
            s.product(u, v) != s.product(v, u)) {
          commutative_closed = false;
          break;
        }
      }
      if (!commutative_closed) {
        break;
      }
    }
    if (commutative_closed && !is_monogenic(s, subset)) {
      return false;
    }
  }
  return true;
}

bool pe_eq_pc_pred(const Semigroup& s) {
  const unsigned n = s.order();
  // (i) distinct idempotents never commute.
  const std::vector<element> idem = idempotents(s).members();
  for (std::size_t i = 0; i < idem.size(); ++i) {
    for (std::size_t j = i + 1; j < idem.size(); ++j) {
      if (s.product(idem[i], idem[j]) == s.product(idem[j], idem[i])) {
        return false;
      }
    }
  }
  // (ii) no subgroup C_p x C_p.
  if (has_cpxcp_subgroup(s)) {
    return false;
  }
  // (iii) commuting pairs with an index above 1 share an orbit.
  std::vector<MonogenicProfile> profiles = all_profiles(s);
  std::vector<ElementSet> orbit_sets;
  orbit_sets.reserve(n);
  for (const auto& p : profiles) {
    orbit_sets.push_back(p.orbit_set());
  }
  for (element x = 0; x < n; ++x) {
    for (element y = x + 1; y < n; ++y) {
      if (s.product(x, y) != s.product(y, x)) {
        continue;
      }
      if (profiles[x].index <= 1 && profiles[y].index <= 1) {
        continue;
      }
      bool shared = false;
      for (element z = 0; z < n; ++z) {
        if (orbit_sets[z].contains(x) && orbit_sets[z].contains(y)) {
          shared = true;
          break;
        }
      }
      if (!shared) {
        return false;
      }
    }
  }
  return true;
}

bool pow_eq_pc_pred(const Semigroup& s) {
  return gamma_eq_pow_pred(s) &&
         gamma_eq_pc_pred(s, SubsemigroupMode::TwoGenerated);
}

namespace {

bool predicate_verdict(const Semigroup& s, TheoremId t) {
  switch (t) {
    case TheoremId::PeComplete:
      return pe_complete_pred(s);
    case TheoremId::GammaComplete:
      return gamma_complete_pred(s);
    case TheoremId::PowComplete:
      return pow_complete_pred(s);
    case TheoremId::PcComplete:
      return pc_complete_pred(s);
    case TheoremId::PeEqGamma:
      return pe_eq_gamma_pred(s);
    case TheoremId::GammaEqPow:
      return gamma_eq_pow_pred(s);
    case TheoremId::PeEqPow:
      return pe_eq_pow_pred(s);
    case TheoremId::GammaEqPc:
      return gamma_eq_pc_pred(s, SubsemigroupMode::TwoGenerated);
    case TheoremId::PeEqPc:
      return pe_eq_pc_pred(s);
    case TheoremId::PowEqPc:
      return pow_eq_pc_pred(s);
  }
  throw std::logic_error("unreachable theorem id");
}

// The one or two graphs a theorem talks about.
const SimpleGraph* first_graph(const GraphBundle& b, TheoremId t) {
  switch (t) {
    case TheoremId::PeComplete:
    case TheoremId::PeEqGamma:
    case TheoremId::PeEqPow:
    case TheoremId::PeEqPc:
      return &b.pe;
    case TheoremId::GammaComplete:
    case TheoremId::GammaEqPow:
    case TheoremId::GammaEqPc:
      return &b.gamma;
    case TheoremId::PowComplete:
    case TheoremId::PowEqPc:
      return &b.pow;
    case TheoremId::PcComplete:
      return &b.pc;
  }
  return nullptr;
}

const SimpleGraph* second_graph(const GraphBundle& b, TheoremId t) {
  switch (t) {
    case TheoremId::PeEqGamma:
      return &b.gamma;
    case TheoremId::GammaEqPow:
      return &b.pow;
    case TheoremId::PeEqPow:
      return &b.pow;
    case TheoremId::GammaEqPc:
    case TheoremId::PeEqPc:
    case TheoremId::PowEqPc:
      return &b.pc;
    default:
      return nullptr;  // completeness theorems
  }
}

std::string completeness_witness(const SimpleGraph& g) {
  for (element x = 0; x < g.order(); ++x) {
    for (element y = x + 1; y < g.order(); ++y) {
      if (!g.adjacent(x, y)) {
        return "pair (" + std::to_string(x) + ", " + std::to_string(y) +
               ") not adjacent in " + kind_name(g.kind());
      }
    }
  }
  return "graph is complete";
}

std::string equality_witness(const SimpleGraph& g1, const SimpleGraph& g2) {
  for (element x = 0; x < g1.order(); ++x) {
    for (element y = x + 1; y < g1.order(); ++y) {
      if (g1.adjacent(x, y) != g2.adjacent(x, y)) {
        const SimpleGraph& owner = g1.adjacent(x, y) ? g1 : g2;
        return "pair (" + std::to_string(x) + ", " + std::to_string(y) +
               ") adjacent only in " + kind_name(owner.kind());
      }
    }
  }
  return "graphs are equal";
}

}  // namespace

VerificationReport verify(const Semigroup& s, const GraphBundle& graphs,
                          TheoremId t, std::optional<bool> forced_predicate) {
  VerificationReport report;
  report.theorem = t;
  report.predicate_verdict =
      forced_predicate ? *forced_predicate : predicate_verdict(s, t);
  const SimpleGraph* g1 = first_graph(graphs, t);
  const SimpleGraph* g2 = second_graph(graphs, t);
  report.graph_verdict = g2 ? graphs_equal(*g1, *g2) : is_complete(*g1);
  if (!report.ok()) {
    report.witness = (report.predicate_verdict ? "predicate true, graph says: "
                                               : "predicate false, graph says: ") +
                     (g2 ? equality_witness(*g1, *g2)
                         : completeness_witness(*g1));
  }
  return report;
}

VerificationReport verify(const Semigroup& s, const GraphBundle& graphs,
                          TheoremId t) {
  return verify(s, graphs, t, std::nullopt);
}

VerificationReport verify(const Semigroup& s, TheoremId t) {
  return verify(s, GraphBundle(s), t, std::nullopt);
}

}  // namespace semigraphs
