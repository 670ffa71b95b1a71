#ifndef SEMIGRAPHS_CHARACTERIZATIONS_HPP
#define SEMIGRAPHS_CHARACTERIZATIONS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "semigraphs/graphs.hpp"
#include "semigraphs/semigroup.hpp"

namespace semigraphs {

// The ten characterizations: completeness of each graph, and pairwise
// equality of graphs, each decided from the structure of S alone.  verify()
// checks every predicate against the graph built directly.
enum class TheoremId {
  PeComplete,
  GammaComplete,
  PowComplete,
  PcComplete,
  PeEqGamma,
  GammaEqPow,
  PeEqPow,
  GammaEqPc,
  PeEqPc,
  PowEqPc,
};

inline constexpr std::array<TheoremId, 10> kAllTheorems = {
    TheoremId::PeComplete, TheoremId::GammaComplete, TheoremId::PowComplete,
    TheoremId::PcComplete, TheoremId::PeEqGamma,     TheoremId::GammaEqPow,
    TheoremId::PeEqPow,    TheoremId::GammaEqPc,     TheoremId::PeEqPc,
    TheoremId::PowEqPc,
};

// Stable machine key ("pe_complete", ...) and human label ("P_e(S) complete").
std::string theorem_key(TheoremId t);
std::string theorem_label(TheoremId t);

bool is_prime(unsigned n);
// 1 counts as a prime power (p^0).
bool is_prime_power(unsigned n);

// P_e(S) is complete iff S is monogenic.
bool pe_complete_pred(const Semigroup& s);

// The cyclic graph is complete iff S is monogenic with index m in {1, 2}, or
// m = 3 with odd period.
bool gamma_complete_pred(const Semigroup& s);

// The power graph is complete iff S is monogenic, its period is a prime
// power, and m in {1, 2} or (m = 3 with odd period).
bool pow_complete_pred(const Semigroup& s);

// The orbits <a> are linearly ordered by inclusion.  Equivalent to
// pow_complete_pred on every semigroup.
bool chain_condition(const Semigroup& s);

// P_c(S) is complete iff S is commutative.
bool pc_complete_pred(const Semigroup& s);

// P_e(S) = Gamma(S) iff every element has index in {1, 2}, or 3 with odd
// period.
bool pe_eq_gamma_pred(const Semigroup& s);

// Gamma(S) = Pow(S) iff every cyclic subgroup has prime-power order;
// equivalently, iff every element's period is a prime power.  Both
// formulations are computed and must agree.
bool gamma_eq_pow_pred(const Semigroup& s);

// P_e(S) = Pow(S) iff every element's period is a prime power p^k and its
// index is in {1, 2}, or 3 with p odd.
bool pe_eq_pow_pred(const Semigroup& s);

enum class SubsemigroupMode { TwoGenerated, Exhaustive };

inline constexpr std::size_t kDefaultExhaustiveBound = 8;

// Bound for exhaustive subsemigroup enumeration: the value of
// SEMIGRAPHS_MAX_EXHAUSTIVE when set to a positive integer, else the default.
std::size_t exhaustive_bound_from_env();

// Gamma(S) = P_c(S) iff every commutative subsemigroup is monogenic.
// TwoGenerated checks the subsemigroups generated by commuting pairs (which
// suffices); Exhaustive enumerates every product-closed commutative subset
// and refuses orders above the bound (TooLargeForExhaustive).
bool gamma_eq_pc_pred(const Semigroup& s, SubsemigroupMode mode,
                      std::optional<std::size_t> bound = std::nullopt);

// P_e(S) = P_c(S) iff (i) no two distinct idempotents commute, (ii) no
// subgroup C_p x C_p, and (iii) every commuting pair with an index above 1
// lies inside one orbit.
bool pe_eq_pc_pred(const Semigroup& s);

// Pow(S) = P_c(S) iff gamma_eq_pow_pred and gamma_eq_pc_pred both hold.
bool pow_eq_pc_pred(const Semigroup& s);

// All four graphs of one semigroup, built once.
struct GraphBundle {
  SimpleGraph pow, gamma, pe, pc;

  explicit GraphBundle(const Semigroup& s)
      : pow(power_graph(s)), gamma(cyclic_graph(s)),
        pe(enhanced_power_graph(s)), pc(commuting_graph(s)) {}
};

struct VerificationReport {
  TheoremId theorem;
  bool predicate_verdict;
  bool graph_verdict;
  // Set only on disagreement: the witnessing pair or missing edge.
  std::optional<std::string> witness;

  bool ok() const { return predicate_verdict == graph_verdict; }
};

VerificationReport verify(const Semigroup& s, TheoremId t);
VerificationReport verify(const Semigroup& s, const GraphBundle& graphs,
                          TheoremId t);

// Test hook: when forced_predicate is set it replaces the computed predicate
// verdict, so deliberately wrong verdicts surface as mismatches.
VerificationReport verify(const Semigroup& s, const GraphBundle& graphs,
                          TheoremId t, std::optional<bool> forced_predicate);

}  // namespace semigraphs

#endif  // SEMIGRAPHS_CHARACTERIZATIONS_HPP
