#ifndef SEMIGRAPHS_SEMIGROUP_HPP
#define SEMIGRAPHS_SEMIGROUP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semigraphs/element_set.hpp"
#include "semigraphs/errors.hpp"

namespace semigraphs {

// A finite semigroup given by its Cayley table.  Elements are the dense ids
// 0..n-1; table entry (x, y) is the product x*y.  Closure and associativity
// are checked eagerly at construction, so every live Semigroup is valid.
// Instances are immutable and safe to share between threads.
class Semigroup {
 public:
  // Throws OutOfRangeEntry / NotAssociative (first failing triple in
  // lexicographic order) / InvalidParameters on a malformed table.
  explicit Semigroup(const std::vector<std::vector<element>>& table,
                     std::vector<std::string> names = {});

  // Same, from a row-major flat table of length order*order.
  Semigroup(unsigned order, std::vector<element> flat_table,
            std::vector<std::string> names = {});

  unsigned order() const { return order_; }

  element product(element x, element y) const {
    return table_[static_cast<std::size_t>(x) * order_ + y];
  }

  bool has_names() const { return !names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }

  // Display label: the given name, or "e<id>" when none were supplied.
  std::string label(element x) const;

  const std::vector<element>& flat_table() const { return table_; }

  bool is_commutative() const;

 private:
  void validate() const;

  unsigned order_;
  std::vector<element> table_;
  std::vector<std::string> names_;
};

// The power sequence a, a^2, a^3, ... of an element.  The index m is the
// least exponent at which the sequence first revisits a value, the period r
// the least t > 0 with a^(m+t) = a^m.  The orbit lists the m+r-1 distinct
// powers in exponent order; the kernel {a^m, ..., a^(m+r-1)} is a cyclic
// group of order r and contains the unique idempotent power.
struct MonogenicProfile {
  element generator = 0;
  unsigned index = 0;   // m >= 1
  unsigned period = 0;  // r >= 1
  std::vector<element> orbit;
  ElementSet kernel;
  element idempotent = 0;

  std::size_t order() const { return orbit.size(); }  // m + r - 1
  ElementSet orbit_set() const;
};

MonogenicProfile monogenic_profile(const Semigroup& s, element a);

// Profiles of every element, indexed by id.
std::vector<MonogenicProfile> all_profiles(const Semigroup& s);

// Subsemigroup generated by a nonempty subset: the least product-closed
// superset.  Throws EmptyGeneratorSet.
ElementSet generated(const Semigroup& s, const ElementSet& x);

ElementSet idempotents(const Semigroup& s);

// Least generator of the subset if it is the orbit of one of its elements,
// std::nullopt otherwise.  The subset must be product-closed (NotClosed).
std::optional<element> is_monogenic(const Semigroup& s,
                                    const ElementSet& subset);

// Same, applied to all of S.
std::optional<element> is_monogenic(const Semigroup& s);

// Partition of S by the idempotent power of each element: block S_f holds
// every a whose orbit's idempotent is f.  Keys are the idempotent ids.
std::map<element, ElementSet> s_f_partition(const Semigroup& s);

// The maximal subgroup at an idempotent f: all x with x*f = f*x = x that
// have a two-sided inverse over f among such elements.  Throws NotIdempotent.
ElementSet maximal_subgroup_at(const Semigroup& s, element f);

// The distinct subsets that are orbits of index-1 elements; each is a cyclic
// group.  Ordered by ascending member list.
std::vector<ElementSet> cyclic_subgroups(const Semigroup& s);

// True iff some maximal subgroup contains commuting elements x, y of equal
// prime order p with y outside <x>; this witnesses a subgroup C_p x C_p.
bool has_cpxcp_subgroup(const Semigroup& s);

// --- Cayley-table JSON: {"order": n, "table": [[...], ...], "names": [...]}
// ("names" optional).  Malformed input raises SemigroupError with the same
// diagnostics as direct construction.

Semigroup semigroup_from_json(const std::string& text);
std::string semigroup_to_json(const Semigroup& s);
Semigroup load_semigroup_file(const std::string& path);

}  // namespace semigraphs

#endif  // SEMIGRAPHS_SEMIGROUP_HPP
