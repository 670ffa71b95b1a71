#include "semigraphs/semigroup.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace semigraphs {

Semigroup::Semigroup(const std::vector<std::vector<element>>& table,
                     std::vector<std::string> names)
    : order_(static_cast<unsigned>(table.size())), names_(std::move(names)) {
  if (order_ == 0) {
    throw InvalidParameters("a semigroup needs at least one element");
  }
  table_.reserve(static_cast<std::size_t>(order_) * order_);
  for (const auto& row : table) {
    if (row.size() != order_) {
      throw InvalidParameters("table is not square");
    }
    table_.insert(table_.end(), row.begin(), row.end());
  }
  validate();
}

Semigroup::Semigroup(unsigned order, std::vector<element> flat_table,
                     std::vector<std::string> names)
    : order_(order), table_(std::move(flat_table)), names_(std::move(names)) {
  if (order_ == 0) {
    throw InvalidParameters("a semigroup needs at least one element");
  }
  if (table_.size() != static_cast<std::size_t>(order_) * order_) {
    throw InvalidParameters("flat table length does not match order");
  }
  validate();
}

void Semigroup::validate() const {
  if (!names_.empty() && names_.size() != order_) {
    throw InvalidParameters("names list does not match order");
  }
  for (element x = 0; x < order_; ++x) {
    for (element y = 0; y < order_; ++y) {
      if (product(x, y) >= order_) {
        throw OutOfRangeEntry(x, y, product(x, y), order_);
      }
    }
  }
  for (element x = 0; x < order_; ++x) {
    for (element y = 0; y < order_; ++y) {
      const element xy = product(x, y);
      for (element z = 0; z < order_; ++z) {
        if (product(xy, z) != product(x, product(y, z))) {
          throw NotAssociative(x, y, z);
        }
      }
    }
  }
}

std::string Semigroup::label(element x) const {
  if (x < names_.size()) {
    return names_[x];
  }
  return "e" + std::to_string(x);
}

bool Semigroup::is_commutative() const {
  for (element x = 0; x < order_; ++x) {
    for (element y = x + 1; y < order_; ++y) {
      if (product(x, y) != product(y, x)) {
        return false;
      }
    }
  }
  return true;
}

ElementSet MonogenicProfile::orbit_set() const {
  ElementSet s(kernel.universe());
  for (element e : orbit) {
    s.add(e);
  }
  return s;
}

MonogenicProfile monogenic_profile(const Semigroup& s, element a) {
  const unsigned n = s.order();
  // first_seen[e] is the exponent (1-based) at which e first appears, 0 if
  // not yet visited.
  std::vector<unsigned> first_seen(n, 0);
  std::vector<element> powers;
  element cur = a;
  unsigned exp = 1;
  while (first_seen[cur] == 0) {
    first_seen[cur] = exp;
    powers.push_back(cur);
    cur = s.product(cur, a);
    ++exp;
  }
  // The first revisit a^exp = a^m pins down index and period at once.
  MonogenicProfile p;
  p.generator = a;
  p.index = first_seen[cur];
  p.period = exp - p.index;
  p.orbit = std::move(powers);
  p.kernel = ElementSet(n);
  for (std::size_t i = p.index - 1; i < p.orbit.size(); ++i) {
    p.kernel.add(p.orbit[i]);
  }
  bool found = false;
  for (element e : p.orbit) {
    if (s.product(e, e) == e) {
      p.idempotent = e;
      found = true;
      break;
    }
  }
  if (!found) {
    throw std::logic_error("power orbit without an idempotent");
  }
  return p;
}

std::vector<MonogenicProfile> all_profiles(const Semigroup& s) {
  std::vector<MonogenicProfile> out;
  out.reserve(s.order());
  for (element a = 0; a < s.order(); ++a) {
    out.push_back(monogenic_profile(s, a));
  }
  return out;
}

ElementSet generated(const Semigroup& s, const ElementSet& x) {
  if (x.empty()) {
    throw EmptyGeneratorSet();
  }
  ElementSet closure = x;
  std::vector<element> members = x.members();
  // Worklist closure: when members[i] is processed, all pairs among
  // members[0..i] have been multiplied both ways.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (element p : {s.product(members[i], members[j]),
                        s.product(members[j], members[i])}) {
        if (!closure.contains(p)) {
          closure.add(p);
          members.push_back(p);
        }
      }
    }
  }
  return closure;
}

ElementSet idempotents(const Semigroup& s) {
  ElementSet out(s.order());
  for (element e = 0; e < s.order(); ++e) {
    if (s.product(e, e) == e) {
      out.add(e);
    }
  }
  return out;
}

std::optional<element> is_monogenic(const Semigroup& s,
                                    const ElementSet& subset) {
  const std::vector<element> members = subset.members();
  for (element u : members) {
    for (element v : members) {
      const element p = s.product(u, v);
      if (!subset.contains(p)) {
        throw NotClosed(u, v, p);
      }
    }
  }
  // The subset is closed, so the orbit of any member stays inside it; it
  // equals the subset exactly when the sizes agree.  Ascending scan makes
  // the returned generator the least one.
  for (element a : members) {
    if (monogenic_profile(s, a).orbit.size() == members.size()) {
      return a;
    }
  }
  return std::nullopt;
}

std::optional<element> is_monogenic(const Semigroup& s) {
  return is_monogenic(s, ElementSet::full(s.order()));
}

std::map<element, ElementSet> s_f_partition(const Semigroup& s) {
  std::map<element, ElementSet> blocks;
  for (element a = 0; a < s.order(); ++a) {
    const element f = monogenic_profile(s, a).idempotent;
    blocks.try_emplace(f, ElementSet(s.order())).first->second.add(a);
  }
  return blocks;
}

ElementSet maximal_subgroup_at(const Semigroup& s, element f) {
  if (s.product(f, f) != f) {
    throw NotIdempotent(f);
  }
  // Candidates fixed by f on both sides; of those, keep the ones invertible
  // over f within the candidate set.
  std::vector<element> local;
  for (element x = 0; x < s.order(); ++x) {
    if (s.product(x, f) == x && s.product(f, x) == x) {
      local.push_back(x);
    }
  }
  ElementSet h(s.order());
  for (element x : local) {
    for (element y : local) {
      if (s.product(x, y) == f && s.product(y, x) == f) {
        h.add(x);
        break;
      }
    }
  }
  // Cheap sanity check that the result really is a group with identity f.
  const std::vector<element> members = h.members();
  for (element x : members) {
    for (element y : members) {
      if (!h.contains(s.product(x, y))) {
        throw std::logic_error("maximal subgroup is not closed");
      }
    }
  }
  return h;
}

std::vector<ElementSet> cyclic_subgroups(const Semigroup& s) {
  std::set<std::vector<element>> seen;
  for (element a = 0; a < s.order(); ++a) {
    const MonogenicProfile p = monogenic_profile(s, a);
    if (p.index == 1) {
      seen.insert(p.orbit_set().members());
    }
  }
  std::vector<ElementSet> out;
  out.reserve(seen.size());
  for (const auto& members : seen) {
    ElementSet set(s.order());
    for (element e : members) {
      set.add(e);
    }
    out.push_back(std::move(set));
  }
  return out;
}

bool has_cpxcp_subgroup(const Semigroup& s) {
  const auto prime = [](unsigned n) {
    if (n < 2) {
      return false;
    }
    for (unsigned d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  };
  for (element f : idempotents(s).members()) {
    const std::vector<element> h = maximal_subgroup_at(s, f).members();
    std::vector<MonogenicProfile> profiles;
    profiles.reserve(h.size());
    for (element x : h) {
      profiles.push_back(monogenic_profile(s, x));
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
      // Group members have index 1, so the period is the group order.
      const unsigned p = profiles[i].period;
      if (!prime(p)) {
        continue;
      }
      const ElementSet orbit_i = profiles[i].orbit_set();
      for (std::size_t j = i + 1; j < h.size(); ++j) {
        if (profiles[j].period != p) {
          continue;
        }
        if (s.product(h[i], h[j]) != s.product(h[j], h[i])) {
          continue;
        }
        if (!orbit_i.contains(h[j])) {
          return true;
        }
      }
    }
  }
  return false;
}

namespace {

Semigroup semigroup_from_parsed(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table")) {
    throw InvalidParameters(
        "expected an object with \"order\" and \"table\" fields");
  }
  if (!j["order"].is_number_unsigned() || j["order"].get<unsigned>() == 0) {
    throw InvalidParameters("\"order\" must be a positive integer");
  }
  const unsigned n = j["order"].get<unsigned>();
  if (!j["table"].is_array() || j["table"].size() != n) {
    throw InvalidParameters("\"table\" must have one row per element");
  }
  std::vector<element> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : j["table"]) {
    if (!row.is_array() || row.size() != n) {
      throw InvalidParameters("\"table\" rows must have one entry per element");
    }
    for (const auto& entry : row) {
      if (!entry.is_number_unsigned()) {
        throw InvalidParameters("table entries must be nonnegative integers");
      }
      flat.push_back(entry.get<element>());
    }
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    if (!j["names"].is_array() || j["names"].size() != n) {
      throw InvalidParameters("\"names\" must list one name per element");
    }
    for (const auto& name : j["names"]) {
      if (!name.is_string()) {
        throw InvalidParameters("\"names\" entries must be strings");
      }
      names.push_back(name.get<std::string>());
    }
  }
  return Semigroup(n, std::move(flat), std::move(names));
}

}  // namespace

Semigroup semigroup_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw InvalidParameters("input is not valid JSON");
  }
  return semigroup_from_parsed(j);
}

std::string semigroup_to_json(const Semigroup& s) {
  nlohmann::json j;
  j["order"] = s.order();
  auto rows = nlohmann::json::array();
  for (element x = 0; x < s.order(); ++x) {
    auto row = nlohmann::json::array();
    for (element y = 0; y < s.order(); ++y) {
      row.push_back(s.product(x, y));
    }
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  if (s.has_names()) {
    j["names"] = s.names();
  }
  return j.dump();
}

Semigroup load_semigroup_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidParameters("cannot open \"" + path + "\"");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return semigroup_from_json(buf.str());
}

}  // namespace semigraphs
