#include "semigraphs/graphs.hpp"

#include <cassert>

#include <json.hpp>

namespace semigraphs {

std::string kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::Power:
      return "power";
    case GraphKind::Cyclic:
      return "cyclic";
    case GraphKind::EnhancedPower:
      return "enhanced";
    case GraphKind::Commuting:
      return "commuting";
  }
  return "?";
}

GraphKind kind_from_name(const std::string& name) {
  if (name == "power") {
    return GraphKind::Power;
  }
  if (name == "cyclic") {
    return GraphKind::Cyclic;
  }
  if (name == "enhanced") {
    return GraphKind::EnhancedPower;
  }
  if (name == "commuting") {
    return GraphKind::Commuting;
  }
  throw UnknownFormat(name);
}

SimpleGraph::SimpleGraph(unsigned order, GraphKind kind,
                         const Semigroup* source)
    : order_(order), kind_(kind), source_(source),
      adj_(order, boost::dynamic_bitset<>(order)) {}

void SimpleGraph::add_edge(element x, element y) {
  assert(x != y && x < order_ && y < order_);
  adj_[x].set(y);
  adj_[y].set(x);
}

std::size_t SimpleGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) {
    twice += row.count();
  }
  return twice / 2;
}

std::vector<std::pair<element, element>> SimpleGraph::edges() const {
  std::vector<std::pair<element, element>> out;
  out.reserve(edge_count());
  for (element u = 0; u < order_; ++u) {
    for (auto v = adj_[u].find_next(u); v != boost::dynamic_bitset<>::npos;
         v = adj_[u].find_next(v)) {
      out.emplace_back(u, static_cast<element>(v));
    }
  }
  return out;
}

SimpleGraph power_graph(const Semigroup& s) {
  SimpleGraph g(s.order(), GraphKind::Power, &s);
  for (element y = 0; y < s.order(); ++y) {
    for (element x : monogenic_profile(s, y).orbit) {
      if (x != y) {
        g.add_edge(x, y);
      }
    }
  }
  return g;
}

SimpleGraph enhanced_power_graph(const Semigroup& s) {
  SimpleGraph g(s.order(), GraphKind::EnhancedPower, &s);
  for (element z = 0; z < s.order(); ++z) {
    const std::vector<element> orbit = monogenic_profile(s, z).orbit;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t j = i + 1; j < orbit.size(); ++j) {
        g.add_edge(orbit[i], orbit[j]);
      }
    }
  }
  return g;
}

SimpleGraph cyclic_graph(const Semigroup& s) {
  const unsigned n = s.order();
  // One closure per unordered pair; a closed set is monogenic exactly when
  // it equals the orbit of one of its members.
  std::vector<ElementSet> orbit_sets;
  orbit_sets.reserve(n);
  for (element a = 0; a < n; ++a) {
    orbit_sets.push_back(monogenic_profile(s, a).orbit_set());
  }
  SimpleGraph g(n, GraphKind::Cyclic, &s);
  for (element x = 0; x < n; ++x) {
    for (element y = x + 1; y < n; ++y) {
      ElementSet pair(n);
      pair.add(x);
      pair.add(y);
      const ElementSet closure = generated(s, pair);
      for (element a : closure.members()) {
        if (orbit_sets[a] == closure) {
          g.add_edge(x, y);
          break;
        }
      }
    }
  }
  return g;
}

SimpleGraph commuting_graph(const Semigroup& s) {
  SimpleGraph g(s.order(), GraphKind::Commuting, &s);
  for (element x = 0; x < s.order(); ++x) {
    for (element y = x + 1; y < s.order(); ++y) {
      if (s.product(x, y) == s.product(y, x)) {
        g.add_edge(x, y);
      }
    }
  }
  return g;
}

SimpleGraph build_graph(const Semigroup& s, GraphKind kind) {
  switch (kind) {
    case GraphKind::Power:
      return power_graph(s);
    case GraphKind::Cyclic:
      return cyclic_graph(s);
    case GraphKind::EnhancedPower:
      return enhanced_power_graph(s);
    case GraphKind::Commuting:
      return commuting_graph(s);
  }
  throw InvalidParameters("unreachable graph kind");
}

bool is_complete(const SimpleGraph& g) {
  for (element x = 0; x < g.order(); ++x) {
    if (g.row(x).count() + 1 != g.order()) {
      return false;
    }
  }
  return true;
}

namespace {

void require_comparable(const SimpleGraph& g1, const SimpleGraph& g2) {
  if (g1.order() != g2.order()) {
    throw SourceMismatch();
  }
  if (g1.source() != nullptr && g2.source() != nullptr &&
      g1.source() != g2.source()) {
    throw SourceMismatch();
  }
}

}  // namespace

bool graphs_equal(const SimpleGraph& g1, const SimpleGraph& g2) {
  require_comparable(g1, g2);
  for (element x = 0; x < g1.order(); ++x) {
    if (g1.row(x) != g2.row(x)) {
      return false;
    }
  }
  return true;
}

bool is_spanning_subgraph(const SimpleGraph& g1, const SimpleGraph& g2) {
  require_comparable(g1, g2);
  for (element x = 0; x < g1.order(); ++x) {
    if (!g1.row(x).is_subset_of(g2.row(x))) {
      return false;
    }
  }
  return true;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

}  // namespace

std::string export_graph(const SimpleGraph& g, const std::string& format) {
  if (format == "dot") {
    const Semigroup* src = g.source();
    std::string out = "graph " + kind_name(g.kind()) + " {\n";
    for (element x = 0; x < g.order(); ++x) {
      out += "  e" + std::to_string(x);
      if (src != nullptr && src->has_names()) {
        out += " [label=\"" + dot_escape(src->label(x)) + "\"]";
      }
      out += ";\n";
    }
    for (const auto& [u, v] : g.edges()) {
      out += "  e" + std::to_string(u) + " -- e" + std::to_string(v) + ";\n";
    }
    out += "}\n";
    return out;
  }
  if (format == "json") {
    nlohmann::json j;
    j["order"] = g.order();
    j["kind"] = kind_name(g.kind());
    auto edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) {
      edges.push_back(nlohmann::json::array({u, v}));
    }
    j["edges"] = std::move(edges);
    return j.dump();
  }
  throw UnknownFormat(format);
}

SimpleGraph import_graph_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw InvalidParameters("input is not valid JSON");
  }
  if (!j.is_object() || !j.contains("order") || !j.contains("kind") ||
      !j.contains("edges")) {
    throw InvalidParameters(
        "expected an object with \"order\", \"kind\" and \"edges\"");
  }
  if (!j["order"].is_number_unsigned() || j["order"].get<unsigned>() == 0) {
    throw InvalidParameters("\"order\" must be a positive integer");
  }
  const unsigned n = j["order"].get<unsigned>();
  SimpleGraph g(n, kind_from_name(j["kind"].get<std::string>()));
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
        !e[1].is_number_unsigned()) {
      throw InvalidParameters("edges must be pairs of vertex ids");
    }
    const element u = e[0].get<element>();
    const element v = e[1].get<element>();
    if (u >= n || v >= n || u == v) {
      throw InvalidParameters("edge (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") is not a valid pair");
    }
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace semigraphs
