#ifndef SEMIGRAPHS_GRAPHS_HPP
#define SEMIGRAPHS_GRAPHS_HPP

#include <boost/dynamic_bitset.hpp>
#include <string>
#include <utility>
#include <vector>

#include "semigraphs/semigroup.hpp"

namespace semigraphs {

enum class GraphKind { Power, Cyclic, EnhancedPower, Commuting };

// "power", "cyclic", "enhanced", "commuting".
std::string kind_name(GraphKind kind);
GraphKind kind_from_name(const std::string& name);  // throws UnknownFormat

// A simple undirected graph on the elements of one semigroup: symmetric,
// loop-free adjacency over vertex ids 0..n-1, stored as one bitset row per
// vertex.  Graphs built over a semigroup keep a pointer to it (which must
// outlive them); graphs read back from JSON carry none.
class SimpleGraph {
 public:
  SimpleGraph(unsigned order, GraphKind kind,
              const Semigroup* source = nullptr);

  unsigned order() const { return order_; }
  GraphKind kind() const { return kind_; }
  const Semigroup* source() const { return source_; }

  bool adjacent(element x, element y) const { return adj_[x].test(y); }

  // x and y must be distinct; inserts both directions.
  void add_edge(element x, element y);

  std::size_t edge_count() const;

  // Edges as (u, v) with u < v, ascending.
  std::vector<std::pair<element, element>> edges() const;

  const boost::dynamic_bitset<>& row(element x) const { return adj_[x]; }

 private:
  unsigned order_;
  GraphKind kind_;
  const Semigroup* source_;
  std::vector<boost::dynamic_bitset<>> adj_;
};

// x ~ y iff one is a positive power of the other.
SimpleGraph power_graph(const Semigroup& s);

// x ~ y iff the subsemigroup <x, y> is monogenic.
SimpleGraph cyclic_graph(const Semigroup& s);

// x ~ y iff x and y are both powers of some common element.
SimpleGraph enhanced_power_graph(const Semigroup& s);

// x ~ y iff xy = yx.
SimpleGraph commuting_graph(const Semigroup& s);

SimpleGraph build_graph(const Semigroup& s, GraphKind kind);

// Every pair of distinct vertices adjacent; true when order <= 1.
bool is_complete(const SimpleGraph& g);

// Equality of edge sets.  Both graphs must be over the same source semigroup
// (when both know their source) and the same vertex count: SourceMismatch.
bool graphs_equal(const SimpleGraph& g1, const SimpleGraph& g2);

// True iff every edge of g1 is an edge of g2 (same vertex set; g1 then spans
// g2 from below).  Same source rules as graphs_equal.
bool is_spanning_subgraph(const SimpleGraph& g1, const SimpleGraph& g2);

// format "dot" or "json"; anything else raises UnknownFormat.  Output is
// deterministic: vertices ascending, edges sorted with the lower id first.
std::string export_graph(const SimpleGraph& g, const std::string& format);

// Reads back the JSON produced by export_graph (source is left empty).
SimpleGraph import_graph_json(const std::string& text);

}  // namespace semigraphs

#endif  // SEMIGRAPHS_GRAPHS_HPP
