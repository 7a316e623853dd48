#pragma once

#include <string>

#include "wcw/graph.hpp"

namespace wcw {

/**
 * Ordered pair of disjoint, nonempty vertex sets designating a candidate
 * induced complete bipartite subgraph.
 *
 * Construction normalizes the orientation: the side that is smaller in
 * lexicographic order becomes `x()`. Whether the pair really induces a
 * complete bipartite subgraph depends on the ambient graph and is checked by
 * is_induced_complete_bipartite().
 */
class Bipartition {
 public:
  Bipartition(VertexSet a, VertexSet b);

  /// Convenience for an edge {u,v}: ({u},{v}) oriented.
  static Bipartition edge(const Graph& g, Vertex u, Vertex v);

  const VertexSet& x() const { return x_; }
  const VertexSet& y() const { return y_; }
  VertexSet both() const { return x_ | y_; }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  VertexSet x_;
  VertexSet y_;
};

/// Orders by x side (shortlex), then y side.
bool canonical_less(const Bipartition& a, const Bipartition& b);

/// Every x-y pair is an edge and both sides are independent.
bool is_induced_complete_bipartite(const Graph& g, const Bipartition& b);

/// "BX {1,3} BY {2,4}"
std::string to_string(const Bipartition& b);

}  // namespace wcw
