#include "wcw/bipartition.hpp"

#include <stdexcept>
#include <utility>

namespace wcw {

Bipartition::Bipartition(VertexSet a, VertexSet b) {
  if (a.universe() != b.universe()) throw std::invalid_argument("bipartition sides over different universes");
  if (a.empty() || b.empty()) throw std::invalid_argument("bipartition side is empty");
  if (a.intersects(b)) throw std::invalid_argument("bipartition sides overlap");
  if (lex_less(b, a)) std::swap(a, b);
  x_ = std::move(a);
  y_ = std::move(b);
}

Bipartition Bipartition::edge(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  return Bipartition(VertexSet(g.order(), {u}), VertexSet(g.order(), {v}));
}

bool canonical_less(const Bipartition& a, const Bipartition& b) {
  if (a.x() != b.x()) return shortlex_less(a.x(), b.x());
  return shortlex_less(a.y(), b.y());
}

bool is_induced_complete_bipartite(const Graph& g, const Bipartition& b) {
  if (b.x().universe() != g.order()) throw std::invalid_argument("bipartition does not match graph");
  if (!is_independent(g, b.x()) || !is_independent(g, b.y())) return false;
  for (Vertex v : b.x()) {
    if (!b.y().is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

std::string to_string(const Bipartition& b) {
  return "BX " + to_string(b.x()) + " BY " + to_string(b.y());
}

}  // namespace wcw
