#include "wcw/wcw_space.hpp"

#include <algorithm>
#include <stdexcept>

#include "wcw/errors.hpp"
#include "wcw/witness.hpp"

namespace wcw {

namespace {

// Grows the x side in increasing vertex order. The smallest vertex of the
// whole subgraph is always min(x), which fixes the canonical orientation, so
// y is drawn from common neighbors larger than min(x).
class BipartiteSearch {
 public:
  BipartiteSearch(const Graph& g, const VertexSet& within, const EnumerationBudget& budget)
      : g_(g), within_(within), budget_(budget) {}

  std::vector<Bipartition> run() {
    for (Vertex v : within_) {
      VertexSet side(g_.order(), {v});
      grow_x(side, g_.neighbors(v) & within_);
    }
    return std::move(found_);
  }

 private:
  void tick() {
    if (++nodes_ > budget_.max_subsets) {
      throw ResourceExhausted("bipartite subgraph search exceeded " + std::to_string(budget_.max_subsets) +
                              " search nodes");
    }
  }

  void grow_x(VertexSet& x, const VertexSet& common) {
    tick();
    if (common.empty()) return;
    const Vertex lowest = x.first();
    std::vector<Vertex> pool;
    for (Vertex c : common) {
      if (c > lowest) pool.push_back(c);
    }
    VertexSet y(g_.order());
    grow_y(x, pool, 0, y);

    Vertex last = 0;
    for (Vertex v : x) last = v;
    for (Vertex w = within_.next(last); w != 0; w = within_.next(w)) {
      if (g_.neighbors(w).intersects(x)) continue;
      VertexSet next_common = common & g_.neighbors(w);
      if (next_common.empty()) continue;
      x.insert(w);
      grow_x(x, next_common);
      x.erase(w);
    }
  }

  void grow_y(const VertexSet& x, const std::vector<Vertex>& pool, std::size_t from, VertexSet& y) {
    for (std::size_t i = from; i < pool.size(); ++i) {
      Vertex v = pool[i];
      if (g_.neighbors(v).intersects(y)) continue;
      tick();
      y.insert(v);
      if (found_.size() >= budget_.max_sets) {
        throw ResourceExhausted("more than " + std::to_string(budget_.max_sets) +
                                " induced complete bipartite subgraphs");
      }
      found_.emplace_back(x, y);
      grow_y(x, pool, i + 1, y);
      y.erase(v);
    }
  }

  const Graph& g_;
  const VertexSet& within_;
  const EnumerationBudget& budget_;
  std::vector<Bipartition> found_;
  std::size_t nodes_ = 0;
};

RationalVector ones_vector(std::size_t n) { return RationalVector(n, Rational(1)); }

}  // namespace

std::vector<Bipartition> induced_complete_bipartites(const Graph& g, const VertexSet& within,
                                                     const EnumerationBudget& budget) {
  budget.validate();
  if (within.universe() != g.order()) throw std::invalid_argument("vertex set does not match graph");
  auto found = BipartiteSearch(g, within, budget).run();
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

RationalVector restriction_row(const Bipartition& b) {
  RationalVector row(static_cast<std::size_t>(b.x().universe()), Rational(0));
  for (Vertex v : b.x()) row[static_cast<std::size_t>(v - 1)] = 1;
  for (Vertex v : b.y()) row[static_cast<std::size_t>(v - 1)] = -1;
  return row;
}

WeightSpace wcw_basis_definitional(const Graph& g, const EnumerationBudget& budget) {
  const auto n = static_cast<std::size_t>(g.order());
  const auto sets = enumerate_maximal_is(g, budget);
  RowEchelon constraints(n);
  for (std::size_t i = 1; i < sets.size(); ++i) {
    RationalVector row(n, Rational(0));
    for (Vertex v : sets[i]) row[static_cast<std::size_t>(v - 1)] += 1;
    for (Vertex v : sets.front()) row[static_cast<std::size_t>(v - 1)] -= 1;
    constraints.add(std::move(row));
  }
  return nullspace(constraints);
}

std::vector<GeneratingSubgraph> enumerate_generating_subgraphs(const Graph& g, const EnumerationBudget& budget) {
  std::vector<GeneratingSubgraph> out;
  for (Bipartition& b : induced_complete_bipartites(g, g.vertices(), budget)) {
    if (auto witness = is_generating(g, b, budget)) {
      out.push_back({std::move(b), std::move(*witness)});
    }
  }
  return out;
}

WeightSpace wcw_basis_generating(const Graph& g, const EnumerationBudget& budget) {
  RowEchelon constraints(static_cast<std::size_t>(g.order()));
  for (const auto& found : enumerate_generating_subgraphs(g, budget)) {
    constraints.add(restriction_row(found.subgraph));
  }
  return nullspace(constraints);
}

namespace {

void add_local_restrictions(const Graph& g, Vertex v, const EnumerationBudget& budget, RowEchelon& constraints) {
  const VertexSet ball = closed_layer(g, VertexSet(g.order(), {v}), 2);
  for (const Bipartition& b : induced_complete_bipartites(g, ball, budget)) {
    if (!b.x().contains(v) && !b.y().contains(v)) continue;
    if (is_generating(g, b, budget)) constraints.add(restriction_row(b));
  }
}

}  // namespace

WeightSpace local_space(const Graph& g, Vertex v, const EnumerationBudget& budget) {
  g.check_vertex(v);
  RowEchelon constraints(static_cast<std::size_t>(g.order()));
  add_local_restrictions(g, v, budget, constraints);
  return nullspace(constraints);
}

WeightSpace wcw_basis_local(const Graph& g, const EnumerationBudget& budget) {
  RowEchelon constraints(static_cast<std::size_t>(g.order()));
  for (Vertex v = 1; v <= g.order(); ++v) add_local_restrictions(g, v, budget, constraints);
  return nullspace(constraints);
}

std::optional<WcwMethod> parse_wcw_method(std::string_view name) {
  if (name == "definitional") return WcwMethod::definitional;
  if (name == "generating") return WcwMethod::generating;
  if (name == "local") return WcwMethod::local;
  return std::nullopt;
}

WeightSpace compute_wcw(const Graph& g, WcwMethod method, const EnumerationBudget& budget) {
  switch (method) {
    case WcwMethod::definitional:
      return wcw_basis_definitional(g, budget);
    case WcwMethod::generating:
      return wcw_basis_generating(g, budget);
    case WcwMethod::local:
      return wcw_basis_local(g, budget);
  }
  throw std::invalid_argument("unknown WCW method");
}

bool contains_all_ones(const WeightSpace& space) { return space.contains(ones_vector(space.ambient())); }

bool functional_vanishes(const WeightSpace& space, const Bipartition& b) {
  if (static_cast<std::size_t>(b.x().universe()) != space.ambient()) {
    throw std::invalid_argument("bipartition universe does not match the space dimension");
  }
  for (const auto& w : space.basis()) {
    Rational difference = 0;
    for (Vertex v : b.x()) difference += w[static_cast<std::size_t>(v - 1)];
    for (Vertex v : b.y()) difference -= w[static_cast<std::size_t>(v - 1)];
    if (difference != 0) return false;
  }
  return true;
}

}  // namespace wcw
