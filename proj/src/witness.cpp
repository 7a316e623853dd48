#include "wcw/witness.hpp"

#include <stdexcept>
#include <vector>

#include "wcw/errors.hpp"

namespace wcw {

void require_valid(const Graph& g, const Bipartition& b) {
  if (!is_induced_complete_bipartite(g, b)) {
    throw std::invalid_argument(to_string(b) + " is not an induced complete bipartite subgraph");
  }
}

VertexSet residual_vertices(const Graph& g, const Bipartition& b) {
  return g.vertices() - closed_neighborhood(g, b.both());
}

BoundarySets boundary_sets(const Graph& g, const Bipartition& b) {
  require_valid(g, b);
  const VertexSet near_x = layer(g, b.x(), 1);
  const VertexSet near_y = layer(g, b.y(), 1);
  BoundarySets sets{
      .m_x = near_x & layer(g, b.y(), 2),
      .m_y = near_y & layer(g, b.x(), 2),
      .candidates = VertexSet(g.order()),
  };
  const VertexSet residual = residual_vertices(g, b);
  for (Vertex v : sets.boundary()) sets.candidates |= g.neighbors(v) & residual;
  return sets;
}

VertexSet distance_three_candidates(const Graph& g, const Bipartition& b) {
  require_valid(g, b);
  return (layer(g, b.x(), 2) & layer(g, b.y(), 3)) | (layer(g, b.y(), 2) & layer(g, b.x(), 3));
}

bool is_witness(const Graph& g, const Bipartition& b, const VertexSet& w) {
  if (w.universe() != g.order()) return false;
  if (!is_independent(g, w)) return false;
  if (w.intersects(closed_neighborhood(g, b.both()))) return false;
  return is_maximal_independent(g, w | b.x()) && is_maximal_independent(g, w | b.y());
}

namespace {

VertexSet checked(const Graph& g, const Bipartition& b, VertexSet witness) {
  if (!is_witness(g, b, witness)) {
    throw std::logic_error("internal error: witness " + to_string(witness) + " fails the recheck for " + to_string(b));
  }
  return witness;
}

// Enumerates independent k-subsets of `pool` in lexicographic order.
class SubsetSearch {
 public:
  SubsetSearch(const Graph& g, std::vector<Vertex> pool, const VertexSet& target, std::size_t max_probes)
      : g_(g), pool_(std::move(pool)), target_(target), max_probes_(max_probes), chosen_(g.order()) {}

  std::optional<VertexSet> run() {
    for (std::size_t k = 0; k <= pool_.size(); ++k) {
      if (search(0, k)) return chosen_;
    }
    return std::nullopt;
  }

 private:
  bool search(std::size_t from, std::size_t remaining) {
    if (++probes_ > max_probes_) {
      throw ResourceExhausted("witness search exceeded " + std::to_string(max_probes_) + " subset probes");
    }
    if (remaining == 0) return dominates(g_, chosen_, target_);
    for (std::size_t i = from; i + remaining <= pool_.size(); ++i) {
      Vertex v = pool_[i];
      if (g_.neighbors(v).intersects(chosen_)) continue;
      chosen_.insert(v);
      if (search(i + 1, remaining - 1)) return true;
      chosen_.erase(v);
    }
    return false;
  }

  const Graph& g_;
  std::vector<Vertex> pool_;
  const VertexSet& target_;
  std::size_t max_probes_;
  VertexSet chosen_;
  std::size_t probes_ = 0;
};

}  // namespace

std::optional<VertexSet> is_generating(const Graph& g, const Bipartition& b, const EnumerationBudget& budget) {
  budget.validate();
  const BoundarySets sets = boundary_sets(g, b);
  const VertexSet target = sets.boundary();
  auto seed = SubsetSearch(g, sets.candidates.members(), target, budget.max_subsets).run();
  if (!seed) return std::nullopt;
  return checked(g, b, extend_greedy(g, *seed, residual_vertices(g, b)));
}

std::optional<VertexSet> is_relating(const Graph& g, Vertex x, Vertex y, const EnumerationBudget& budget) {
  g.check_vertex(x);
  g.check_vertex(y);
  if (!g.adjacent(x, y)) {
    throw std::invalid_argument(std::to_string(x) + " " + std::to_string(y) + " is not an edge");
  }
  return is_generating(g, Bipartition::edge(g, x, y), budget);
}

std::optional<VertexSet> is_generating_oracle(const Graph& g, const Bipartition& b,
                                              const EnumerationBudget& budget) {
  const BoundarySets sets = boundary_sets(g, b);
  const VertexSet target = sets.boundary();
  for (VertexSet& candidate : enumerate_maximal_is(g, residual_vertices(g, b), budget)) {
    if (dominates(g, candidate, target)) return checked(g, b, std::move(candidate));
  }
  return std::nullopt;
}

}  // namespace wcw
