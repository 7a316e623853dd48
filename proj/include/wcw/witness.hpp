#pragma once

#include <optional>

#include "wcw/bipartition.hpp"
#include "wcw/independent_sets.hpp"

namespace wcw {

/**
 * Localized search space around an induced complete bipartite subgraph B.
 *
 * With R = V \ N[B_X ∪ B_Y], a maximal independent set W of G[R] makes both
 * W ∪ B_X and W ∪ B_Y maximal in G exactly when W dominates m_x ∪ m_y. Only
 * vertices of R adjacent to m_x ∪ m_y can help with that, and those form
 * `candidates`.
 */
struct BoundarySets {
  VertexSet m_x;         // N(B_X) ∩ N_2(B_Y)
  VertexSet m_y;         // N(B_Y) ∩ N_2(B_X)
  VertexSet candidates;  // vertices outside N[B] with a neighbor in m_x ∪ m_y

  VertexSet boundary() const { return m_x | m_y; }
};

/// Throws std::invalid_argument unless B induces a complete bipartite subgraph.
void require_valid(const Graph& g, const Bipartition& b);

BoundarySets boundary_sets(const Graph& g, const Bipartition& b);

/// (N_2(B_X) ∩ N_3(B_Y)) ∪ (N_2(B_Y) ∩ N_3(B_X)). Strictly smaller than
/// `candidates` in general (empty for any edge of C5), so the search does not
/// use it; kept for diagnostics and regression tests.
VertexSet distance_three_candidates(const Graph& g, const Bipartition& b);

/// V \ N[B_X ∪ B_Y]: where every witness lives.
VertexSet residual_vertices(const Graph& g, const Bipartition& b);

/// Definitional check: W independent, disjoint from N[B], and both W ∪ B_X
/// and W ∪ B_Y maximal independent in G.
bool is_witness(const Graph& g, const Bipartition& b, const VertexSet& w);

/**
 * Decides whether B is generating by searching subsets of `candidates` in
 * order of increasing size, then lexicographically. The first independent
 * subset that dominates m_x ∪ m_y is completed greedily inside the residual
 * vertices, and the completed witness is returned. nullopt when B is not
 * generating.
 *
 * Throws std::invalid_argument for an invalid B and ResourceExhausted when
 * more than `budget.max_subsets` subsets are probed.
 */
std::optional<VertexSet> is_generating(const Graph& g, const Bipartition& b,
                                       const EnumerationBudget& budget = {});

/// is_generating for B = ({x},{y}). Requires xy ∈ E.
std::optional<VertexSet> is_relating(const Graph& g, Vertex x, Vertex y, const EnumerationBudget& budget = {});

/// Reference route: enumerates the maximal independent sets of G[R] and
/// returns the first (shortlex) that dominates m_x ∪ m_y.
std::optional<VertexSet> is_generating_oracle(const Graph& g, const Bipartition& b,
                                              const EnumerationBudget& budget = {});

}  // namespace wcw
