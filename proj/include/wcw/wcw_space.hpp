#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "wcw/bipartition.hpp"
#include "wcw/independent_sets.hpp"
#include "wcw/linalg.hpp"

namespace wcw {

struct GeneratingSubgraph {
  Bipartition subgraph;
  VertexSet witness;
};

/// Every induced complete bipartite subgraph whose vertices lie in `within`,
/// each unordered pair of sides reported once, in canonical orientation.
/// Counts against `budget.max_sets`.
std::vector<Bipartition> induced_complete_bipartites(const Graph& g, const VertexSet& within,
                                                     const EnumerationBudget& budget = {});

/// indicator(B_X) − indicator(B_Y): the restriction w(B_X) = w(B_Y) as a row.
RationalVector restriction_row(const Bipartition& b);

/// WCW(G) straight from the definition: the rows indicator(S_i) − indicator(S_0)
/// over all maximal independent sets S_i, then the nullspace.
WeightSpace wcw_basis_definitional(const Graph& g, const EnumerationBudget& budget = {});

/// All generating subgraphs, sorted canonically, each with one witness.
std::vector<GeneratingSubgraph> enumerate_generating_subgraphs(const Graph& g,
                                                               const EnumerationBudget& budget = {});

/// Nullspace of the restrictions of every generating subgraph.
WeightSpace wcw_basis_generating(const Graph& g, const EnumerationBudget& budget = {});

/// L_v: nullspace of the restrictions of generating subgraphs containing v.
/// Such subgraphs have diameter at most 2, so they are searched for inside
/// N_2[v] only.
WeightSpace local_space(const Graph& g, Vertex v, const EnumerationBudget& budget = {});

/// Intersection of L_v over all vertices.
WeightSpace wcw_basis_local(const Graph& g, const EnumerationBudget& budget = {});

enum class WcwMethod { definitional, generating, local };

std::optional<WcwMethod> parse_wcw_method(std::string_view name);
WeightSpace compute_wcw(const Graph& g, WcwMethod method, const EnumerationBudget& budget = {});

/// w ≡ 1 lies in the space; for WCW(G) this says G is well-covered.
bool contains_all_ones(const WeightSpace& space);

/// w(B_X) = w(B_Y) for every w in the space. Necessary for B to be
/// generating when the space is WCW(G); not known to be sufficient.
bool functional_vanishes(const WeightSpace& space, const Bipartition& b);

}  // namespace wcw
