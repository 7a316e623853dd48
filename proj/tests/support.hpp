#pragma once

#include <random>
#include <string>
#include <vector>

#include "wcw/cnf.hpp"
#include "wcw/graph.hpp"

namespace wcw::test {

std::string fixture_path(const std::string& name);
std::string read_fixture(const std::string& name);
Graph load_graph(const std::string& name);
CnfInstance load_cnf(const std::string& name);

/// Named graph fixtures used by the suites that run "on every fixture".
const std::vector<std::string>& graph_fixtures();

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges);
Graph cycle(int n);
Graph path(int n);

/// G(n, p) with edges drawn independently.
Graph random_graph(std::mt19937& rng, int n, double p);
/// Image of g under v -> perm[v-1].
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Clause sizes uniform in [min_len, max_len], variables distinct per clause.
CnfInstance random_cnf(std::mt19937& rng, int n, int m, int min_len, int max_len);
/// Each clause entirely positive or entirely negative.
CnfInstance random_usat(std::mt19937& rng, int n, int m);
/// Clauses of size 2 or 3 added only when compatible with every earlier one.
CnfInstance random_dsat(std::mt19937& rng, int n, int m);

// Brute-force references. Each works directly from adjacency / clause
// membership and shares no code with the library routines under test.
namespace oracle {

std::vector<std::vector<int>> maximal_independent_sets(const Graph& g);
bool well_covered(const Graph& g);
bool has_cycle(const Graph& g, int k);
/// Some S with S ∪ X and S ∪ Y both maximal independent.
bool generating(const Graph& g, const std::vector<int>& x, const std::vector<int>& y);
/// All pairs (X, Y) of nonempty disjoint sets forming an induced complete
/// bipartite subgraph, X holding the smallest vertex of X ∪ Y.
std::vector<std::pair<std::vector<int>, std::vector<int>>> complete_bipartites(const Graph& g);
bool satisfiable(const CnfInstance& instance);
/// False when the clauses share a literal and also share, or disagree on,
/// some other variable.
bool dsat_compatible(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace oracle

}  // namespace wcw::test
