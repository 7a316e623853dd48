#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wcw/vertex_set.hpp"

namespace wcw {

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Simple undirected graph on vertices 1..n.
 *
 * Immutable once constructed. The constructor rejects self-loops, duplicate
 * edges and out-of-range endpoints, so every Graph value satisfies the
 * simple-graph invariants.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const;
  const VertexSet& neighbors(Vertex v) const;
  VertexSet closed_neighbors(Vertex v) const;
  int degree(Vertex v) const;
  int max_degree() const;

  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }
  VertexSet set_of(std::initializer_list<Vertex> members) const { return VertexSet(n_, members); }

  /// Edges sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }
  void check_vertex(Vertex v) const;

 private:
  int n_ = 0;
  std::vector<VertexSet> adjacency_;  // index v-1
  std::vector<Edge> edges_;
};

/// Edge-list text: optional '#' comment lines, header "n m", then m lines "u v".
Graph parse_graph(std::string_view text);
/// Canonical form: header, then edges sorted with u < v. Ends with a newline.
std::string serialize_graph(const Graph& g);

/// Shortest-path length; nullopt when v is unreachable from u.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

/// Multi-source BFS distances d(x, S), indexed by vertex (entry 0 unused).
/// Unreachable vertices get -1. Requires S nonempty.
std::vector<int> distances_from(const Graph& g, const VertexSet& sources);

/// N_i(S) = {x : d(x,S) = i}.
VertexSet layer(const Graph& g, const VertexSet& s, int i);
/// N_i[S] = {x : d(x,S) <= i}.
VertexSet closed_layer(const Graph& g, const VertexSet& s, int i);

/// N[S]; unlike closed_layer this accepts an empty S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);
/// T is a subset of N[S].
bool dominates(const Graph& g, const VertexSet& s, const VertexSet& t);
bool is_maximal_independent(const Graph& g, const VertexSet& s);

/// Proper 2-coloring via BFS per component; the lowest vertex of each
/// component goes to the first side. nullopt when an odd cycle exists.
std::optional<std::pair<VertexSet, VertexSet>> is_bipartite(const Graph& g);

inline constexpr int kMinCycleLength = 3;
inline constexpr int kMaxCycleLength = 7;

/// True iff G has a (not necessarily induced) cycle on exactly k vertices.
/// Supports 3 <= k <= 7.
bool contains_cycle_k(const Graph& g, int k);

/// True iff no vertex has t pairwise nonadjacent neighbors.
bool is_k1t_free(const Graph& g, int t);

}  // namespace wcw
