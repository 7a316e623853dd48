#include <doctest.h>

#include "support.hpp"
#include "wcw/errors.hpp"
#include "wcw/wcw_space.hpp"
#include "wcw/witness.hpp"

using namespace wcw;
using namespace wcw::test;

TEST_CASE("boundary sets around an edge") {
  const auto c7 = boundary_sets(cycle(7), Bipartition::edge(cycle(7), 1, 2));
  CHECK(c7.m_x == VertexSet(7, {7}));
  CHECK(c7.m_y == VertexSet(7, {3}));
  CHECK(c7.candidates == VertexSet(7, {4, 6}));

  const auto c5 = boundary_sets(cycle(5), Bipartition::edge(cycle(5), 1, 2));
  CHECK(c5.m_x == VertexSet(5, {5}));
  CHECK(c5.m_y == VertexSet(5, {3}));
  CHECK(c5.candidates == VertexSet(5, {4}));

  const auto k2 = boundary_sets(path(2), Bipartition::edge(path(2), 1, 2));
  CHECK(k2.m_x.empty());
  CHECK(k2.m_y.empty());
  CHECK(k2.candidates.empty());
}

TEST_CASE("invalid subgraphs are rejected") {
  const Graph c5 = cycle(5);
  const Bipartition not_complete(VertexSet(5, {1}), VertexSet(5, {3}));
  CHECK_THROWS_AS(is_generating(c5, not_complete), std::invalid_argument);
  CHECK_THROWS_AS(is_generating_oracle(c5, not_complete), std::invalid_argument);
  CHECK_THROWS_AS(boundary_sets(c5, not_complete), std::invalid_argument);
  CHECK_THROWS_AS(is_relating(c5, 1, 3), std::invalid_argument);
}

TEST_CASE("generating and relating on named graphs") {
  const Graph c4 = cycle(4);
  const Bipartition square(VertexSet(4, {1, 3}), VertexSet(4, {2, 4}));
  CHECK(is_generating(c4, square) == VertexSet(4));

  CHECK(is_relating(path(2), 1, 2) == VertexSet(2));
  CHECK(is_relating(cycle(5), 1, 2) == VertexSet(5, {4}));
  CHECK(is_relating(cycle(5), 2, 1) == VertexSet(5, {4}));
  CHECK_FALSE(is_relating(path(4), 2, 3).has_value());
  CHECK_FALSE(is_generating_oracle(path(4), Bipartition::edge(path(4), 2, 3)).has_value());
  CHECK(is_generating_oracle(cycle(5), Bipartition::edge(cycle(5), 1, 2)) == VertexSet(5, {4}));

  const Graph p3 = path(3);
  const Bipartition cherry(VertexSet(3, {2}), VertexSet(3, {1, 3}));
  CHECK(is_generating(p3, cherry) == VertexSet(3));
  CHECK(is_generating_oracle(p3, cherry) == VertexSet(3));
  CHECK_FALSE(is_relating(p3, 1, 2).has_value());
}

TEST_CASE("relating equals generating on the single-edge subgraph") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(rng, 2 + trial % 8, 0.4);
    for (const Edge& e : g.edges()) {
      CHECK(is_relating(g, e.u, e.v) == is_generating(g, Bipartition::edge(g, e.u, e.v)));
    }
  }
}

TEST_CASE("the distance-three search space misses C5 witnesses") {
  const Graph c5 = cycle(5);
  const Bipartition e = Bipartition::edge(c5, 1, 2);
  CHECK(distance_three_candidates(c5, e).empty());
  const auto witness = is_relating(c5, 1, 2);
  REQUIRE(witness.has_value());
  CHECK(is_witness(c5, e, *witness));
}

TEST_CASE("witness search agrees with the brute-force definition") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + trial % 8;
    const Graph g = random_graph(rng, n, 0.2 + 0.05 * (trial % 8));
    for (const Bipartition& b : induced_complete_bipartites(g, g.vertices())) {
      const auto fast = is_generating(g, b);
      const auto reference = is_generating_oracle(g, b);
      const bool brute = oracle::generating(g, b.x().members(), b.y().members());
      CHECK(fast.has_value() == brute);
      CHECK(reference.has_value() == brute);
      if (fast) CHECK(is_witness(g, b, *fast));
      if (reference) CHECK(is_witness(g, b, *reference));

      // Some independent subset of the candidates dominates the boundary.
      if (brute) {
        const auto sets = boundary_sets(g, b);
        const VertexSet s0 = *fast & sets.candidates;
        CHECK(is_independent(g, s0));
        CHECK(dominates(g, s0, sets.boundary()));
      }
    }
  }
}

TEST_CASE("witness recheck rejects non-witnesses") {
  const Graph c5 = cycle(5);
  const Bipartition e = Bipartition::edge(c5, 1, 2);
  CHECK(is_witness(c5, e, VertexSet(5, {4})));
  CHECK_FALSE(is_witness(c5, e, VertexSet(5)));
  CHECK_FALSE(is_witness(c5, e, VertexSet(5, {3})));
  CHECK_FALSE(is_witness(c5, e, VertexSet(5, {3, 5})));
}

TEST_CASE("subset probes count against the budget") {
  // Pendant paths on both sides force a search over many candidate subsets.
  std::vector<Edge> edges{{1, 2}};
  int next = 3;
  for (int arm = 0; arm < 6; ++arm) {
    const Vertex a = next++;
    const Vertex b = next++;
    const Vertex c = next++;
    edges.emplace_back(arm % 2 == 0 ? 1 : 2, a);
    edges.emplace_back(a, b);
    edges.emplace_back(b, c);
  }
  const Graph g(next - 1, edges);
  EnumerationBudget budget;
  budget.max_subsets = 2;
  CHECK_THROWS_AS(is_relating(g, 1, 2, budget), ResourceExhausted);
  CHECK(is_relating(g, 1, 2).has_value() == oracle::generating(g, {1}, {2}));
}
