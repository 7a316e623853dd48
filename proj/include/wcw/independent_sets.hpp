#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wcw/graph.hpp"
#include "wcw/rational.hpp"

namespace wcw {

/// Caps for the exponential enumerations. Exceeding either one raises
/// ResourceExhausted instead of producing a (possibly wrong) answer.
struct EnumerationBudget {
  std::size_t max_sets = 1'000'000;      // reported sets / bipartitions
  std::size_t max_subsets = 10'000'000;  // search-tree nodes / subset probes

  void validate() const;
};

/// Rational weight per vertex; defined on all of 1..n.
class WeightFunction {
 public:
  explicit WeightFunction(int n);
  explicit WeightFunction(std::vector<Rational> values);
  static WeightFunction ones(int n);

  int order() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](Vertex v) const;
  Rational& operator[](Vertex v);
  const std::vector<Rational>& values() const { return values_; }

  Rational weight(const VertexSet& s) const;

 private:
  std::vector<Rational> values_;  // index v-1
};

/// n lines "v p/q"; every vertex must appear exactly once.
WeightFunction parse_weights(std::string_view text, int n);
std::string serialize_weights(const WeightFunction& w);

/// Outcome of a "same size / same weight" check. A failed check carries two
/// maximal independent sets that disagree.
struct CoverageVerdict {
  std::optional<std::pair<VertexSet, VertexSet>> counterexample;

  bool holds() const { return !counterexample.has_value(); }
};

/// Greedy completion to a maximal independent set: repeatedly add the
/// lowest-index vertex not dominated so far. Throws if `seed` is dependent.
VertexSet extend_greedy(const Graph& g, const VertexSet& seed);

/// Same, but completes to a maximal independent set of G[within]. The seed
/// must lie inside `within`.
VertexSet extend_greedy(const Graph& g, const VertexSet& seed, const VertexSet& within);

/// All maximal independent sets, in shortlex order.
std::vector<VertexSet> enumerate_maximal_is(const Graph& g, const EnumerationBudget& budget = {});

/// All maximal independent sets of the induced subgraph G[within], in
/// shortlex order.
std::vector<VertexSet> enumerate_maximal_is(const Graph& g, const VertexSet& within,
                                            const EnumerationBudget& budget = {});

CoverageVerdict is_well_covered(const Graph& g, const EnumerationBudget& budget = {});
CoverageVerdict is_w_well_covered(const Graph& g, const WeightFunction& w,
                                  const EnumerationBudget& budget = {});

}  // namespace wcw
