#include "wcw/independent_sets.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "wcw/errors.hpp"

namespace wcw {

void EnumerationBudget::validate() const {
  if (max_sets == 0 || max_subsets == 0) throw std::invalid_argument("enumeration budgets must be positive");
}

// ---------------------------------------------------------------------------
// Weights

WeightFunction::WeightFunction(int n) {
  if (n < 0) throw std::invalid_argument("negative weight-function size");
  values_.assign(static_cast<std::size_t>(n), Rational(0));
}

WeightFunction::WeightFunction(std::vector<Rational> values) : values_(std::move(values)) {}

WeightFunction WeightFunction::ones(int n) {
  WeightFunction w(n);
  for (auto& value : w.values_) value = 1;
  return w;
}

const Rational& WeightFunction::operator[](Vertex v) const {
  if (v < 1 || v > order()) throw std::out_of_range("weight lookup outside 1.." + std::to_string(order()));
  return values_[static_cast<std::size_t>(v - 1)];
}

Rational& WeightFunction::operator[](Vertex v) {
  if (v < 1 || v > order()) throw std::out_of_range("weight lookup outside 1.." + std::to_string(order()));
  return values_[static_cast<std::size_t>(v - 1)];
}

Rational WeightFunction::weight(const VertexSet& s) const {
  Rational total = 0;
  for (Vertex v : s) total += (*this)[v];
  return total;
}

WeightFunction parse_weights(std::string_view text, int n) {
  WeightFunction w(n);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string vertex_field;
    std::string value_field;
    if (!(fields >> vertex_field) || vertex_field.front() == '#') continue;
    std::string extra;
    if (!(fields >> value_field) || (fields >> extra)) {
      throw ParseError("weights: malformed line '" + line + "'");
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(vertex_field.data(), vertex_field.data() + vertex_field.size(), v);
    if (ec != std::errc{} || ptr != vertex_field.data() + vertex_field.size()) {
      throw ParseError("weights: malformed vertex '" + vertex_field + "'");
    }
    if (v < 1 || v > n) throw ParseError("weights: vertex " + vertex_field + " out of range");
    if (seen[static_cast<std::size_t>(v)]) throw ParseError("weights: vertex " + vertex_field + " given twice");
    seen[static_cast<std::size_t>(v)] = true;
    w[v] = parse_rational(value_field);
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) throw ParseError("weights: vertex " + std::to_string(v) + " missing");
  }
  return w;
}

std::string serialize_weights(const WeightFunction& w) {
  std::string out;
  for (Vertex v = 1; v <= w.order(); ++v) {
    out += std::to_string(v) + " " + format_rational(w[v]) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Greedy completion

VertexSet extend_greedy(const Graph& g, const VertexSet& seed) {
  return extend_greedy(g, seed, g.vertices());
}

VertexSet extend_greedy(const Graph& g, const VertexSet& seed, const VertexSet& within) {
  if (!is_independent(g, seed)) throw std::invalid_argument("greedy seed " + to_string(seed) + " is not independent");
  if (!seed.is_subset_of(within)) throw std::invalid_argument("greedy seed lies outside the allowed vertices");
  VertexSet result = seed;
  VertexSet blocked = closed_neighborhood(g, seed);
  for (Vertex v : within) {
    if (blocked.contains(v)) continue;
    result.insert(v);
    blocked |= g.closed_neighbors(v);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Enumeration: Bron-Kerbosch with pivoting on the complement graph. A clique
// of the complement is an independent set of G, so maximal cliques there are
// exactly the maximal independent sets here.

namespace {

class MisEnumerator {
 public:
  MisEnumerator(const Graph& g, const VertexSet& within, const EnumerationBudget& budget)
      : g_(g), within_(within), budget_(budget) {
    non_neighbors_.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 1; v <= g.order(); ++v) non_neighbors_.push_back(within - g.closed_neighbors(v));
  }

  std::vector<VertexSet> run() {
    VertexSet current(g_.order());
    VertexSet excluded(g_.order());
    expand(current, within_, excluded);
    std::sort(found_.begin(), found_.end(), shortlex_less);
    return std::move(found_);
  }

 private:
  const VertexSet& non_neighbors(Vertex v) const { return non_neighbors_[static_cast<std::size_t>(v - 1)]; }

  void expand(VertexSet& current, VertexSet candidates, VertexSet excluded) {
    if (++nodes_ > budget_.max_subsets) {
      throw ResourceExhausted("maximal independent set search exceeded " +
                              std::to_string(budget_.max_subsets) + " search nodes");
    }
    if (candidates.empty()) {
      if (excluded.empty()) {
        if (found_.size() >= budget_.max_sets) {
          throw ResourceExhausted("more than " + std::to_string(budget_.max_sets) +
                                  " maximal independent sets");
        }
        found_.push_back(current);
      }
      return;
    }
    // Pivot maximizing |candidates ∩ non_neighbors(pivot)|, ties to the lowest index.
    Vertex pivot = 0;
    std::size_t best = 0;
    for (const VertexSet* pool : {&candidates, &excluded}) {
      for (Vertex u : *pool) {
        std::size_t score = (candidates & non_neighbors(u)).size();
        if (pivot == 0 || score > best) {
          pivot = u;
          best = score;
        }
      }
    }
    VertexSet branch = candidates - non_neighbors(pivot);
    for (Vertex v : branch) {
      current.insert(v);
      expand(current, candidates & non_neighbors(v), excluded & non_neighbors(v));
      current.erase(v);
      candidates.erase(v);
      excluded.insert(v);
    }
  }

  const Graph& g_;
  const VertexSet& within_;
  const EnumerationBudget& budget_;
  std::vector<VertexSet> non_neighbors_;
  std::vector<VertexSet> found_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<VertexSet> enumerate_maximal_is(const Graph& g, const EnumerationBudget& budget) {
  return enumerate_maximal_is(g, g.vertices(), budget);
}

std::vector<VertexSet> enumerate_maximal_is(const Graph& g, const VertexSet& within,
                                            const EnumerationBudget& budget) {
  budget.validate();
  if (within.universe() != g.order()) throw std::invalid_argument("vertex set does not match graph");
  return MisEnumerator(g, within, budget).run();
}

CoverageVerdict is_well_covered(const Graph& g, const EnumerationBudget& budget) {
  return is_w_well_covered(g, WeightFunction::ones(g.order()), budget);
}

CoverageVerdict is_w_well_covered(const Graph& g, const WeightFunction& w, const EnumerationBudget& budget) {
  if (w.order() != g.order()) {
    throw std::invalid_argument("weight function covers " + std::to_string(w.order()) + " vertices, graph has " +
                                std::to_string(g.order()));
  }
  auto sets = enumerate_maximal_is(g, budget);
  CoverageVerdict verdict;
  const Rational reference = w.weight(sets.front());
  for (std::size_t i = 1; i < sets.size(); ++i) {
    if (w.weight(sets[i]) != reference) {
      verdict.counterexample = std::make_pair(sets.front(), sets[i]);
      break;
    }
  }
  return verdict;
}

}  // namespace wcw
