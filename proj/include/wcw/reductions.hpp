#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wcw/bipartition.hpp"
#include "wcw/cnf.hpp"
#include "wcw/graph.hpp"

namespace wcw {

/// Human-readable vertex labels (x, y, v1, v'1, a1, u1, u'1, ...).
using VertexNames = std::map<Vertex, std::string>;

struct CnfReduction {
  CnfInstance instance;
  VariableAliases aliases;  // names for the variables the reduction introduced
  int fresh_variables = 0;
};

/**
 * Relating-edge instance built from a USAT formula.
 *
 * Vertex numbering: x = 1, y = 2, then v_1..v_m (positive clauses), then
 * v'_1..v'_m' (negative clauses), then u_1..u_n, then u'_1..u'_n.
 */
struct ReInstance {
  Graph graph;
  Vertex x = 1;
  Vertex y = 2;
  int n_vars = 0;
  int positive_clauses = 0;
  int negative_clauses = 0;
  VertexNames names;

  Vertex u(int i) const { return 2 + positive_clauses + negative_clauses + i; }
  Vertex u_bar(int i) const { return u(i) + n_vars; }
  Bipartition designated() const { return Bipartition::edge(graph, x, y); }
};

/**
 * Generating-subgraph instance built from a DSAT formula.
 *
 * Vertex numbering: y = 1, a_1..a_m, v_1..v_m, u_1..u_n, u'_1..u'_n.
 * The designated subgraph is the star ({y}, {a_1..a_m}).
 */
struct GsInstance {
  Graph graph;
  Bipartition designated;
  int n_vars = 0;
  int clauses = 0;
  VertexNames names;

  Vertex u(int i) const { return 1 + 2 * clauses + i; }
  Vertex u_bar(int i) const { return u(i) + n_vars; }
};

/// Replaces each ¬x_i by a fresh y_i (variable n+i) and adds (x_i ∨ y_i) and
/// (¬x_i ∨ ¬y_i) for every i. Output clause order: C', then D, then E.
CnfReduction sat_to_usat(const CnfInstance& instance);

/// Bipartite relating-edge gadget. Throws std::invalid_argument unless the
/// input validates as USAT.
ReInstance usat_to_re(const CnfInstance& instance);

/**
 * Repeatedly takes the first pair of clauses (in list order) breaking a DSAT
 * pair condition, picks l1 (smallest shared literal) and l4 (see
 * conflicting_literal), and replaces l4 in the later clause by a fresh
 * variable z, adding (¬l4 ∨ z) and (l4 ∨ ¬z). Fresh variables are numbered
 * n+1, n+2, ... in elimination order.
 *
 * Throws std::invalid_argument unless every clause has three literals.
 */
CnfReduction threesat_to_dsat(const CnfInstance& instance);

/// Girth-6 generating-subgraph gadget. Throws std::invalid_argument unless
/// the input validates as DSAT.
GsInstance dsat_to_gs(const CnfInstance& instance);

/// {u_i : x_i = 1} ∪ {u'_i : x_i = 0}.
VertexSet assignment_to_witness(const ReInstance& instance, const Assignment& assignment);
VertexSet assignment_to_witness(const GsInstance& instance, const Assignment& assignment);

/// x_i = 1 iff u_i is in the witness after completing it to a maximal
/// independent set of the u/u' vertices. Throws std::invalid_argument when W
/// is not a witness for the designated edge or subgraph.
Assignment witness_to_assignment(const ReInstance& instance, const VertexSet& witness);
Assignment witness_to_assignment(const GsInstance& instance, const VertexSet& witness);

/// Designated object of a reduction output: an edge or a bipartition.
struct Sidecar {
  std::variant<Edge, std::pair<std::vector<Vertex>, std::vector<Vertex>>> designated;
  VertexNames names;
};

/// "designated: edge u v" or "designated: BX a,b BY c,d", then one
/// "names: v=label" line per named vertex.
std::string serialize_sidecar(const Sidecar& sidecar);
Sidecar parse_sidecar(std::string_view text);

Sidecar sidecar_of(const ReInstance& instance);
Sidecar sidecar_of(const GsInstance& instance);

/// Labels of the members of `s`, in vertex order: "{u1,u'2}". Unnamed
/// vertices print as numbers.
std::string named_set(const VertexSet& s, const VertexNames& names);

}  // namespace wcw
