#include "wcw/reductions.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "wcw/errors.hpp"
#include "wcw/witness.hpp"

namespace wcw {

// ---------------------------------------------------------------------------
// SAT -> USAT

CnfReduction sat_to_usat(const CnfInstance& instance) {
  const int n = instance.n_vars();
  CnfReduction out{CnfInstance(2 * n), {}, n};
  auto twin = [n](int var) { return Literal{n + var, false}; };

  for (const Clause& c : instance.clauses()) {
    std::vector<Literal> replaced;
    for (Literal l : c) replaced.push_back(l.negated ? twin(l.var) : l);
    out.instance.add_clause(Clause(std::move(replaced)));
  }
  for (int i = 1; i <= n; ++i) out.instance.add_clause(Clause({Literal{i, false}, twin(i)}));
  for (int i = 1; i <= n; ++i) out.instance.add_clause(Clause({Literal{i, true}, twin(i).negation()}));
  for (int i = 1; i <= n; ++i) out.aliases[n + i] = "y" + std::to_string(i);
  return out;
}

// ---------------------------------------------------------------------------
// USAT -> RE

ReInstance usat_to_re(const CnfInstance& instance) {
  if (!validate_usat(instance)) throw std::invalid_argument("usat_to_re: input is not a USAT instance");
  std::vector<const Clause*> positive;
  std::vector<const Clause*> negative;
  for (const Clause& c : instance.clauses()) (c.all_positive() ? positive : negative).push_back(&c);

  ReInstance re;
  re.n_vars = instance.n_vars();
  re.positive_clauses = static_cast<int>(positive.size());
  re.negative_clauses = static_cast<int>(negative.size());
  const int m = re.positive_clauses;
  const int order = 2 + m + re.negative_clauses + 2 * re.n_vars;
  auto v = [](int j) { return 2 + j; };
  auto v_bar = [m](int j) { return 2 + m + j; };

  std::vector<Edge> edges{{re.x, re.y}};
  for (int j = 1; j <= m; ++j) {
    edges.emplace_back(re.x, v(j));
    for (Literal l : *positive[static_cast<std::size_t>(j - 1)]) edges.emplace_back(v(j), re.u(l.var));
  }
  for (int j = 1; j <= re.negative_clauses; ++j) {
    edges.emplace_back(re.y, v_bar(j));
    for (Literal l : *negative[static_cast<std::size_t>(j - 1)]) edges.emplace_back(v_bar(j), re.u_bar(l.var));
  }
  for (int i = 1; i <= re.n_vars; ++i) edges.emplace_back(re.u(i), re.u_bar(i));
  re.graph = Graph(order, edges);

  re.names[re.x] = "x";
  re.names[re.y] = "y";
  for (int j = 1; j <= m; ++j) re.names[v(j)] = "v" + std::to_string(j);
  for (int j = 1; j <= re.negative_clauses; ++j) re.names[v_bar(j)] = "v'" + std::to_string(j);
  for (int i = 1; i <= re.n_vars; ++i) {
    re.names[re.u(i)] = "u" + std::to_string(i);
    re.names[re.u_bar(i)] = "u'" + std::to_string(i);
  }

  if (!is_bipartite(re.graph)) throw std::logic_error("usat_to_re produced a non-bipartite graph");
  return re;
}

// ---------------------------------------------------------------------------
// 3SAT -> DSAT

namespace {

std::string fresh_alias(int base_var, int occurrence) {
  static constexpr std::string_view kLetters = "yzwvts";
  if (occurrence < static_cast<int>(kLetters.size())) {
    return std::string(1, kLetters[static_cast<std::size_t>(occurrence)]) + std::to_string(base_var);
  }
  return "y" + std::to_string(base_var) + "_" + std::to_string(occurrence);
}

}  // namespace

CnfReduction threesat_to_dsat(const CnfInstance& instance) {
  if (!validate_3sat(instance)) throw std::invalid_argument("threesat_to_dsat: every clause needs exactly 3 literals");

  std::vector<Clause> clauses = instance.clauses();
  int n = instance.n_vars();
  std::map<int, int> fresh_per_var;
  VariableAliases aliases;
  const long long max_steps = 4LL * instance.n_vars() * static_cast<long long>(instance.size());

  for (long long step = 0;; ++step) {
    std::optional<std::pair<std::size_t, Literal>> hit;
    for (std::size_t i = 0; i < clauses.size() && !hit; ++i) {
      for (std::size_t j = i + 1; j < clauses.size() && !hit; ++j) {
        if (auto l4 = conflicting_literal(clauses[i], clauses[j])) hit.emplace(j, *l4);
      }
    }
    if (!hit) break;
    if (step >= max_steps) throw std::logic_error("threesat_to_dsat: elimination did not terminate");

    const auto [j, l4] = *hit;
    const Literal fresh{++n, false};
    std::vector<Literal> replaced;
    for (Literal l : clauses[j]) replaced.push_back(l == l4 ? fresh : l);
    clauses[j] = Clause(std::move(replaced));
    clauses.emplace_back(std::vector<Literal>{l4.negation(), fresh});
    clauses.emplace_back(std::vector<Literal>{l4, fresh.negation()});
    aliases[fresh.var] = fresh_alias(l4.var, fresh_per_var[l4.var]++);
  }

  CnfReduction out{CnfInstance(n, std::move(clauses)), std::move(aliases), n - instance.n_vars()};
  if (validate_dsat(out.instance)) throw std::logic_error("threesat_to_dsat produced a non-DSAT instance");
  return out;
}

// ---------------------------------------------------------------------------
// DSAT -> GS

GsInstance dsat_to_gs(const CnfInstance& instance) {
  if (validate_dsat(instance)) throw std::invalid_argument("dsat_to_gs: input is not a DSAT instance");
  if (instance.size() == 0) throw std::invalid_argument("dsat_to_gs: needs at least one clause");

  const int m = static_cast<int>(instance.size());
  const int n = instance.n_vars();
  const int order = 1 + 2 * m + 2 * n;
  const Vertex y = 1;
  auto a = [](int j) { return 1 + j; };
  auto v = [m](int j) { return 1 + m + j; };
  auto u = [m](int i) { return 1 + 2 * m + i; };
  auto u_bar = [m, n](int i) { return 1 + 2 * m + n + i; };

  std::vector<Edge> edges;
  for (int j = 1; j <= m; ++j) {
    edges.emplace_back(y, a(j));
    edges.emplace_back(a(j), v(j));
    for (Literal l : instance[static_cast<std::size_t>(j - 1)]) {
      edges.emplace_back(v(j), l.negated ? u_bar(l.var) : u(l.var));
    }
  }
  for (int i = 1; i <= n; ++i) edges.emplace_back(u(i), u_bar(i));
  Graph graph(order, edges);

  VertexSet star(order);
  for (int j = 1; j <= m; ++j) star.insert(a(j));
  GsInstance gs{std::move(graph), Bipartition(VertexSet(order, {y}), std::move(star)), n, m, {}};

  gs.names[y] = "y";
  for (int j = 1; j <= m; ++j) {
    gs.names[a(j)] = "a" + std::to_string(j);
    gs.names[v(j)] = "v" + std::to_string(j);
  }
  for (int i = 1; i <= n; ++i) {
    gs.names[u(i)] = "u" + std::to_string(i);
    gs.names[u_bar(i)] = "u'" + std::to_string(i);
  }

  for (int k : {3, 4, 5}) {
    if (contains_cycle_k(gs.graph, k)) {
      throw std::logic_error("dsat_to_gs produced a graph containing C" + std::to_string(k));
    }
  }
  return gs;
}

// ---------------------------------------------------------------------------
// Witness <-> assignment

namespace {

template <typename Instance>
VertexSet forward(const Instance& instance, const Assignment& assignment) {
  if (assignment.values.size() != static_cast<std::size_t>(instance.n_vars)) {
    throw std::invalid_argument("assignment is not total on the instance's variables");
  }
  VertexSet s(instance.graph.order());
  for (int i = 1; i <= instance.n_vars; ++i) s.insert(assignment.value(i) ? instance.u(i) : instance.u_bar(i));
  return s;
}

template <typename Instance>
Assignment backward(const Instance& instance, const Bipartition& designated, const VertexSet& witness) {
  if (!is_witness(instance.graph, designated, witness)) {
    throw std::invalid_argument(to_string(witness) + " is not a witness for " + to_string(designated));
  }
  VertexSet completed = witness;
  for (int i = 1; i <= instance.n_vars; ++i) {
    if (!completed.contains(instance.u(i)) && !completed.contains(instance.u_bar(i))) completed.insert(instance.u(i));
  }
  Assignment out;
  out.values.resize(static_cast<std::size_t>(instance.n_vars));
  for (int i = 1; i <= instance.n_vars; ++i) out.values[static_cast<std::size_t>(i - 1)] = completed.contains(instance.u(i));
  return out;
}

}  // namespace

VertexSet assignment_to_witness(const ReInstance& instance, const Assignment& assignment) {
  return forward(instance, assignment);
}

VertexSet assignment_to_witness(const GsInstance& instance, const Assignment& assignment) {
  return forward(instance, assignment);
}

Assignment witness_to_assignment(const ReInstance& instance, const VertexSet& witness) {
  return backward(instance, instance.designated(), witness);
}

Assignment witness_to_assignment(const GsInstance& instance, const VertexSet& witness) {
  return backward(instance, instance.designated, witness);
}

// ---------------------------------------------------------------------------
// Sidecar text

namespace {

std::string join(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(vs[i]);
  }
  return out;
}

Vertex parse_vertex(std::string_view token) {
  Vertex v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || v < 1) {
    throw ParseError("sidecar: malformed vertex '" + std::string(token) + "'");
  }
  return v;
}

std::vector<Vertex> parse_vertex_list(std::string_view text) {
  std::vector<Vertex> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(parse_vertex(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string serialize_sidecar(const Sidecar& sidecar) {
  std::string out = "designated: ";
  if (const auto* e = std::get_if<Edge>(&sidecar.designated)) {
    out += "edge " + std::to_string(e->u) + " " + std::to_string(e->v) + "\n";
  } else {
    const auto& [bx, by] = std::get<1>(sidecar.designated);
    out += "BX " + join(bx) + " BY " + join(by) + "\n";
  }
  for (const auto& [v, name] : sidecar.names) out += "names: " + std::to_string(v) + "=" + name + "\n";
  return out;
}

Sidecar parse_sidecar(std::string_view text) {
  Sidecar out;
  bool have_designated = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string key;
    fields >> key;
    if (key == "designated:") {
      std::string what;
      fields >> what;
      std::string a;
      std::string b;
      std::string extra;
      if (what == "edge" && (fields >> a >> b) && !(fields >> extra)) {
        out.designated = Edge(parse_vertex(a), parse_vertex(b));
      } else if (what == "BX" && (fields >> a >> extra >> b) && extra == "BY") {
        out.designated = std::make_pair(parse_vertex_list(a), parse_vertex_list(b));
      } else {
        throw ParseError("sidecar: malformed designation '" + line + "'");
      }
      have_designated = true;
    } else if (key == "names:") {
      std::string entry;
      fields >> entry;
      auto eq = entry.find('=');
      if (eq == std::string::npos || eq + 1 == entry.size()) throw ParseError("sidecar: malformed name '" + line + "'");
      out.names[parse_vertex(std::string_view(entry).substr(0, eq))] = entry.substr(eq + 1);
    } else {
      throw ParseError("sidecar: unknown line '" + line + "'");
    }
  }
  if (!have_designated) throw ParseError("sidecar: missing 'designated:' line");
  return out;
}

Sidecar sidecar_of(const ReInstance& instance) { return {Edge(instance.x, instance.y), instance.names}; }

Sidecar sidecar_of(const GsInstance& instance) {
  return {std::make_pair(instance.designated.x().members(), instance.designated.y().members()), instance.names};
}

std::string named_set(const VertexSet& s, const VertexNames& names) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ',';
    auto it = names.find(v);
    out += it == names.end() ? std::to_string(v) : it->second;
    first = false;
  }
  return out + "}";
}

}  // namespace wcw
