#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "wcw/errors.hpp"
#include "wcw/reductions.hpp"
#include "wcw/wcw_space.hpp"
#include "wcw/witness.hpp"

namespace wcw::cli {

namespace {

enum class OutputMode { human, tabular };

struct Config {
  EnumerationBudget budget;
  int var_cap = kDefaultSolverVarCap;
  unsigned long long seed = 0;  // no current command draws random numbers
  OutputMode mode = OutputMode::human;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << contents;
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

/// "key: value" or "key<TAB>value" depending on the output mode.
void emit(std::ostream& out, const Config& config, const std::string& key, const std::string& value) {
  out << key << (config.mode == OutputMode::tabular ? "\t" : ": ") << value << '\n';
}

VertexSet parse_side(const std::string& text, int n) {
  VertexSet s(n);
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed vertex '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("malformed vertex '" + token + "'");
    if (v < 1 || v > n) throw std::out_of_range("vertex " + token + " outside 1.." + std::to_string(n));
    s.insert(v);
  }
  return s;
}

void print_witness(std::ostream& out, const Config& config, const std::string& question,
                   const std::optional<VertexSet>& witness, const VertexNames& names) {
  if (!witness) {
    emit(out, config, question, "no");
    return;
  }
  std::string value = "yes witness=" + to_string(*witness);
  if (!names.empty()) value += " labels=" + named_set(*witness, names);
  emit(out, config, question, value);
}

// ---------------------------------------------------------------------------
// Commands

int cmd_check(const Config& config, const std::string& path, std::ostream& out) {
  const Graph g = parse_graph(read_file(path));
  const auto verdict = is_well_covered(g, config.budget);
  emit(out, config, "well-covered", yes_no(verdict.holds()));
  if (verdict.holds()) return kExitPositive;
  const auto& [small, large] = *verdict.counterexample;
  emit(out, config, "counterexample",
       to_string(small) + " (size " + std::to_string(small.size()) + ") vs " + to_string(large) + " (size " +
           std::to_string(large.size()) + ")");
  return kExitNegative;
}

int cmd_wcw(const Config& config, const std::string& path, const std::string& method_name, std::ostream& out) {
  const auto method = parse_wcw_method(method_name);
  if (!method) throw std::invalid_argument("unknown method '" + method_name + "'");
  const Graph g = parse_graph(read_file(path));
  out << serialize_space(compute_wcw(g, *method, config.budget));
  return kExitPositive;
}

int cmd_relating(const Config& config, const std::string& path, const std::vector<int>& endpoints,
                 const std::string& sidecar_path, std::ostream& out) {
  const Graph g = parse_graph(read_file(path));
  VertexNames names;
  Edge edge;
  if (!sidecar_path.empty()) {
    Sidecar sidecar = parse_sidecar(read_file(sidecar_path));
    const auto* designated = std::get_if<Edge>(&sidecar.designated);
    if (designated == nullptr) throw std::invalid_argument("sidecar designates a bipartition, not an edge");
    edge = *designated;
    names = std::move(sidecar.names);
  }
  if (!endpoints.empty()) {
    if (endpoints.size() != 2) throw std::invalid_argument("relating needs exactly two endpoints");
    edge = Edge(endpoints[0], endpoints[1]);
  }
  if (edge.u == 0) throw std::invalid_argument("relating needs an edge (U V or --sidecar)");
  // Keep the user's orientation for the call; the verdict does not depend on it.
  const Vertex x = endpoints.empty() ? edge.u : endpoints[0];
  const Vertex y = endpoints.empty() ? edge.v : endpoints[1];
  const auto witness = is_relating(g, x, y, config.budget);
  print_witness(out, config, "relating", witness, names);
  return witness ? kExitPositive : kExitNegative;
}

int cmd_generating(const Config& config, const std::string& path, const std::string& bx, const std::string& by,
                   const std::string& sidecar_path, std::ostream& out) {
  const Graph g = parse_graph(read_file(path));
  VertexNames names;
  std::optional<Bipartition> b;
  if (!sidecar_path.empty()) {
    Sidecar sidecar = parse_sidecar(read_file(sidecar_path));
    names = std::move(sidecar.names);
    if (const auto* edge = std::get_if<Edge>(&sidecar.designated)) {
      b = Bipartition::edge(g, edge->u, edge->v);
    } else {
      const auto& [xs, ys] = std::get<1>(sidecar.designated);
      b = Bipartition(VertexSet(g.order(), xs), VertexSet(g.order(), ys));
    }
  }
  if (!bx.empty() || !by.empty()) {
    b = Bipartition(parse_side(bx, g.order()), parse_side(by, g.order()));
  }
  if (!b) throw std::invalid_argument("generating needs --bx/--by or --sidecar");
  const auto witness = is_generating(g, *b, config.budget);
  print_witness(out, config, "generating", witness, names);
  return witness ? kExitPositive : kExitNegative;
}

int cmd_solve(const Config& config, const std::string& path, std::ostream& out) {
  const CnfInstance instance = parse_dimacs(read_file(path));
  const auto model = solve(instance, config.var_cap);
  emit(out, config, "satisfiable", yes_no(model.has_value()));
  if (!model) return kExitNegative;
  std::string literals;
  for (int v = 1; v <= instance.n_vars(); ++v) {
    if (v > 1) literals += ' ';
    literals += std::to_string(model->value(v) ? v : -v);
  }
  emit(out, config, "model", literals);
  return kExitPositive;
}

int cmd_props(const Config& config, const std::string& path, std::ostream& out) {
  const Graph g = parse_graph(read_file(path));
  emit(out, config, "vertices", std::to_string(g.order()));
  emit(out, config, "edges", std::to_string(g.size()));
  emit(out, config, "maxdeg", std::to_string(g.max_degree()));
  emit(out, config, "bipartite", yes_no(is_bipartite(g).has_value()));
  for (int k = kMinCycleLength; k <= kMaxCycleLength; ++k) {
    emit(out, config, "C" + std::to_string(k), yes_no(contains_cycle_k(g, k)));
  }
  emit(out, config, "K1,3-free", yes_no(is_k1t_free(g, 3)));
  emit(out, config, "K1,4-free", yes_no(is_k1t_free(g, 4)));
  return kExitPositive;
}

void write_cnf_output(const std::string& prefix, const CnfReduction& reduced, const std::string& kind,
                      const Config& config, std::ostream& out) {
  const std::string path = prefix + ".cnf";
  write_file(path, serialize_dimacs(reduced.instance, kind, reduced.aliases));
  emit(out, config, "wrote", path);
  emit(out, config, "variables", std::to_string(reduced.instance.n_vars()));
  emit(out, config, "clauses", std::to_string(reduced.instance.size()));
  emit(out, config, "fresh variables", std::to_string(reduced.fresh_variables));
}

void write_graph_output(const std::string& prefix, const Graph& g, const Sidecar& sidecar, const Config& config,
                        std::ostream& out) {
  write_file(prefix + ".graph", serialize_graph(g));
  write_file(prefix + ".sidecar", serialize_sidecar(sidecar));
  emit(out, config, "wrote", prefix + ".graph");
  emit(out, config, "wrote", prefix + ".sidecar");
  emit(out, config, "vertices", std::to_string(g.order()));
  emit(out, config, "edges", std::to_string(g.size()));
}

int cmd_reduce(const Config& config, const std::string& kind, const std::string& in_path, const std::string& prefix,
               std::ostream& out) {
  const CnfInstance input = parse_dimacs(read_file(in_path));
  if (kind == "sat2usat") {
    const auto reduced = sat_to_usat(input);
    write_cnf_output(prefix, reduced, "usat", config, out);
    emit(out, config, "usat valid", yes_no(validate_usat(reduced.instance)));
  } else if (kind == "3sat2dsat") {
    if (!validate_3sat(input)) throw std::invalid_argument("input is not a 3SAT instance");
    const auto reduced = threesat_to_dsat(input);
    write_cnf_output(prefix, reduced, "dsat", config, out);
    emit(out, config, "dsat valid", yes_no(!validate_dsat(reduced.instance)));
  } else if (kind == "usat2re") {
    if (!validate_usat(input)) throw std::invalid_argument("input is not a USAT instance");
    const ReInstance re = usat_to_re(input);
    write_graph_output(prefix, re.graph, sidecar_of(re), config, out);
    emit(out, config, "bipartite", yes_no(is_bipartite(re.graph).has_value()));
    emit(out, config, "designated edge", yes_no(re.graph.adjacent(re.x, re.y)));
  } else if (kind == "dsat2gs") {
    if (validate_dsat(input)) throw std::invalid_argument("input is not a DSAT instance");
    const GsInstance gs = dsat_to_gs(input);
    write_graph_output(prefix, gs.graph, sidecar_of(gs), config, out);
    for (int k : {3, 4, 5}) emit(out, config, "C" + std::to_string(k), yes_no(contains_cycle_k(gs.graph, k)));
    emit(out, config, "induced complete bipartite", yes_no(is_induced_complete_bipartite(gs.graph, gs.designated)));
  } else {
    throw std::invalid_argument("unknown reduction '" + kind + "'");
  }
  return kExitPositive;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Well-covered graphs, WCW(G) weight spaces and hardness reductions", "wcw"};
  app.require_subcommand(1);

  Config config;
  std::string mode = "human";
  app.add_option("--max-sets", config.budget.max_sets, "Cap on enumerated sets / bipartitions")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-subsets", config.budget.max_subsets, "Cap on search nodes / subset probes")
      ->check(CLI::PositiveNumber);
  app.add_option("--var-cap", config.var_cap, "Largest variable count the solver accepts")->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Seed for randomized routines");
  app.add_option("--format", mode, "Output mode")->check(CLI::IsMember({"human", "tabular"}));

  std::string graph_path;
  std::string method = "local";
  std::vector<int> endpoints;
  std::string sidecar;
  std::string bx;
  std::string by;
  std::string kind;
  std::string in_path;
  std::string prefix;

  auto* check = app.add_subcommand("check", "Is the graph well-covered?");
  check->add_option("graph", graph_path)->required();

  auto* wcw = app.add_subcommand("wcw", "Print a canonical basis of WCW(G)");
  wcw->add_option("graph", graph_path)->required();
  wcw->add_option("--method", method)->check(CLI::IsMember({"definitional", "generating", "local"}));

  auto* relating = app.add_subcommand("relating", "Is the edge U V relating?");
  relating->add_option("graph", graph_path)->required();
  relating->add_option("endpoints", endpoints)->expected(2);
  relating->add_option("--sidecar", sidecar, "Take the edge from a reduction sidecar");

  auto* generating = app.add_subcommand("generating", "Is the bipartition generating?");
  generating->add_option("graph", graph_path)->required();
  generating->add_option("--bx", bx, "Comma-separated vertices of one side");
  generating->add_option("--by", by, "Comma-separated vertices of the other side");
  generating->add_option("--sidecar", sidecar, "Take the subgraph from a reduction sidecar");

  auto* reduce = app.add_subcommand("reduce", "Build a reduction instance");
  reduce->add_option("kind", kind)->required()->check(CLI::IsMember({"sat2usat", "usat2re", "3sat2dsat", "dsat2gs"}));
  reduce->add_option("input", in_path)->required();
  reduce->add_option("out-prefix", prefix)->required();

  auto* solve_cmd = app.add_subcommand("solve", "Decide a DIMACS CNF formula");
  solve_cmd->add_option("cnf", in_path)->required();

  auto* props = app.add_subcommand("props", "Structural properties of a graph");
  props->add_option("graph", graph_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPositive;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPositive;
  } catch (const CLI::ParseError& e) {
    err << "wcw: " << e.what() << '\n';
    return kExitError;
  }
  config.mode = mode == "tabular" ? OutputMode::tabular : OutputMode::human;

  try {
    if (check->parsed()) return cmd_check(config, graph_path, out);
    if (wcw->parsed()) return cmd_wcw(config, graph_path, method, out);
    if (relating->parsed()) return cmd_relating(config, graph_path, endpoints, sidecar, out);
    if (generating->parsed()) return cmd_generating(config, graph_path, bx, by, sidecar, out);
    if (reduce->parsed()) return cmd_reduce(config, kind, in_path, prefix, out);
    if (solve_cmd->parsed()) return cmd_solve(config, in_path, out);
    if (props->parsed()) return cmd_props(config, graph_path, out);
  } catch (const ResourceExhausted& e) {
    err << "wcw: resource exhausted: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "wcw: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace wcw::cli
