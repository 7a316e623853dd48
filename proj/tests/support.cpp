#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wcw::test {

std::string fixture_path(const std::string& name) { return std::string(WCW_FIXTURE_DIR) + "/" + name; }

std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph load_graph(const std::string& name) { return parse_graph(read_fixture(name)); }

CnfInstance load_cnf(const std::string& name) { return parse_dimacs(read_fixture(name)); }

const std::vector<std::string>& graph_fixtures() {
  static const std::vector<std::string> names = {"k2.graph",  "p3.graph",  "p4.graph",      "c4.graph",
                                                 "c5.graph",  "c7.graph",  "k14.graph",     "usat6_re.graph",
                                                 "dsat6_gs.graph"};
  return names;
}

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.emplace_back(u, v);
  return Graph(n, list);
}

Graph cycle(int n) {
  std::vector<Edge> list;
  for (int v = 1; v <= n; ++v) list.emplace_back(v, v % n + 1);
  return Graph(n, list);
}

Graph path(int n) {
  std::vector<Edge> list;
  for (int v = 1; v < n; ++v) list.emplace_back(v, v + 1);
  return Graph(n, list);
}

Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> list;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (coin(rng)) list.emplace_back(u, v);
    }
  }
  return Graph(n, list);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> list;
  for (const Edge& e : g.edges()) list.emplace_back(perm[e.u - 1], perm[e.v - 1]);
  return Graph(g.order(), list);
}

namespace {

std::vector<int> distinct_vars(std::mt19937& rng, int n, int count) {
  std::vector<int> vars(n);
  std::iota(vars.begin(), vars.end(), 1);
  std::shuffle(vars.begin(), vars.end(), rng);
  vars.resize(static_cast<std::size_t>(std::min(count, n)));
  return vars;
}

Clause clause_of(const std::vector<int>& dimacs) {
  std::vector<Literal> literals;
  for (int l : dimacs) literals.push_back(Literal::from_dimacs(l));
  return Clause(literals);
}

}  // namespace

CnfInstance random_cnf(std::mt19937& rng, int n, int m, int min_len, int max_len) {
  std::uniform_int_distribution<int> length(min_len, max_len);
  std::bernoulli_distribution sign(0.5);
  CnfInstance instance(n);
  for (int j = 0; j < m; ++j) {
    std::vector<int> clause;
    for (int v : distinct_vars(rng, n, length(rng))) clause.push_back(sign(rng) ? -v : v);
    instance.add_clause(clause_of(clause));
  }
  return instance;
}

CnfInstance random_usat(std::mt19937& rng, int n, int m) {
  std::uniform_int_distribution<int> length(1, std::min(n, 4));
  std::bernoulli_distribution sign(0.5);
  CnfInstance instance(n);
  for (int j = 0; j < m; ++j) {
    const bool negative = sign(rng);
    std::vector<int> clause;
    for (int v : distinct_vars(rng, n, length(rng))) clause.push_back(negative ? -v : v);
    instance.add_clause(clause_of(clause));
  }
  return instance;
}

CnfInstance random_dsat(std::mt19937& rng, int n, int m) {
  std::uniform_int_distribution<int> length(2, 3);
  std::bernoulli_distribution sign(0.5);
  std::vector<std::vector<int>> accepted;
  for (int attempt = 0; attempt < 20 * m && static_cast<int>(accepted.size()) < m; ++attempt) {
    std::vector<int> clause;
    for (int v : distinct_vars(rng, n, length(rng))) clause.push_back(sign(rng) ? -v : v);
    const bool fits = std::all_of(accepted.begin(), accepted.end(),
                                  [&](const std::vector<int>& other) { return oracle::dsat_compatible(other, clause); });
    if (fits) accepted.push_back(clause);
  }
  CnfInstance instance(n);
  for (const auto& clause : accepted) instance.add_clause(clause_of(clause));
  return instance;
}

namespace oracle {

namespace {

std::vector<int> subset_members(unsigned mask, const std::vector<int>& pool) {
  std::vector<int> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (mask & (1u << i)) out.push_back(pool[i]);
  }
  return out;
}

bool independent(const Graph& g, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool maximal_independent(const Graph& g, const std::vector<int>& s) {
  if (!independent(g, s)) return false;
  for (int v = 1; v <= g.order(); ++v) {
    if (std::find(s.begin(), s.end(), v) != s.end()) continue;
    if (std::none_of(s.begin(), s.end(), [&](int u) { return g.adjacent(u, v); })) return false;
  }
  return true;
}

std::vector<int> all_vertices(const Graph& g) {
  std::vector<int> out(static_cast<std::size_t>(g.order()));
  std::iota(out.begin(), out.end(), 1);
  return out;
}

}  // namespace

std::vector<std::vector<int>> maximal_independent_sets(const Graph& g) {
  const auto pool = all_vertices(g);
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
    auto s = subset_members(mask, pool);
    if (maximal_independent(g, s)) out.push_back(std::move(s));
  }
  return out;
}

bool well_covered(const Graph& g) {
  const auto sets = maximal_independent_sets(g);
  return std::all_of(sets.begin(), sets.end(), [&](const auto& s) { return s.size() == sets.front().size(); });
}

bool has_cycle(const Graph& g, int k) {
  const auto pool = all_vertices(g);
  for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    auto s = subset_members(mask, pool);
    // Fix s[0] as the start; try every order of the rest.
    do {
      bool closed = true;
      for (int i = 0; i < k && closed; ++i) closed = g.adjacent(s[i], s[(i + 1) % k]);
      if (closed) return true;
    } while (std::next_permutation(s.begin() + 1, s.end()));
  }
  return false;
}

bool generating(const Graph& g, const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> pool;
  for (int v = 1; v <= g.order(); ++v) {
    if (std::find(x.begin(), x.end(), v) == x.end() && std::find(y.begin(), y.end(), v) == y.end()) {
      pool.push_back(v);
    }
  }
  for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
    auto s = subset_members(mask, pool);
    auto with_x = s;
    with_x.insert(with_x.end(), x.begin(), x.end());
    auto with_y = s;
    with_y.insert(with_y.end(), y.begin(), y.end());
    if (maximal_independent(g, with_x) && maximal_independent(g, with_y)) return true;
  }
  return false;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> complete_bipartites(const Graph& g) {
  const int n = g.order();
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (int code = 0; code < total; ++code) {
    std::vector<int> x;
    std::vector<int> y;
    int rest = code;
    for (int v = 1; v <= n; ++v, rest /= 3) {
      if (rest % 3 == 1) x.push_back(v);
      if (rest % 3 == 2) y.push_back(v);
    }
    if (x.empty() || y.empty() || x.front() > y.front()) continue;
    if (!independent(g, x) || !independent(g, y)) continue;
    bool complete = true;
    for (int a : x) {
      for (int b : y) complete = complete && g.adjacent(a, b);
    }
    if (complete) out.emplace_back(x, y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool satisfiable(const CnfInstance& instance) {
  const int n = instance.n_vars();
  if (n > 20) throw std::invalid_argument("oracle limited to 20 variables");
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    bool all = true;
    for (const Clause& c : instance.clauses()) {
      bool any = false;
      for (Literal l : c) {
        const bool value = (mask >> (l.var - 1)) & 1u;
        any = any || (value != l.negated);
      }
      all = all && any;
      if (!all) break;
    }
    if (all) return true;
  }
  return false;
}

bool dsat_compatible(const std::vector<int>& a, const std::vector<int>& b) {
  int shared = 0;
  int clashing = 0;
  for (int l : a) {
    for (int k : b) {
      if (l == k) ++shared;
      if (l == -k) ++clashing;
    }
  }
  return shared == 0 || (shared == 1 && clashing == 0);
}

}  // namespace oracle

}  // namespace wcw::test
