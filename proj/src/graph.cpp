#include "wcw/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <stdexcept>

#include "wcw/errors.hpp"

namespace wcw {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adjacency_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    check_vertex(e.u);
    check_vertex(e.v);
    auto& row = adjacency_[static_cast<std::size_t>(e.u - 1)];
    if (row.contains(e.v)) {
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    }
    row.insert(e.v);
    adjacency_[static_cast<std::size_t>(e.v - 1)].insert(e.u);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

void Graph::check_vertex(Vertex v) const {
  if (!has_vertex(v)) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  return adjacency_[static_cast<std::size_t>(u - 1)].contains(v);
}

const VertexSet& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[static_cast<std::size_t>(v - 1)];
}

VertexSet Graph::closed_neighbors(Vertex v) const {
  VertexSet s = neighbors(v);
  s.insert(v);
  return s;
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 1; v <= n_; ++v) best = std::max(best, degree(v));
  return best;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

/// Splits on whitespace and parses exactly two integers.
bool parse_int_pair(std::string_view line, long long& a, long long& b) {
  auto skip_ws = [&](std::size_t i) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    return i;
  };
  std::size_t i = skip_ws(0);
  auto r1 = std::from_chars(line.data() + i, line.data() + line.size(), a);
  if (r1.ec != std::errc{} || r1.ptr == line.data() + i) return false;
  i = static_cast<std::size_t>(r1.ptr - line.data());
  std::size_t j = skip_ws(i);
  if (j == i) return false;
  auto r2 = std::from_chars(line.data() + j, line.data() + line.size(), b);
  if (r2.ec != std::errc{} || r2.ptr == line.data() + j) return false;
  return skip_ws(static_cast<std::size_t>(r2.ptr - line.data())) == line.size();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') lines.push_back(line);
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("graph: missing header");

  long long n = 0;
  long long m = 0;
  if (!parse_int_pair(lines[0], n, m) || n < 0 || m < 0) {
    throw ParseError("graph: malformed header '" + std::string(lines[0]) + "'");
  }
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError("graph: header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t k = 1; k < lines.size(); ++k) {
    long long u = 0;
    long long v = 0;
    if (!parse_int_pair(lines[k], u, v)) {
      throw ParseError("graph: malformed edge line '" + std::string(lines[k]) + "'");
    }
    if (u == v) throw ParseError("graph: self-loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > n || v > n) {
      throw ParseError("graph: vertex index out of range in '" + std::string(lines[k]) + "'");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw ParseError("graph: duplicate edge " + std::to_string(dup->u) + " " +
                     std::to_string(dup->v));
  }
  return Graph(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Distances

std::vector<int> distances_from(const Graph& g, const VertexSet& sources) {
  if (sources.empty()) throw std::invalid_argument("distance to an empty vertex set is undefined");
  if (sources.universe() != g.order()) throw std::invalid_argument("vertex set does not match graph");
  std::vector<int> dist(static_cast<std::size_t>(g.order()) + 1, -1);
  std::deque<Vertex> queue;
  for (Vertex s : sources) {
    dist[static_cast<std::size_t>(s)] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      auto& d = dist[static_cast<std::size_t>(w)];
      if (d < 0) {
        d = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  int d = distances_from(g, VertexSet(g.order(), {u}))[static_cast<std::size_t>(v)];
  if (d < 0) return std::nullopt;
  return d;
}

namespace {

VertexSet collect_by_distance(const Graph& g, const VertexSet& s, int lo, int hi) {
  auto dist = distances_from(g, s);
  VertexSet out(g.order());
  for (Vertex v = 1; v <= g.order(); ++v) {
    int d = dist[static_cast<std::size_t>(v)];
    if (d >= lo && d <= hi) out.insert(v);
  }
  return out;
}

}  // namespace

VertexSet layer(const Graph& g, const VertexSet& s, int i) {
  if (i < 0) throw std::invalid_argument("negative layer index");
  return collect_by_distance(g, s, i, i);
}

VertexSet closed_layer(const Graph& g, const VertexSet& s, int i) {
  if (i < 0) throw std::invalid_argument("negative layer index");
  return collect_by_distance(g, s, 0, i);
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

// ---------------------------------------------------------------------------
// Independence and domination

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

bool dominates(const Graph& g, const VertexSet& s, const VertexSet& t) {
  return t.is_subset_of(closed_neighborhood(g, s));
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  return is_independent(g, s) && dominates(g, s, g.vertices());
}

std::optional<std::pair<VertexSet, VertexSet>> is_bipartite(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()) + 1, -1);
  for (Vertex root = 1; root <= g.order(); ++root) {
    if (color[static_cast<std::size_t>(root)] >= 0) continue;
    color[static_cast<std::size_t>(root)] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      int cu = color[static_cast<std::size_t>(u)];
      for (Vertex w : g.neighbors(u)) {
        int& cw = color[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - cu;
          queue.push_back(w);
        } else if (cw == cu) {
          return std::nullopt;
        }
      }
    }
  }
  VertexSet left(g.order());
  VertexSet right(g.order());
  for (Vertex v = 1; v <= g.order(); ++v) {
    (color[static_cast<std::size_t>(v)] == 0 ? left : right).insert(v);
  }
  return std::make_pair(std::move(left), std::move(right));
}

// ---------------------------------------------------------------------------
// Small cycles

namespace {

// Extends a simple path anchored at its smallest vertex `anchor`. Only
// vertices larger than the anchor are used, so each cycle is found from its
// minimum vertex.
bool extend_path(const Graph& g, Vertex anchor, Vertex tip, int remaining, VertexSet& on_path) {
  if (remaining == 0) return g.adjacent(tip, anchor);
  for (Vertex w : g.neighbors(tip)) {
    if (w <= anchor || on_path.contains(w)) continue;
    on_path.insert(w);
    bool found = extend_path(g, anchor, w, remaining - 1, on_path);
    on_path.erase(w);
    if (found) return true;
  }
  return false;
}

}  // namespace

bool contains_cycle_k(const Graph& g, int k) {
  if (k < kMinCycleLength || k > kMaxCycleLength) {
    throw std::invalid_argument("cycle length " + std::to_string(k) + " outside supported range 3..7");
  }
  for (Vertex anchor = 1; anchor <= g.order(); ++anchor) {
    if (g.degree(anchor) < 2) continue;
    VertexSet on_path(g.order(), {anchor});
    if (extend_path(g, anchor, anchor, k - 1, on_path)) return true;
  }
  return false;
}

namespace {

bool has_independent_subset(const Graph& g, const std::vector<Vertex>& pool, std::size_t from,
                            int needed, VertexSet& chosen) {
  if (needed == 0) return true;
  for (std::size_t i = from; i + static_cast<std::size_t>(needed) <= pool.size(); ++i) {
    Vertex v = pool[i];
    if (g.neighbors(v).intersects(chosen)) continue;
    chosen.insert(v);
    bool ok = has_independent_subset(g, pool, i + 1, needed - 1, chosen);
    chosen.erase(v);
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool is_k1t_free(const Graph& g, int t) {
  if (t < 1) throw std::invalid_argument("K_{1,t}-freeness needs t >= 1");
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) < t) continue;
    auto pool = g.neighbors(v).members();
    VertexSet chosen(g.order());
    if (has_independent_subset(g, pool, 0, t, chosen)) return false;
  }
  return true;
}

}  // namespace wcw
