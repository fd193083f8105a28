#include "prodlab/graph.hpp"

#include "prodlab/errors.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

namespace prodlab {

Edge Edge::of(VertexId a, VertexId b) {
  if (a == b) throw PreconditionError("self-loop at vertex " + std::to_string(a));
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string edge_key(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Edge parse_edge_key(std::string_view key) {
  const auto dash = key.find('-');
  if (dash == std::string_view::npos || dash == 0) throw ParseError("bad edge key '" + std::string(key) + "'");
  VertexId a = 0;
  VertexId b = 0;
  const auto ra = std::from_chars(key.data(), key.data() + dash, a);
  const auto rb = std::from_chars(key.data() + dash + 1, key.data() + key.size(), b);
  if (ra.ec != std::errc() || ra.ptr != key.data() + dash || rb.ec != std::errc() ||
      rb.ptr != key.data() + key.size() || a < 0 || b < 0 || a >= b)
    throw ParseError("bad edge key '" + std::string(key) + "' (expected \"u-v\" with u < v)");
  return Edge{a, b};
}

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  if (!vertices_.empty() && vertices_.front() < 0) throw PreconditionError("negative vertex id");
  const std::size_t bound = vertices_.empty() ? 0 : static_cast<std::size_t>(vertices_.back()) + 1;
  adjacency_.assign(bound, {});
  incident_.assign(bound, {});
  present_.assign(bound, 0);
  for (VertexId v : vertices_) present_[v] = 1;

  for (Edge& e : edges_) {
    e = Edge::of(e.u, e.v);
    if (!has_vertex(e.u) || !has_vertex(e.v))
      throw PreconditionError("edge " + edge_key(e) + " has an undeclared endpoint");
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
    throw PreconditionError("duplicate edge " + edge_key(*dup));

  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (VertexId v : vertices_) {
    auto& nbrs = adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    incident_[v].reserve(nbrs.size());
    for (VertexId w : nbrs) incident_[v].push_back(*edge_index(v, w));
  }
}

Graph Graph::from_edges(std::vector<Edge> edges) {
  std::vector<VertexId> vertices;
  vertices.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    vertices.push_back(e.u);
    vertices.push_back(e.v);
  }
  return Graph(std::move(vertices), std::move(edges));
}

bool Graph::has_vertex(VertexId v) const {
  return v >= 0 && static_cast<std::size_t>(v) < present_.size() && present_[v];
}

std::optional<std::size_t> Graph::edge_index(VertexId a, VertexId b) const {
  if (a == b || !has_vertex(a) || !has_vertex(b)) return std::nullopt;
  const Edge key = Edge::of(a, b);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::span<const VertexId> Graph::neighbours(VertexId v) const {
  if (!has_vertex(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
  return adjacency_[v];
}

std::span<const std::size_t> Graph::incident_edges(VertexId v) const {
  if (!has_vertex(v)) throw PreconditionError("unknown vertex " + std::to_string(v));
  return incident_[v];
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (VertexId v : vertices_) best = std::max(best, adjacency_[v].size());
  return best;
}

std::size_t Graph::min_degree() const {
  if (vertices_.empty()) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (VertexId v : vertices_) best = std::min(best, adjacency_[v].size());
  return best;
}

Graph Graph::without_vertices(std::span<const VertexId> removed) const {
  std::vector<char> gone(present_.size(), 0);
  for (VertexId v : removed)
    if (has_vertex(v)) gone[v] = 1;
  std::vector<VertexId> vertices;
  for (VertexId v : vertices_)
    if (!gone[v]) vertices.push_back(v);
  std::vector<Edge> edges;
  for (const Edge& e : edges_)
    if (!gone[e.u] && !gone[e.v]) edges.push_back(e);
  return Graph(std::move(vertices), std::move(edges));
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::set<Edge> gone;
  for (const Edge& e : removed) gone.insert(Edge::of(e.u, e.v));
  std::vector<Edge> edges;
  for (const Edge& e : edges_)
    if (!gone.contains(e)) edges.push_back(e);
  return Graph(vertices_, std::move(edges));
}

Graph Graph::induced(std::span<const VertexId> kept) const {
  std::vector<char> keep(present_.size(), 0);
  std::vector<VertexId> vertices;
  for (VertexId v : kept)
    if (has_vertex(v) && !keep[v]) {
      keep[v] = 1;
      vertices.push_back(v);
    }
  std::vector<Edge> edges;
  for (const Edge& e : edges_)
    if (keep[e.u] && keep[e.v]) edges.push_back(e);
  return Graph(std::move(vertices), std::move(edges));
}

std::vector<std::vector<VertexId>> Graph::components() const {
  std::vector<std::vector<VertexId>> result;
  std::vector<char> seen(present_.size(), 0);
  for (VertexId s : vertices_) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (VertexId w : adjacency_[comp[i]])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    result.push_back(std::move(comp));
  }
  return result;
}

bool Graph::is_connected() const { return components().size() <= 1; }

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra))
      throw ParseError("expected two integers \"u v\"", line_no);
    if (a < 0 || b < 0 || a > std::numeric_limits<VertexId>::max() || b > std::numeric_limits<VertexId>::max())
      throw ParseError("vertex ids must be non-negative 32-bit integers", line_no);
    if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a), line_no);
    const Edge e = Edge::of(static_cast<VertexId>(a), static_cast<VertexId>(b));
    if (!seen.insert(e).second) throw ParseError("duplicate edge " + edge_key(e), line_no);
    edges.push_back(e);
  }
  return Graph::from_edges(std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

bool is_nice(const Graph& g) {
  for (const Edge& e : g.edges())
    if (g.degree(e.u) == 1 && g.degree(e.v) == 1) return false;
  return true;
}

bool is_forest(const Graph& g) { return g.edge_count() + g.components().size() == g.vertex_count(); }

bool is_tree(const Graph& g) { return g.vertex_count() > 0 && g.is_connected() && is_forest(g); }

std::optional<std::size_t> girth(const Graph& g) {
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::size_t best = kUnseen;
  std::vector<std::size_t> dist(g.id_bound(), kUnseen);
  std::vector<VertexId> parent(g.id_bound(), -1);
  for (VertexId root : g.vertices()) {
    std::vector<VertexId> touched{root};
    dist[root] = 0;
    std::queue<VertexId> queue;
    queue.push(root);
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop();
      if (2 * dist[x] + 1 >= best) break;
      for (VertexId y : g.neighbours(x)) {
        if (dist[y] == kUnseen) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          touched.push_back(y);
          queue.push(y);
        } else if (parent[x] != y) {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
    for (VertexId v : touched) {
      dist[v] = kUnseen;
      parent[v] = -1;
    }
  }
  if (best == kUnseen) return std::nullopt;
  return best;
}

namespace {

bool extend_cycle(const Graph& g, std::vector<VertexId>& path, std::vector<char>& on_path, std::size_t length) {
  const VertexId start = path.front();
  const VertexId last = path.back();
  if (path.size() == length) return g.has_edge(last, start);
  for (VertexId next : g.neighbours(last)) {
    if (next <= start || on_path[next]) continue;
    path.push_back(next);
    on_path[next] = 1;
    if (extend_cycle(g, path, on_path, length)) return true;
    on_path[next] = 0;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<VertexId>> smallest_induced_cycle(const Graph& g) {
  const auto length = girth(g);
  if (!length) return std::nullopt;
  std::vector<char> on_path(g.id_bound(), 0);
  for (VertexId s : g.vertices()) {
    std::vector<VertexId> path{s};
    on_path[s] = 1;
    const bool found = extend_cycle(g, path, on_path, *length);
    on_path[s] = 0;
    if (!found) continue;
    // The first neighbour tried is the smaller one, so the orientation is canonical.
    for (std::size_t i = 0; i < path.size(); ++i)
      for (std::size_t j = i + 2; j < path.size(); ++j) {
        if (i == 0 && j + 1 == path.size()) continue;
        if (g.has_edge(path[i], path[j]))
          throw InvariantViolation("shortest cycle has a chord");
      }
    return path;
  }
  return std::nullopt;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> side(g.id_bound(), -1);
  Bipartition result;
  for (const auto& comp : g.components()) {
    side[comp.front()] = 0;
    std::vector<VertexId> order{comp.front()};
    for (std::size_t i = 0; i < order.size(); ++i) {
      const VertexId x = order[i];
      for (VertexId y : g.neighbours(x)) {
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          order.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  for (VertexId v : g.vertices()) (side[v] == 0 ? result.a : result.b).push_back(v);
  return result;
}

std::optional<Thread> find_thread(const Graph& g, std::size_t length) {
  if (length == 0) return std::nullopt;
  for (VertexId s : g.vertices()) {
    if (g.degree(s) != 2) continue;
    const auto nbrs = g.neighbours(s);
    for (int dir = 0; dir < 2; ++dir) {
      const VertexId before = nbrs[1 - dir];
      std::vector<VertexId> interior{s};
      VertexId prev = s;
      VertexId cur = nbrs[dir];
      bool ok = true;
      while (interior.size() < length) {
        if (g.degree(cur) != 2) {
          ok = false;
          break;
        }
        interior.push_back(cur);
        const auto cn = g.neighbours(cur);
        const VertexId next = cn[0] == prev ? cn[1] : cn[0];
        prev = cur;
        cur = next;
      }
      if (!ok) continue;
      const VertexId after = cur;
      if (g.degree(before) < 2 || g.degree(after) < 2 || before == after) continue;
      bool distinct = true;
      for (VertexId x : interior)
        if (x == before || x == after) distinct = false;
      if (!distinct) continue;
      return Thread{before, after, std::move(interior)};
    }
  }
  return std::nullopt;
}

std::optional<LongPendingPath> find_long_pending_path(const Graph& g, std::span<const VertexId> candidates) {
  auto check = [&](VertexId leaf) -> std::optional<LongPendingPath> {
    if (!g.has_vertex(leaf) || g.degree(leaf) != 1) return std::nullopt;
    const VertexId a = g.neighbours(leaf)[0];
    if (g.degree(a) != 2) return std::nullopt;
    const VertexId b = g.neighbours(a)[0] == leaf ? g.neighbours(a)[1] : g.neighbours(a)[0];
    if (g.degree(b) != 2) return std::nullopt;
    const VertexId x = g.neighbours(b)[0] == a ? g.neighbours(b)[1] : g.neighbours(b)[0];
    if (g.degree(x) < 2) return std::nullopt;
    return LongPendingPath{leaf, a, b, x};
  };
  if (candidates.empty()) {
    for (VertexId v : g.vertices())
      if (auto p = check(v)) return p;
  } else {
    std::vector<VertexId> sorted(candidates.begin(), candidates.end());
    std::sort(sorted.begin(), sorted.end());
    for (VertexId v : sorted)
      if (auto p = check(v)) return p;
  }
  return std::nullopt;
}

TreeStructure tree_structure(const Graph& t, VertexId root) {
  if (!is_tree(t)) throw PreconditionError("tree_structure: input is not a tree");
  if (!t.has_vertex(root)) throw PreconditionError("tree_structure: root not in tree");
  TreeStructure s;
  s.root = root;
  s.parent.assign(t.id_bound(), std::nullopt);
  s.depth.assign(t.id_bound(), 0);
  std::vector<VertexId> order{root};
  std::vector<char> seen(t.id_bound(), 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId x = order[i];
    for (VertexId y : t.neighbours(x))
      if (!seen[y]) {
        seen[y] = 1;
        s.parent[y] = x;
        s.depth[y] = s.depth[x] + 1;
        order.push_back(y);
      }
  }
  for (VertexId v : t.vertices()) {
    if (t.degree(v) < 3) continue;
    if (!s.deepest_branching || s.depth[v] > s.depth[*s.deepest_branching]) s.deepest_branching = v;
  }
  if (s.deepest_branching) {
    const VertexId u = *s.deepest_branching;
    for (VertexId son : t.neighbours(u)) {
      if (s.parent[u] == son) continue;
      if (t.degree(son) == 1) {
        s.pending_leaves.push_back(son);
      } else if (t.degree(son) == 2) {
        const VertexId grandson = t.neighbours(son)[0] == u ? t.neighbours(son)[1] : t.neighbours(son)[0];
        if (t.degree(grandson) == 1) s.pending_two_paths.emplace_back(son, grandson);
      }
    }
  }
  s.long_pending_path = find_long_pending_path(t);
  return s;
}

}  // namespace prodlab
