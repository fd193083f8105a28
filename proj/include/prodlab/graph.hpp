#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prodlab {

using VertexId = int;

/// Undirected edge stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  /// Normalizes endpoint order. Throws PreconditionError on a self-loop.
  static Edge of(VertexId a, VertexId b);

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool touches(VertexId x) const { return x == u || x == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// "u-v" with u < v, the key used by the JSON file formats.
std::string edge_key(const Edge& e);
Edge parse_edge_key(std::string_view key);

/// Simple undirected graph on non-negative integer ids. Immutable once built;
/// vertices, neighbours and edges are always iterated in increasing order.
class Graph {
 public:
  Graph() = default;
  /// Throws PreconditionError on negative ids, self-loops, duplicate edges or
  /// endpoints missing from `vertices`.
  Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);
  /// Vertex set = endpoints of `edges`.
  static Graph from_edges(std::vector<Edge> edges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId a, VertexId b) const { return edge_index(a, b).has_value(); }
  std::optional<std::size_t> edge_index(VertexId a, VertexId b) const;

  std::span<const VertexId> neighbours(VertexId v) const;
  /// Indices into edges(), parallel to neighbours(v).
  std::span<const std::size_t> incident_edges(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbours(v).size(); }

  std::size_t max_degree() const;
  /// 0 for the empty graph.
  std::size_t min_degree() const;
  /// One past the largest vertex id; sizes id-indexed scratch arrays.
  std::size_t id_bound() const { return adjacency_.size(); }

  Graph without_vertices(std::span<const VertexId> removed) const;
  Graph without_edges(std::span<const Edge> removed) const;
  Graph induced(std::span<const VertexId> kept) const;

  /// Components in order of their smallest vertex; each sorted.
  std::vector<std::vector<VertexId>> components() const;
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<char> present_;
};

/// Edge-list text: one "u v" per line, '#' starts a comment line, blank lines
/// ignored. Throws ParseError naming the offending line.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
/// Isolated vertices are not representable and are dropped.
std::string to_edge_list(const Graph& g);

/// True iff no connected component is a single edge.
bool is_nice(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);

/// Length of a shortest cycle; nullopt for forests (infinite girth).
std::optional<std::size_t> girth(const Graph& g);

/// A shortest cycle, induced, as a vertex sequence starting at its smallest
/// vertex and continuing towards the smaller of that vertex's two cycle
/// neighbours; lexicographically smallest among shortest cycles.
std::optional<std::vector<VertexId>> smallest_induced_cycle(const Graph& g);

struct Bipartition {
  std::vector<VertexId> a;
  std::vector<VertexId> b;
};

/// Per component, the side containing the component's smallest vertex is `a`.
std::optional<Bipartition> bipartition(const Graph& g);

/// A path u, interior..., w where every interior vertex has degree 2 and the
/// endpoints have degree at least 2.
struct Thread {
  VertexId u = 0;
  VertexId w = 0;
  std::vector<VertexId> interior;
};

std::optional<Thread> find_thread(const Graph& g, std::size_t length);

/// A path leaf, a, b, attach with deg(leaf) = 1, deg(a) = deg(b) = 2 and
/// deg(attach) >= 2.
struct LongPendingPath {
  VertexId leaf = 0;
  VertexId near_leaf = 0;
  VertexId middle = 0;
  VertexId attach = 0;
};

/// Smallest-leaf-first scan restricted to leaves in `candidates` (all leaves
/// when empty).
std::optional<LongPendingPath> find_long_pending_path(const Graph& g,
                                                     std::span<const VertexId> candidates = {});

struct TreeStructure {
  VertexId root = 0;
  /// parent[v] for every vertex; nullopt for the root. Indexed by id.
  std::vector<std::optional<VertexId>> parent;
  std::vector<std::size_t> depth;
  /// Farthest vertex of degree >= 3 from the root (smallest id on ties).
  std::optional<VertexId> deepest_branching;
  /// Sons of deepest_branching that are leaves.
  std::vector<VertexId> pending_leaves;
  /// (son, grandson) pairs of deepest_branching forming length-2 pending paths.
  std::vector<std::pair<VertexId, VertexId>> pending_two_paths;
  /// Any pending path of length >= 3 in the tree.
  std::optional<LongPendingPath> long_pending_path;
};

/// Throws PreconditionError when `t` is not a tree or lacks `root`.
TreeStructure tree_structure(const Graph& t, VertexId root);

}  // namespace prodlab
