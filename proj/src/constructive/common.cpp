#include "common.hpp"

#include <deque>

namespace prodlab::detail {

Rational partial_product(const Graph& g, const Labelling& lab, VertexId v) {
  Rational p = 1;
  for (VertexId w : g.neighbours(v)) {
    const Edge e = Edge::of(v, w);
    if (lab.contains(e)) p *= lab.at(e);
  }
  return p;
}

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

const Rational& first_label(const std::vector<Rational>& list, const std::function<bool(const Rational&)>& ok,
                            const std::string& step) {
  for (const Rational& x : list)
    if (ok(x)) return x;
  throw InvariantViolation(step + ": no admissible label in list");
}

void require_lists(const Graph& g, const ListAssignment& la, std::size_t min_size, const std::string& who) {
  if (!la.covers(g)) throw PreconditionError(who + ": list assignment does not cover every edge");
  for (const Edge& e : g.edges()) {
    const auto& list = la.at(e);
    if (list.size() < min_size)
      throw PreconditionError(who + ": list of edge " + edge_key(e) + " has fewer than " +
                              std::to_string(min_size) + " labels");
    for (const Rational& x : list)
      if (x == 0) throw PreconditionError(who + ": list of edge " + edge_key(e) + " contains 0");
  }
}

void require_nice(const Graph& g, const std::string& who) {
  if (!is_nice(g)) throw PreconditionError(who + ": graph has a single-edge component");
}

void assert_proper(const Graph& g, const Labelling& lab, const ListAssignment& la, const std::string& who) {
  if (!lab.total_on(g)) throw InvariantViolation(who + ": labelling is not total");
  const Labelling own = lab.restricted_to(g);
  if (auto bad = first_list_violation(g, own, la))
    throw InvariantViolation(who + ": edge " + edge_key(*bad) + " labelled outside its list");
  const auto conflicts = check_proper(g, own, Mode::Product);
  if (!conflicts.empty()) throw InvariantViolation(who + ": conflict on edge " + edge_key(conflicts.front()));
}

bool is_path_graph(const Graph& g) {
  return g.edge_count() >= 1 && g.is_connected() && g.max_degree() <= 2 && g.edge_count() + 1 == g.vertex_count();
}

bool is_cycle_graph(const Graph& g) {
  if (g.vertex_count() < 3 || !g.is_connected() || g.edge_count() != g.vertex_count()) return false;
  for (VertexId v : g.vertices())
    if (g.degree(v) != 2) return false;
  return true;
}

namespace {
std::vector<VertexId> walk(const Graph& g, VertexId start, VertexId next, std::size_t count) {
  std::vector<VertexId> seq{start};
  VertexId prev = start, cur = next;
  while (seq.size() < count) {
    seq.push_back(cur);
    VertexId nxt = cur;
    for (VertexId w : g.neighbours(cur))
      if (w != prev) nxt = w;
    prev = cur;
    cur = nxt;
  }
  return seq;
}
}  // namespace

std::vector<VertexId> path_sequence(const Graph& path) {
  if (!is_path_graph(path)) throw PreconditionError("graph is not a path");
  std::vector<VertexId> ends;
  for (VertexId v : path.vertices())
    if (path.degree(v) == 1) ends.push_back(v);
  const VertexId start = ends.front();
  return walk(path, start, path.neighbours(start).front(), path.vertex_count());
}

std::vector<VertexId> cycle_sequence(const Graph& cycle) {
  if (!is_cycle_graph(cycle)) throw PreconditionError("graph is not a cycle");
  const VertexId start = cycle.vertices().front();
  return walk(cycle, start, cycle.neighbours(start).front(), cycle.vertex_count());
}

namespace {

struct SearchState {
  const Graph& g;
  std::span<const Edge> free_edges;
  const std::vector<std::vector<Rational>>& candidates;
  std::vector<Rational> product;
  std::vector<int> remaining;
  std::vector<Rational> chosen;

  bool vertex_ok(VertexId v) const {
    for (VertexId w : g.neighbours(v))
      if (remaining[w] == 0 && product[v] == product[w]) return false;
    return true;
  }

  bool run(std::size_t i) {
    if (i == free_edges.size()) return true;
    const Edge& e = free_edges[i];
    for (const Rational& x : candidates[i]) {
      product[e.u] *= x;
      product[e.v] *= x;
      --remaining[e.u];
      --remaining[e.v];
      bool ok = true;
      if (remaining[e.u] == 0) ok = vertex_ok(e.u);
      if (ok && remaining[e.v] == 0) ok = vertex_ok(e.v);
      if (ok) {
        chosen[i] = x;
        if (run(i + 1)) return true;
      }
      ++remaining[e.u];
      ++remaining[e.v];
      product[e.u] /= x;
      product[e.v] /= x;
    }
    return false;
  }
};

}  // namespace

bool extend_by_search(const Graph& g, Labelling& lab, std::span<const Edge> free_edges,
                      const std::vector<std::vector<Rational>>& candidates) {
  if (candidates.size() != free_edges.size()) throw PreconditionError("candidate lists do not match free edges");
  SearchState st{g, free_edges, candidates, std::vector<Rational>(g.id_bound(), Rational(1)),
                 std::vector<int>(g.id_bound(), 0), std::vector<Rational>(free_edges.size())};
  std::vector<char> is_free(g.edge_count(), 0);
  for (const Edge& e : free_edges) {
    auto idx = g.edge_index(e.u, e.v);
    if (!idx || lab.contains(e)) throw PreconditionError("free edge missing from graph or already labelled");
    is_free[*idx] = 1;
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (is_free[i]) {
      ++st.remaining[e.u];
      ++st.remaining[e.v];
    } else if (lab.contains(e)) {
      st.product[e.u] *= lab.at(e);
      st.product[e.v] *= lab.at(e);
    } else {
      throw PreconditionError("edge " + edge_key(e) + " is neither labelled nor free");
    }
  }
  for (const auto& c : candidates)
    for (const Rational& x : c)
      if (x == 0) throw PreconditionError("candidate label 0");
  if (!st.run(0)) return false;
  for (std::size_t i = 0; i < free_edges.size(); ++i) lab.set(free_edges[i], st.chosen[i]);
  return true;
}

void extend_pending_star(const Graph& g, const ListAssignment& la, Labelling& lab, const PendingStar& star) {
  const VertexId c = star.center;
  std::vector<StarAnchor> anchors;
  Rational base = 1;
  for (VertexId t : g.neighbours(c)) {
    const Edge e = Edge::of(c, t);
    if (!lab.contains(e)) continue;
    anchors.push_back({lab.at(e), partial_product(g, lab, t)});
    base *= lab.at(e);
  }
  const auto avoids_anchors = [&](const Rational& product) {
    for (const auto& a : anchors)
      if (product == a.product) return false;
    return true;
  };
  const std::size_t p = star.two_paths.size();
  const std::size_t q = star.leaves.size();

  Rational spoke_product = 1;
  for (std::size_t i = 0; i < p; ++i) {
    const Edge e = Edge::of(c, star.two_paths[i].first);
    const bool last = i + 1 == p;
    const Rational& x = first_label(
        la.at(e),
        [&](const Rational& x) {
          if (x == 1) return false;
          if (last && q == 0) return avoids_anchors(base * x);
          if (last && q == 1) return base * x != 1;
          return true;
        },
        "pending star spoke");
    lab.set(e, x);
    base *= x;
    spoke_product *= x;
  }
  if (q == 1) {
    if (base == 1) throw InvariantViolation("pending star: center partial product is 1 before its single leaf");
    const Edge e = Edge::of(c, star.leaves.front());
    lab.set(e, first_label(la.at(e), [&](const Rational& x) { return avoids_anchors(base * x); }, "pending star leaf"));
  } else if (q >= 2) {
    StarExtensionProblem problem;
    problem.anchors = anchors;
    problem.extra_factor = spoke_product;
    for (VertexId w : star.leaves) problem.leaf_lists.push_back(la.at(Edge::of(c, w)));
    const auto xs = extend_star(problem);
    for (std::size_t j = 0; j < q; ++j) lab.set(Edge::of(c, star.leaves[j]), xs[j]);
  }
  const Rational center = partial_product(g, lab, c);
  for (const auto& [b, b2] : star.two_paths) {
    const Rational spoke = lab.at(Edge::of(c, b));
    const Edge e = Edge::of(b, b2);
    lab.set(e, first_label(la.at(e), [&](const Rational& y) { return spoke * y != center; }, "pending path end"));
  }
}

std::vector<VertexId> two_core(const Graph& g) {
  std::vector<std::size_t> deg(g.id_bound(), 0);
  std::vector<char> gone(g.id_bound(), 0);
  std::deque<VertexId> queue;
  for (VertexId v : g.vertices()) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) {
      queue.push_back(v);
      gone[v] = 1;
    }
  }
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbours(v)) {
      if (gone[w]) continue;
      if (--deg[w] <= 1) {
        gone[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<VertexId> core;
  for (VertexId v : g.vertices())
    if (!gone[v]) core.push_back(v);
  return core;
}

}  // namespace prodlab::detail
