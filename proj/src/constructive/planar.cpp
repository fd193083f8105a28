#include "common.hpp"

#include <algorithm>
#include <deque>

namespace prodlab {

using detail::first_label;
using detail::partial_product;
using detail::PendingStar;

namespace {

void label_planar_into(const Graph& g, const ListAssignment& la, Labelling& lab);

void label_components(const Graph& g, const ListAssignment& la, Labelling& lab) {
  for (const auto& comp : g.components()) {
    const Graph c = g.induced(comp);
    if (c.edge_count() == 0) continue;
    if (!is_nice(c)) throw InvariantViolation("planar labelling: reduction produced a single-edge component");
    label_planar_into(c, la, lab);
  }
}

// Labels v1v2 and v2v3 of a thread u v1 v2 v3 w once everything else is labelled.
void extend_thread(const Graph& g, const ListAssignment& la, Labelling& lab, const Thread& t) {
  const VertexId u = t.u, v1 = t.interior[0], v2 = t.interior[1], v3 = t.interior[2], w = t.w;
  const Rational a = lab.at(Edge::of(u, v1));
  const Rational b = lab.at(Edge::of(v3, w));
  const Rational pu = partial_product(g, lab, u);
  const Rational pw = partial_product(g, lab, w);
  const Edge e12 = Edge::of(v1, v2), e23 = Edge::of(v2, v3);
  lab.set(e12, first_label(la.at(e12), [&](const Rational& x) { return x != b && a * x != pu; }, "thread, first edge"));
  lab.set(e23, first_label(la.at(e23), [&](const Rational& y) { return y != a && y * b != pw; }, "thread, second edge"));
}

struct PendingTree {
  std::vector<VertexId> vertices;  // root first, BFS order
  std::vector<Edge> edges;
  std::vector<std::pair<VertexId, VertexId>> links;  // (child, parent) in BFS order
};

PendingTree pending_tree(const Graph& g, const std::vector<char>& in_core, VertexId root) {
  PendingTree t{{root}, {}, {}};
  std::deque<std::pair<VertexId, VertexId>> queue{{root, root}};
  while (!queue.empty()) {
    const auto [v, from] = queue.front();
    queue.pop_front();
    for (VertexId w : g.neighbours(v)) {
      if (w == from || in_core[w]) continue;
      t.vertices.push_back(w);
      t.edges.push_back(Edge::of(v, w));
      t.links.push_back({w, v});
      queue.push_back({w, v});
    }
  }
  return t;
}

// Deepest vertex of degree >= 3 other than the root, with its pending paths.
std::optional<PendingStar> deepest_inner_branching(const Graph& g, const PendingTree& t) {
  std::vector<VertexId> parent(g.id_bound(), -1);
  std::vector<std::size_t> depth(g.id_bound(), 0);
  for (const auto& [c, p] : t.links) {
    parent[c] = p;
    depth[c] = depth[p] + 1;
  }
  std::optional<VertexId> best;
  for (const auto& [v, p] : t.links) {
    if (g.degree(v) < 3) continue;
    if (!best || depth[v] > depth[*best] || (depth[v] == depth[*best] && v < *best)) best = v;
  }
  if (!best) return std::nullopt;
  PendingStar star{*best, {}, {}};
  for (VertexId c : g.neighbours(*best)) {
    if (c == parent[*best]) continue;
    if (g.degree(c) == 1) {
      star.leaves.push_back(c);
    } else {
      for (VertexId gc : g.neighbours(c))
        if (gc != *best) star.two_paths.push_back({c, gc});
    }
  }
  return star;
}

PendingStar star_at(const Graph& g, VertexId center, const std::vector<char>& in_core) {
  PendingStar star{center, {}, {}};
  for (VertexId c : g.neighbours(center)) {
    if (in_core[c]) continue;
    if (g.degree(c) == 1) {
      star.leaves.push_back(c);
    } else {
      for (VertexId gc : g.neighbours(c))
        if (gc != center) star.two_paths.push_back({c, gc});
    }
  }
  return star;
}

std::vector<VertexId> star_vertices(const PendingStar& s) {
  std::vector<VertexId> out = s.leaves;
  for (const auto& [b, b2] : s.two_paths) {
    out.push_back(b);
    out.push_back(b2);
  }
  return out;
}

void label_planar_into(const Graph& g, const ListAssignment& la, Labelling& lab) {
  if (is_tree(g)) {
    detail::label_tree_into(g, la, lab);
    return;
  }
  if (detail::is_cycle_graph(g)) {
    lab.merge(label_cycle(g, la));
    return;
  }
  if (g.min_degree() >= 2) {
    const auto thread = find_thread(g, 3);
    if (!thread) throw PreconditionError("planar labelling: no 3-thread found (graph not planar with girth >= 16?)");
    const VertexId removed[] = {thread->interior[1]};
    label_components(g.without_vertices(removed), la, lab);
    extend_thread(g, la, lab, *thread);
    return;
  }

  const auto core_vertices = detail::two_core(g);
  std::vector<char> in_core(g.id_bound(), 0);
  for (VertexId v : core_vertices) in_core[v] = 1;
  const Graph core = g.induced(core_vertices);
  const auto thread = find_thread(core, 3);
  if (!thread) throw PreconditionError("planar labelling: no 3-thread in the core (graph not planar with girth >= 16?)");
  const VertexId v[3] = {thread->interior[0], thread->interior[1], thread->interior[2]};
  const PendingTree trees[3] = {pending_tree(g, in_core, v[0]), pending_tree(g, in_core, v[1]),
                                pending_tree(g, in_core, v[2])};

  if (std::all_of(std::begin(trees), std::end(trees), [](const PendingTree& t) { return t.edges.empty(); })) {
    const VertexId removed[] = {v[1]};
    label_components(g.without_vertices(removed), la, lab);
    extend_thread(g, la, lab, *thread);
    return;
  }

  std::vector<VertexId> leaves;
  for (const auto& t : trees)
    for (VertexId x : t.vertices)
      if (g.degree(x) == 1) leaves.push_back(x);
  std::sort(leaves.begin(), leaves.end());
  if (const auto p = find_long_pending_path(g, leaves)) {
    const VertexId removed[] = {p->leaf, p->near_leaf};
    label_components(g.without_vertices(removed), la, lab);
    detail::extend_long_pending_path(g, la, lab, *p);
    return;
  }
  for (const auto& t : trees) {
    if (const auto star = deepest_inner_branching(g, t)) {
      const auto removed = star_vertices(*star);
      label_components(g.without_vertices(removed), la, lab);
      detail::extend_pending_star(g, la, lab, *star);
      return;
    }
  }

  const VertexId u = thread->u, w = thread->w;
  const Edge e12 = Edge::of(v[0], v[1]), e23 = Edge::of(v[1], v[2]);

  if (std::all_of(std::begin(trees), std::end(trees), [](const PendingTree& t) { return t.edges.size() == 1; })) {
    const VertexId removed[] = {v[1], trees[1].vertices[1]};
    label_components(g.without_vertices(removed), la, lab);
    const VertexId v1x = trees[0].vertices[1], v3x = trees[2].vertices[1], v2x = trees[1].vertices[1];
    const Rational p1 = partial_product(g, lab, v[0]);
    const Rational pu = partial_product(g, lab, u);
    const Rational leaf1 = lab.at(Edge::of(v[0], v1x));
    const Rational& x = first_label(
        la.at(e12), [&](const Rational& x) { return p1 * x != pu && p1 * x != leaf1; }, "thread, first edge");
    lab.set(e12, x);
    const Rational p3 = partial_product(g, lab, v[2]);
    const Rational pw = partial_product(g, lab, w);
    const Rational leaf3 = lab.at(Edge::of(v[2], v3x));
    const Rational& y = first_label(
        la.at(e23), [&](const Rational& y) { return p3 * y != pw && p3 * y != leaf3 && x * y != 1; },
        "thread, second edge");
    lab.set(e23, y);
    const Rational f1 = partial_product(g, lab, v[0]);
    const Rational f3 = partial_product(g, lab, v[2]);
    const Edge e2 = Edge::of(v[1], v2x);
    lab.set(e2, first_label(la.at(e2), [&](const Rational& z) { return x * y * z != f1 && x * y * z != f3; },
                            "thread, middle pendant edge"));
    return;
  }

  std::vector<VertexId> removed;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = (i == 1 ? 0 : 1); j < trees[i].vertices.size(); ++j) removed.push_back(trees[i].vertices[j]);
  label_components(g.without_vertices(removed), la, lab);

  const Rational a = lab.at(Edge::of(u, v[0]));
  const Rational b = lab.at(Edge::of(v[2], w));
  const Rational pu = partial_product(g, lab, u);
  const Rational pw = partial_product(g, lab, w);
  const bool single[3] = {trees[0].edges.size() == 1, trees[1].edges.size() == 1, trees[2].edges.size() == 1};
  const auto fits = [&](const Rational& x, const Rational& y) {
    const Rational p1 = a * x, p2 = x * y, p3 = y * b;
    if (p2 == p1 || p2 == p3) return false;
    if (p1 == pu || p3 == pw) return false;
    if ((single[0] && p1 == 1) || (single[1] && p2 == 1) || (single[2] && p3 == 1)) return false;
    return true;
  };
  bool done = false;
  if (single[0]) {
    for (const Rational& x : la.at(e12))
      for (const Rational& y : la.at(e23))
        if (!done && fits(x, y)) {
          lab.set(e12, x);
          lab.set(e23, y);
          done = true;
        }
  } else {
    for (const Rational& y : la.at(e23))
      for (const Rational& x : la.at(e12))
        if (!done && fits(x, y)) {
          lab.set(e12, x);
          lab.set(e23, y);
          done = true;
        }
  }
  if (!done) throw InvariantViolation("planar labelling: no admissible labels for the thread edges");
  for (std::size_t i = 0; i < 3; ++i)
    if (!trees[i].edges.empty()) detail::extend_pending_star(g, la, lab, star_at(g, v[i], in_core));
}

}  // namespace

Labelling label_planar_girth16(const Graph& g, const ListAssignment& la) {
  detail::require_nice(g, "label_planar_girth16");
  if (const auto gi = girth(g); gi && *gi < 16) throw PreconditionError("label_planar_girth16: girth " + std::to_string(*gi) + " < 16");
  detail::require_lists(g, la, 4, "label_planar_girth16");
  Labelling lab;
  label_components(g, la, lab);
  detail::assert_proper(g, lab, la, "label_planar_girth16");
  return lab;
}

}  // namespace prodlab
