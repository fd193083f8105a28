#include "common.hpp"

namespace prodlab {

using detail::first_label;
using detail::partial_product;

namespace detail {

// Labels leaf-near_leaf and near_leaf-middle after the rest is labelled.
void extend_long_pending_path(const Graph& g, const ListAssignment& la, Labelling& lab, const LongPendingPath& p) {
  const Edge attach_edge = Edge::of(p.middle, p.attach);
  const Rational attach_label = lab.at(attach_edge);
  const Rational attach_product = partial_product(g, lab, p.attach);
  const Edge mid = Edge::of(p.near_leaf, p.middle);
  const Rational& x = first_label(
      la.at(mid), [&](const Rational& x) { return x != 1 && attach_label * x != attach_product; },
      "long pending path, middle edge");
  lab.set(mid, x);
  const Edge end = Edge::of(p.leaf, p.near_leaf);
  lab.set(end, first_label(la.at(end), [&](const Rational& y) { return y != attach_label; },
                           "long pending path, end edge"));
}

void label_tree_into(const Graph& t, const ListAssignment& la, Labelling& lab) {
  if (t.edge_count() == 0) return;
  if (t.max_degree() <= 2) {
    lab.merge(label_path(t, la));
    return;
  }
  VertexId root = t.vertices().front();
  for (VertexId v : t.vertices())
    if (t.degree(v) >= 3) {
      root = v;
      break;
    }
  const TreeStructure ts = tree_structure(t, root);
  if (ts.long_pending_path) {
    const auto& p = *ts.long_pending_path;
    const VertexId removed[] = {p.leaf, p.near_leaf};
    label_tree_into(t.without_vertices(removed), la, lab);
    extend_long_pending_path(t, la, lab, p);
    return;
  }
  const VertexId u = *ts.deepest_branching;
  std::vector<VertexId> removed;
  for (VertexId w : ts.pending_leaves) removed.push_back(w);
  for (const auto& [b, b2] : ts.pending_two_paths) {
    removed.push_back(b);
    removed.push_back(b2);
  }
  const Graph reduced = t.without_vertices(removed);
  label_tree_into(reduced, la, lab);
  extend_pending_star(t, la, lab, PendingStar{u, ts.pending_two_paths, ts.pending_leaves});
}

}  // namespace detail

Labelling label_tree(const Graph& tree, const ListAssignment& la) {
  if (!is_tree(tree)) throw PreconditionError("label_tree: graph is not a tree");
  detail::require_nice(tree, "label_tree");
  detail::require_lists(tree, la, 3, "label_tree");
  Labelling lab;
  detail::label_tree_into(tree, la, lab);
  detail::assert_proper(tree, lab, la, "label_tree");
  return lab;
}

}  // namespace prodlab
