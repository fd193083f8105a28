#include "common.hpp"
#include "prodlab/solver.hpp"

#include <algorithm>

namespace prodlab {

using detail::first_label;
using detail::partial_product;

namespace {

void label_subcubic_into(const Graph& g, const ListAssignment& la, Labelling& lab);

void label_components(const Graph& g, const ListAssignment& la, Labelling& lab) {
  for (const auto& comp : g.components()) {
    const Graph c = g.induced(comp);
    if (c.edge_count() == 0) continue;
    if (!is_nice(c)) throw InvariantViolation("subcubic labelling: reduction produced a single-edge component");
    label_subcubic_into(c, la, lab);
  }
}

void search_or_fail(const Graph& g, const ListAssignment& la, Labelling& lab, const std::vector<Edge>& free_edges,
                    std::vector<std::vector<Rational>> candidates, const char* step) {
  if (candidates.empty())
    for (const Edge& e : free_edges) candidates.push_back(la.at(e));
  if (!detail::extend_by_search(g, lab, free_edges, candidates))
    throw InvariantViolation(std::string("subcubic labelling: ") + step + " search exhausted");
}

void label_leaf_step(const Graph& g, const ListAssignment& la, Labelling& lab, VertexId u) {
  const VertexId v = g.neighbours(u).front();
  const VertexId removed[] = {u, v};
  const Graph reduced = g.without_vertices(removed);
  if (g.degree(v) == 2) {
    const VertexId w = g.neighbours(v)[0] == u ? g.neighbours(v)[1] : g.neighbours(v)[0];
    if (!is_nice(reduced)) {
      lab.merge(label_path(g, la));
      return;
    }
    label_components(reduced, la, lab);
    const Rational pw = partial_product(g, lab, w);
    const Edge vw = Edge::of(v, w);
    const Rational& x = first_label(
        la.at(vw),
        [&](const Rational& x) {
          if (x == 1) return false;
          for (VertexId z : g.neighbours(w))
            if (z != v && pw * x == partial_product(g, lab, z)) return false;
          return true;
        },
        "subcubic labelling, leaf step");
    lab.set(vw, x);
    const Edge uv = Edge::of(u, v);
    lab.set(uv, first_label(la.at(uv), [&](const Rational& y) { return x * y != pw * x; },
                            "subcubic labelling, leaf edge"));
    return;
  }
  if (!is_nice(reduced)) {
    if (g.edge_count() > 4) throw InvariantViolation("subcubic labelling: unexpected non-nice reduction");
    const auto outcome = solve(g, la, Mode::Product);
    if (!outcome.labelling) throw InvariantViolation("subcubic labelling: small base case has no labelling");
    lab.merge(*outcome.labelling);
    return;
  }
  label_components(reduced, la, lab);
  std::vector<Edge> free_edges;
  for (VertexId w : g.neighbours(v))
    if (w != u) free_edges.push_back(Edge::of(v, w));
  free_edges.push_back(Edge::of(u, v));
  search_or_fail(g, la, lab, free_edges, {}, "leaf with degree-3 neighbour");
}

void label_subcubic_into(const Graph& g, const ListAssignment& la, Labelling& lab) {
  if (g.min_degree() == 1) {
    std::optional<VertexId> chosen;
    for (VertexId x : g.vertices())
      if (g.degree(x) == 1 && g.degree(g.neighbours(x).front()) == 2) {
        chosen = x;
        break;
      }
    if (!chosen)
      for (VertexId x : g.vertices())
        if (g.degree(x) == 1) {
          chosen = x;
          break;
        }
    label_leaf_step(g, la, lab, *chosen);
    return;
  }
  if (g.min_degree() == 2) {
    if (g.edge_count() == 3) {
      lab.merge(label_cycle(g, la));
      return;
    }
    VertexId u = g.vertices().front();
    for (VertexId x : g.vertices())
      if (g.degree(x) == 2) {
        u = x;
        break;
      }
    const VertexId removed[] = {u};
    label_components(g.without_vertices(removed), la, lab);
    const std::vector<Edge> free_edges{Edge::of(u, g.neighbours(u)[0]), Edge::of(u, g.neighbours(u)[1])};
    search_or_fail(g, la, lab, free_edges, {}, "degree-2 vertex");
    return;
  }

  const auto cycle = smallest_induced_cycle(g);
  if (!cycle) throw InvariantViolation("subcubic labelling: cubic graph without a cycle");
  const std::size_t p = cycle->size();
  std::vector<Edge> cycle_edges;
  for (std::size_t i = 0; i < p; ++i) cycle_edges.push_back(Edge::of((*cycle)[i], (*cycle)[(i + 1) % p]));
  label_components(g.without_edges(cycle_edges), la, lab);

  // cycle edges plus the pendant edges at the cycle, previous pendant labels tried first
  std::vector<Edge> free_edges;
  std::vector<std::vector<Rational>> candidates;
  for (std::size_t i = 0; i < p; ++i) {
    const VertexId ui = (*cycle)[i];
    for (VertexId x : g.neighbours(ui)) {
      const Edge e = Edge::of(ui, x);
      if (std::find(cycle_edges.begin(), cycle_edges.end(), e) != cycle_edges.end()) continue;
      if (std::find(free_edges.begin(), free_edges.end(), e) != free_edges.end()) continue;
      const Rational previous = lab.at(e);
      lab.erase(e);
      std::vector<Rational> c{previous};
      for (const Rational& y : la.at(e))
        if (y != previous) c.push_back(y);
      free_edges.push_back(e);
      candidates.push_back(std::move(c));
    }
    free_edges.push_back(cycle_edges[i]);
    candidates.push_back(la.at(cycle_edges[i]));
  }
  search_or_fail(g, la, lab, free_edges, std::move(candidates), "induced cycle");
}

}  // namespace

Labelling label_subcubic(const Graph& g, const ListAssignment& la) {
  if (g.max_degree() > 3) throw PreconditionError("label_subcubic: maximum degree above 3");
  detail::require_nice(g, "label_subcubic");
  detail::require_lists(g, la, 4, "label_subcubic");
  Labelling lab;
  label_components(g, la, lab);
  detail::assert_proper(g, lab, la, "label_subcubic");
  return lab;
}

}  // namespace prodlab
