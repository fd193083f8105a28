#include "common.hpp"
#include "prodlab/solver.hpp"

#include <array>
#include <map>

namespace prodlab {

using detail::partial_product;

AbsoluteValueLabeller exact_absolute_labeller() {
  return [](const Graph& g, const ListAssignment& la) { return solve(g, la, Mode::Product).labelling; };
}

Labelling product_from_sum(const Graph& g, const ListAssignment& la, std::size_t k,
                           const AbsoluteValueLabeller& inner) {
  if (k == 0) throw PreconditionError("product_from_sum: k must be positive");
  if (!inner) throw PreconditionError("product_from_sum: no inner labeller");
  detail::require_lists(g, la, 2 * k - 1, "product_from_sum");

  std::map<Edge, std::vector<Rational>> kept;
  ListAssignment magnitudes;
  for (const Edge& e : g.edges()) {
    std::vector<Rational> s, abs_values;
    for (const Rational& x : la.at(e)) {
      if (s.size() == k) break;
      bool fresh = true;
      for (const Rational& y : abs_values) fresh = fresh && y != abs(x);
      if (!fresh) continue;
      s.push_back(x);
      abs_values.push_back(abs(x));
    }
    if (s.size() < k) throw InvariantViolation("product_from_sum: fewer than k distinct absolute values");
    kept[e] = s;
    magnitudes.set(e, abs_values);
  }

  const auto inner_result = inner(g, magnitudes);
  if (!inner_result) throw Error("product_from_sum: inner labeller found no labelling");
  const Labelling chosen = inner_result->restricted_to(g);
  if (!chosen.total_on(g) || first_list_violation(g, chosen, magnitudes) ||
      !check_proper(g, chosen, Mode::Product).empty())
    throw Error("product_from_sum: inner labeller returned an invalid labelling");

  Labelling lab;
  for (const Edge& e : g.edges()) {
    for (const Rational& x : kept[e])
      if (abs(x) == chosen.at(e)) lab.set(e, x);
  }
  for (VertexId v : g.vertices())
    if (abs(vertex_product(g, lab, v)) != vertex_product(g, chosen, v))
      throw InvariantViolation("product_from_sum: lifted product magnitude mismatch");
  detail::assert_proper(g, lab, la, "product_from_sum");
  return lab;
}

Labelling label_removal_extend(const Graph& g, VertexId u, const ListAssignment& la, const Labelling& sub) {
  if (!g.has_vertex(u)) throw PreconditionError("label_removal_extend: vertex not in graph");
  const auto nbrs = g.neighbours(u);
  if (nbrs.size() < 2) throw PreconditionError("label_removal_extend: vertex degree below 2");
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (g.has_edge(nbrs[i], nbrs[j])) throw PreconditionError("label_removal_extend: neighbourhood is not stable");
  const VertexId removed[] = {u};
  const Graph rest = g.without_vertices(removed);
  detail::require_lists(g, la, 1, "label_removal_extend");
  for (VertexId v : nbrs)
    if (la.at(Edge::of(u, v)).size() < rest.degree(v) + 3)
      throw PreconditionError("label_removal_extend: list of edge " + edge_key(Edge::of(u, v)) +
                              " is shorter than the neighbour's remaining degree plus 3");
  Labelling lab = sub.restricted_to(rest);
  if (!lab.total_on(rest) || first_list_violation(rest, lab, la) || !check_proper(rest, lab, Mode::Product).empty())
    throw PreconditionError("label_removal_extend: sub is not a proper list labelling of the remainder");

  const std::size_t d = nbrs.size();
  if (d > 40) throw RefusalError("label_removal_extend: degree too large for the 2^d search");
  std::vector<Rational> base(d);
  std::vector<std::array<Rational, 2>> pairs(d);
  for (std::size_t i = 0; i < d; ++i) {
    const VertexId v = nbrs[i];
    base[i] = partial_product(rest, lab, v);
    std::vector<Rational> safe;
    for (const Rational& x : la.at(Edge::of(u, v))) {
      bool ok = true;
      for (VertexId w : rest.neighbours(v)) ok = ok && base[i] * x != partial_product(rest, lab, w);
      if (ok) safe.push_back(x);
    }
    if (safe.empty()) throw InvariantViolation("label_removal_extend: empty safe set");
    const Rational a = safe.front();
    const Rational* b = nullptr;
    for (const Rational& x : safe)
      if (abs(x) != abs(a)) {
        b = &x;
        break;
      }
    if (!b) throw InvariantViolation("label_removal_extend: safe set lacks two absolute values");
    pairs[i] = {a, *b};
  }
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    Rational center = 1;
    std::vector<Rational> xs(d);
    for (std::size_t i = 0; i < d; ++i) {
      xs[i] = pairs[i][(mask >> (d - 1 - i)) & 1];
      center *= xs[i];
    }
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) ok = center != base[i] * xs[i];
    if (!ok) continue;
    for (std::size_t i = 0; i < d; ++i) lab.set(Edge::of(u, nbrs[i]), xs[i]);
    detail::assert_proper(g, lab, la, "label_removal_extend");
    return lab;
  }
  throw InvariantViolation("label_removal_extend: all 2^d combinations conflict");
}

}  // namespace prodlab
