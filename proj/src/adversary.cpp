#include "prodlab/adversary.hpp"

#include "prodlab/errors.hpp"
#include "prodlab/graph_families.hpp"
#include "prodlab/solver.hpp"

namespace prodlab {

namespace {

AdversaryWitness confirmed(Graph g, ListAssignment la, std::string claim) {
  if (solve(g, la, Mode::Product).found())
    throw InvariantViolation("adversary construction admits a proper labelling: " + claim);
  return {std::move(g), std::move(la), std::move(claim)};
}

bool is_unit(const Rational& a) { return a == 1 || a == -1; }

}  // namespace

AdversaryWitness all_ones(const Graph& g) {
  if (g.edge_count() == 0) throw PreconditionError("all_ones: graph has no edge");
  return confirmed(g, ListAssignment::uniform(g, {Rational(1)}), "ch*_prod > 1");
}

bool plus_minus_one_infeasible(const Graph& g) {
  for (const auto& comp : g.components()) {
    const Graph c = g.induced(comp);
    if (c.edge_count() == 0) continue;
    const auto parts = bipartition(c);
    if (!parts) return true;
    if (parts->a.size() % 2 == 1 && parts->b.size() % 2 == 1) return true;
  }
  return false;
}

std::optional<AdversaryWitness> plus_minus_one(const Graph& g) {
  auto la = ListAssignment::uniform(g, {Rational(-1), Rational(1)});
  if (plus_minus_one_infeasible(g)) return confirmed(g, std::move(la), "ch*_prod > 2");
  if (!solve(g, la, Mode::Product).found())
    throw InvariantViolation("plus_minus_one: bipartite graph with an even side has no labelling");
  return std::nullopt;
}

AdversaryWitness bad_tree8(const Rational& a) {
  if (a == 0 || is_unit(a)) throw PreconditionError("bad_tree8: a must lie outside {0, 1, -1}");
  const Graph g = Graph::from_edges({Edge::of(1, 2), Edge::of(2, 5), Edge::of(3, 4), Edge::of(4, 5), Edge::of(5, 6),
                                     Edge::of(6, 7), Edge::of(7, 8)});
  const Rational a2 = a * a;
  ListAssignment la = ListAssignment::uniform(g, {a, a2});
  la.set(Edge::of(2, 5), {1, a});
  la.set(Edge::of(4, 5), {1, a});
  la.set(Edge::of(6, 7), {1, a2});
  return confirmed(g, std::move(la), "ch*_prod > 2");
}

AdversaryWitness bad_path(std::size_t n, const Rational& a, const Rational& b) {
  if (n < 7 || n % 4 != 3) throw PreconditionError("bad_path: length must be at least 7 and 3 mod 4");
  if (a == 0 || is_unit(a)) throw PreconditionError("bad_path: a must lie outside {0, 1, -1}");
  if (b == 0 || b == 1 || b == a) throw PreconditionError("bad_path: b must lie outside {0, 1, a}");
  const Graph g = families::path(n);
  const auto edge = [](std::size_t i) { return Edge::of(static_cast<VertexId>(i - 1), static_cast<VertexId>(i)); };
  ListAssignment la = ListAssignment::uniform(g, {a, b});
  la.set(edge(2), {1, a});
  const std::size_t chain = (n - 1) / 2;
  la.set(edge(n - 1), chain % 2 == 1 ? std::vector<Rational>{1, b} : std::vector<Rational>{1, a});
  return confirmed(g, std::move(la), "ch*_prod > 2");
}

std::optional<AdversaryWitness> bad_odd_cycle(std::size_t n, const Rational& a, const Rational& b) {
  if (n < 3) throw PreconditionError("bad_odd_cycle: cycle length must be at least 3");
  if (a == 0 || b == 0 || a == b) throw PreconditionError("bad_odd_cycle: a and b must be distinct and nonzero");
  const Graph g = families::cycle(n);
  auto la = ListAssignment::uniform(g, {a, b});
  if (n % 4 != 0) return confirmed(g, std::move(la), "ch*_prod > 2");
  if (!solve(g, la, Mode::Product).found()) throw InvariantViolation("bad_odd_cycle: cycle length multiple of 4 infeasible");
  return std::nullopt;
}

}  // namespace prodlab
