#include "prodlab/certifier.hpp"

#include "prodlab/errors.hpp"

#include <algorithm>

namespace prodlab {

Orientation default_orientation(const Graph& g) {
  Orientation o;
  for (const Edge& e : g.edges()) o.arcs.emplace_back(e.u, e.v);
  return o;
}

void check_orientation(const Graph& g, const Orientation& o) {
  if (o.arcs.size() != g.edge_count()) throw PreconditionError("orientation does not cover every edge");
  for (std::size_t i = 0; i < o.arcs.size(); ++i) {
    const auto [a, b] = o.arcs[i];
    if (a == b || Edge::of(a, b) != g.edges()[i])
      throw PreconditionError("orientation arc " + std::to_string(i) + " does not match its edge");
  }
}

namespace {

void guard(const Graph& g) {
  if (g.edge_count() > kMaxPolynomialEdges)
    throw RefusalError("polynomial expansion refused: " + std::to_string(g.edge_count()) + " edges exceed the limit of " +
                       std::to_string(kMaxPolynomialEdges));
}

SparsePolynomial build(const Graph& g, const Orientation& o, std::size_t term_cap, Mode mode) {
  guard(g);
  check_orientation(g, o);
  const std::size_t m = g.edge_count();
  const auto side = [&](VertexId v) {
    SparsePolynomial p(m);
    if (mode == Mode::Sum) {
      for (std::size_t i : g.incident_edges(v)) {
        Exponents e(m, 0);
        e[i] = 1;
        p.add_term(e, 1);
      }
    } else {
      Exponents e(m, 0);
      for (std::size_t i : g.incident_edges(v)) e[i] = 1;
      p.add_term(e, 1);
    }
    return p;
  };
  SparsePolynomial result = SparsePolynomial::constant(m, 1);
  for (const auto& [tail, head] : o.arcs) result = result.multiply(side(tail) - side(head), term_cap);
  return result;
}

}  // namespace

SparsePolynomial build_sum_poly(const Graph& g, const Orientation& o, std::size_t term_cap) {
  return build(g, o, term_cap, Mode::Sum);
}

SparsePolynomial build_product_poly(const Graph& g, const Orientation& o, std::size_t term_cap) {
  return build(g, o, term_cap, Mode::Product);
}

std::vector<std::vector<BigInt>> sum_matrix(const Graph& g, const Orientation& o) {
  check_orientation(g, o);
  const std::size_t m = g.edge_count();
  std::vector<std::vector<BigInt>> mat(m, std::vector<BigInt>(m, 0));
  for (std::size_t r = 0; r < m; ++r) {
    const auto [tail, head] = o.arcs[r];
    for (std::size_t j : g.incident_edges(tail)) mat[r][j] += 1;
    for (std::size_t j : g.incident_edges(head)) mat[r][j] -= 1;
  }
  return mat;
}

std::optional<Certificate> certify(const Graph& g, Mode mode, std::size_t k, std::size_t term_cap) {
  if (k == 0) throw PreconditionError("certify: k must be positive");
  const Orientation o = default_orientation(g);
  const SparsePolynomial poly = mode == Mode::Sum ? build_sum_poly(g, o, term_cap) : build_product_poly(g, o, term_cap);
  const auto degree = poly.total_degree();
  if (!degree) return std::nullopt;
  // terms are ordered lexicographically by exponent vector
  for (const auto& [e, c] : poly.terms()) {
    if (total_degree_of(e) != *degree) continue;
    if (std::any_of(e.begin(), e.end(), [&](unsigned t) { return t >= k; })) continue;
    Certificate cert;
    cert.mode = mode;
    cert.exponents = e;
    cert.coefficient = c;
    cert.bound = 1 + *std::max_element(e.begin(), e.end());
    cert.max_degree = true;
    return cert;
  }
  return std::nullopt;
}

}  // namespace prodlab
