#pragma once

#include "prodlab/graph.hpp"
#include "prodlab/labelling.hpp"
#include "prodlab/polynomial.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace prodlab {

/// Largest edge count accepted by the polynomial builders.
inline constexpr std::size_t kMaxPolynomialEdges = 16;

/// One arc (tail, head) per edge, parallel to g.edges().
struct Orientation {
  std::vector<std::pair<VertexId, VertexId>> arcs;
};

/// Every edge from its smaller to its larger endpoint.
Orientation default_orientation(const Graph& g);

/// Throws PreconditionError unless `o` orients each edge of `g` once, in order.
void check_orientation(const Graph& g, const Orientation& o);

/// Product over arcs (u, v) of (sum of x_e at u) - (sum of x_e at v);
/// variable i is edge i of g.edges().
SparsePolynomial build_sum_poly(const Graph& g, const Orientation& o, std::size_t term_cap = kDefaultTermCap);

/// Product over arcs (u, v) of (product of x_e at u) - (product of x_e at v).
SparsePolynomial build_product_poly(const Graph& g, const Orientation& o, std::size_t term_cap = kDefaultTermCap);

/// Row per arc, column per edge: the coefficient of x_j in the arc's linear
/// factor of the sum polynomial. Its permanent is the coefficient of
/// x_1 x_2 ... x_m.
std::vector<std::vector<BigInt>> sum_matrix(const Graph& g, const Orientation& o);

struct Certificate {
  Mode mode = Mode::Product;
  Exponents exponents;
  BigInt coefficient;
  /// 1 + largest exponent: lists of this size always admit a proper labelling.
  std::size_t bound = 0;
  /// The monomial has the polynomial's maximum total degree.
  bool max_degree = false;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Among monomials of maximum total degree whose exponents are all below k,
/// the lexicographically smallest one with nonzero coefficient; none when
/// there is no such monomial. Uses the default orientation.
std::optional<Certificate> certify(const Graph& g, Mode mode, std::size_t k, std::size_t term_cap = kDefaultTermCap);

}  // namespace prodlab
