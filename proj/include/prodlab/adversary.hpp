#pragma once

#include "prodlab/graph.hpp"
#include "prodlab/labelling.hpp"
#include "prodlab/rational.hpp"

#include <optional>
#include <string>

namespace prodlab {

/// A graph with zero-free lists admitting no product-proper labelling,
/// confirmed by the exact solver when built.
struct AdversaryWitness {
  Graph graph;
  ListAssignment lists;
  std::string claim;
};

/// Every list {1}. Needs at least one edge.
AdversaryWitness all_ones(const Graph& g);

/// True when some component with an edge is non-bipartite, or bipartite with
/// both sides of odd size: exactly the graphs with no labelling from {-1, 1}.
bool plus_minus_one_infeasible(const Graph& g);

/// Every list {-1, 1}; a witness exactly when `plus_minus_one_infeasible`.
/// The solver confirms the outcome either way.
std::optional<AdversaryWitness> plus_minus_one(const Graph& g);

/// The 8-vertex tree on v1..v8 (ids 1..8) with edges v1v2, v2v5, v3v4, v4v5,
/// v5v6, v6v7, v7v8, lists {1, a} on v2v5 and v4v5, {1, a^2} on v6v7 and
/// {a, a^2} elsewhere. Needs a outside {0, 1, -1}.
AdversaryWitness bad_tree8(const Rational& a);

/// Path of length n (vertices 0..n, edge e_i = (i-1, i)) with n >= 7 and
/// n = 3 mod 4: {1, a} on e_2, {a, b} on the even edges inside, {1, b} on
/// e_{n-1} and {a, b} on odd edges.
AdversaryWitness bad_path(std::size_t n, const Rational& a, const Rational& b);

/// The cycle C_n with every list {a, b}; a witness exactly when n is not a
/// multiple of 4.
std::optional<AdversaryWitness> bad_odd_cycle(std::size_t n, const Rational& a, const Rational& b);

}  // namespace prodlab
