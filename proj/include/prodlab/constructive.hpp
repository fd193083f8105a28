#pragma once

#include "prodlab/graph.hpp"
#include "prodlab/labelling.hpp"
#include "prodlab/rational.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace prodlab {

// Every labeller below returns a product-proper labelling drawn from the
// lists, re-checked before returning. A failed re-check throws
// InvariantViolation; inputs outside the documented domain throw
// PreconditionError. Lists must be zero-free.

/// Path of length n >= 2. Needs lists of size 2 when n is even or n = 3,
/// size 3 otherwise.
Labelling label_path(const Graph& path, const ListAssignment& la);

/// Cycle of length n >= 3. Needs lists of size 2 when n is a multiple of 4,
/// size 3 otherwise.
Labelling label_cycle(const Graph& cycle, const ListAssignment& la);

/// A labelled edge from the star center to a vertex whose product is fixed.
struct StarAnchor {
  Rational label;
  Rational product;
};

/// Center u with anchors (at most one for 3-lists, up to two for 4-lists),
/// the product of any further labelled edges at u, and the lists of the
/// edges to the leaves w_1..w_q.
struct StarExtensionProblem {
  std::vector<StarAnchor> anchors;
  Rational extra_factor = 1;
  std::vector<std::vector<Rational>> leaf_lists;
};

/// Labels for the leaf edges, in order, such that the center's product
/// avoids every anchor product and every leaf product. A single leaf needs the
/// fixed part of the center's product (anchor labels times extra_factor) to
/// differ from 1.
std::vector<Rational> extend_star(const StarExtensionProblem& problem);

/// Nice tree, lists of size >= 3.
Labelling label_tree(const Graph& tree, const ListAssignment& la);

/// Labels `g` from positive lists so that adjacent vertices get distinct
/// products; returns nothing when it cannot.
using AbsoluteValueLabeller = std::function<std::optional<Labelling>(const Graph&, const ListAssignment&)>;

/// The exact solver used as an absolute-value labeller.
AbsoluteValueLabeller exact_absolute_labeller();

/// Lists of size >= 2k-1: keeps k labels of pairwise distinct absolute value
/// per edge, labels their absolute values with `inner` and lifts the result
/// back to signed labels.
Labelling product_from_sum(const Graph& g, const ListAssignment& la, std::size_t k,
                           const AbsoluteValueLabeller& inner);

/// Extends a proper labelling `sub` of g - u to g. Needs d(u) >= 2, N(u)
/// independent and |L(uv)| >= d(v) + 2 for every neighbour v (implied by
/// lists of size max degree of g - u, plus 3).
Labelling label_removal_extend(const Graph& g, VertexId u, const ListAssignment& la, const Labelling& sub);

/// Nice graph of girth >= 16, assumed planar; lists of size >= 4.
Labelling label_planar_girth16(const Graph& g, const ListAssignment& la);

/// Nice graph of maximum degree <= 3; lists of size >= 4.
Labelling label_subcubic(const Graph& g, const ListAssignment& la);

}  // namespace prodlab
