#pragma once

#include "prodlab/constructive.hpp"
#include "prodlab/errors.hpp"

#include <functional>
#include <span>
#include <string>

namespace prodlab::detail {

/// Product of the labelled edges at v (edges of `g` only).
Rational partial_product(const Graph& g, const Labelling& lab, VertexId v);

/// -1, 0 or 1.
int sign_of(const Rational& x);

/// First label of `list` accepted by `ok`; throws InvariantViolation naming
/// `step` when there is none.
const Rational& first_label(const std::vector<Rational>& list, const std::function<bool(const Rational&)>& ok,
                            const std::string& step);

/// Common entry checks: zero-free lists covering g, min list size.
void require_lists(const Graph& g, const ListAssignment& la, std::size_t min_size, const std::string& who);
void require_nice(const Graph& g, const std::string& who);

/// Re-checks properness and list membership; throws InvariantViolation.
void assert_proper(const Graph& g, const Labelling& lab, const ListAssignment& la, const std::string& who);

/// Vertex sequence of a path graph from its smaller end.
std::vector<VertexId> path_sequence(const Graph& path);
/// Vertex sequence of a cycle from its smallest vertex towards the smaller
/// neighbour.
std::vector<VertexId> cycle_sequence(const Graph& cycle);

bool is_path_graph(const Graph& g);
bool is_cycle_graph(const Graph& g);

/// Backtracking over `free_edges` (in order) with per-edge candidates,
/// keeping the labels already in `lab`. Every edge of `g` at a vertex touched
/// by a free edge is checked once both ends are fully labelled. On success the
/// labels are written to `lab`.
bool extend_by_search(const Graph& g, Labelling& lab, std::span<const Edge> free_edges,
                      const std::vector<std::vector<Rational>>& candidates);

/// Pending paths hanging from `center`: (b, b') pairs of length 2 and leaves.
struct PendingStar {
  VertexId center = 0;
  std::vector<std::pair<VertexId, VertexId>> two_paths;
  std::vector<VertexId> leaves;
};

/// Labels the edges of `star` in `g`; every other edge at the center is
/// labelled already and its far end acts as an anchor whose current product
/// the center must avoid. Uses the 3-list or the 4-list star argument
/// depending on the anchor count.
void extend_pending_star(const Graph& g, const ListAssignment& la, Labelling& lab, const PendingStar& star);

/// Labels the two outer edges of a pending path once the rest is labelled.
void extend_long_pending_path(const Graph& g, const ListAssignment& la, Labelling& lab, const LongPendingPath& p);

/// Tree labelling written into `lab`; no entry checks.
void label_tree_into(const Graph& t, const ListAssignment& la, Labelling& lab);

/// Degree-1 vertices removed repeatedly; the remaining vertices.
std::vector<VertexId> two_core(const Graph& g);

}  // namespace prodlab::detail
