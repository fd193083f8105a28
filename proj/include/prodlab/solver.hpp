#pragma once

#include "prodlab/graph.hpp"
#include "prodlab/labelling.hpp"
#include "prodlab/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace prodlab {

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 24;

struct SolveOutcome {
  std::optional<Labelling> labelling;
  std::uint64_t nodes_explored = 0;

  bool found() const { return labelling.has_value(); }
};

/// Complete backtracking search. Returns the first proper labelling in the
/// solver's edge order (labels tried in list order), or none when no proper
/// labelling exists. Throws RefusalError when more than `node_cap` partial
/// assignments would be explored.
SolveOutcome solve(const Graph& g, const ListAssignment& la, Mode mode, std::uint64_t node_cap = kDefaultCap);

/// Number of proper labellings via the same backtracking search.
std::uint64_t count_solutions(const Graph& g, const ListAssignment& la, Mode mode,
                              std::uint64_t node_cap = kDefaultCap);

/// Number of proper labellings by flat enumeration of the whole product of
/// lists. Independent of the backtracking code; refuses when the product of
/// list sizes exceeds `cap`.
std::uint64_t count_proper(const Graph& g, const ListAssignment& la, Mode mode, std::uint64_t cap = kDefaultCap);

struct WorstListVerdict {
  /// An assignment of k-subsets of the universe with no proper labelling.
  std::optional<ListAssignment> witness;
  std::uint64_t work = 0;

  bool feasible() const { return !witness.has_value(); }
};

inline constexpr std::uint64_t kDefaultWorstListCap = std::uint64_t{1} << 30;

/// Decides whether every assignment of k-subsets of `universe` to the edges
/// of `g` admits a proper labelling. Works edge by edge, tracking the set of
/// reachable frontier colourings; a choice of lists that empties that set is a
/// witness. Witnesses are re-checked with `solve`. Throws RefusalError when the
/// work counter passes `cap`.
WorstListVerdict worst_list_verdict(const Graph& g, std::vector<Rational> universe, std::size_t k, Mode mode,
                                    std::uint64_t cap = kDefaultWorstListCap);

}  // namespace prodlab
