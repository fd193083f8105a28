#pragma once

#include <string>
#include <vector>

namespace prodlab {

/// A known upper bound on a list parameter for a graph class (nice, connected
/// graphs). `parameter` is "ch_sum" or "ch_prod_star".
struct BoundEntry {
  std::string graph_class;
  std::string parameter;
  std::string bound;
  std::string source;
};

/// Sum-list bounds from the literature and the product bounds 2k - 1 they
/// imply, in registry order.
const std::vector<BoundEntry>& bound_registry();

}  // namespace prodlab
