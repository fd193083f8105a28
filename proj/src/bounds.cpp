#include "prodlab/bounds.hpp"

namespace prodlab {

namespace {

struct SumBound {
  const char* graph_class;
  const char* sum_bound;
  const char* product_bound;
  const char* source;
};

constexpr SumBound kSumBounds[] = {
    {"any", "Delta+1", "2*Delta+1", "DDWWWYZ19"},
    {"complete, complete bipartite or tree", "3", "5", "BGN09"},
    {"2-degenerate non-bipartite", "3", "5", "WZ18"},
    {"wheel", "3", "5", "PY13"},
    {"mad <= 11/4", "3", "5", "LWZ18"},
    {"outerplanar", "4", "7", "PY13"},
    {"Delta <= 4", "4", "7", "LLM20"},
    {"2-connected chordal or line graph", "5", "9", "Won21"},
    {"planar", "7", "13", "WZ18"},
};

}  // namespace

const std::vector<BoundEntry>& bound_registry() {
  static const std::vector<BoundEntry> registry = [] {
    std::vector<BoundEntry> out;
    for (const auto& b : kSumBounds) {
      out.push_back({b.graph_class, "ch_sum", b.sum_bound, b.source});
      out.push_back({b.graph_class, "ch_prod_star", b.product_bound, std::string(b.source) + " via absolute values"});
    }
    return out;
  }();
  return registry;
}

}  // namespace prodlab
