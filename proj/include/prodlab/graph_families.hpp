#pragma once

#include "prodlab/graph.hpp"

namespace prodlab::families {

/// Path with n edges on vertices 0..n.
Graph path(std::size_t n);
/// Cycle with n >= 3 edges on vertices 0..n-1.
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
/// Parts 0..a-1 and a..a+b-1.
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Center 0, leaves 1..q.
Graph star(std::size_t q);
Graph petersen();
/// Triangular prism (C_3 x K_2).
Graph prism();

}  // namespace prodlab::families
