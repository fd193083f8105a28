#include "prodlab/graph_families.hpp"

#include "prodlab/errors.hpp"

namespace prodlab::families {

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back(Edge::of(int(i), int(i + 1)));
  if (n == 0) return Graph({0}, {});
  return Graph::from_edges(std::move(edges));
}

Graph cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back(Edge::of(int(i), int((i + 1) % n)));
  return Graph::from_edges(std::move(edges));
}

Graph complete(std::size_t n) {
  std::vector<VertexId> vs;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    vs.push_back(int(i));
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back(Edge::of(int(i), int(j)));
  }
  return Graph(std::move(vs), std::move(edges));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<VertexId> vs;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a + b; ++i) vs.push_back(int(i));
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = a; j < a + b; ++j) edges.push_back(Edge::of(int(i), int(j)));
  return Graph(std::move(vs), std::move(edges));
}

Graph star(std::size_t q) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= q; ++i) edges.push_back(Edge::of(0, int(i)));
  if (q == 0) return Graph({0}, {});
  return Graph::from_edges(std::move(edges));
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(Edge::of(i, (i + 1) % 5));
    edges.push_back(Edge::of(i, i + 5));
    edges.push_back(Edge::of(5 + i, 5 + (i + 2) % 5));
  }
  return Graph::from_edges(std::move(edges));
}

Graph prism() {
  return Graph::from_edges({Edge::of(0, 1), Edge::of(1, 2), Edge::of(0, 2), Edge::of(3, 4), Edge::of(4, 5),
                            Edge::of(3, 5), Edge::of(0, 3), Edge::of(1, 4), Edge::of(2, 5)});
}

}  // namespace prodlab::families
