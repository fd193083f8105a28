#include "prodlab/errors.hpp"
#include "prodlab/graph.hpp"
#include "prodlab/graph_families.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <numeric>

using namespace prodlab;

namespace {

std::vector<VertexId> ids(std::initializer_list<VertexId> xs) { return xs; }

// Union-find acyclicity, independent of the BFS girth code.
bool acyclic_by_union_find(const Graph& g) {
  std::vector<int> parent(g.id_bound());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    const int a = find(e.u), b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace

TEST_SUITE("graph-core") {
  TEST_CASE("parse_edge_list examples") {
    const Graph p = parse_edge_list(std::string_view("0 1\n1 2"));
    CHECK(p.edge_count() == 2);
    CHECK(p.vertices() == ids({0, 1, 2}));
    CHECK(p.has_edge(1, 0));
    CHECK_FALSE(p.has_edge(0, 2));

    const Graph t = parse_edge_list(std::string_view("0 1\n1 2\n2 0"));
    CHECK(t.edge_count() == 3);
    CHECK(girth(t) == 3u);

    CHECK_THROWS_AS(parse_edge_list(std::string_view("0 1\n0 1")), ParseError);
    try {
      parse_edge_list(std::string_view("0 1\n0 1"));
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_edge_list(std::string_view("3 3\n")), ParseError);
    CHECK_THROWS_AS(parse_edge_list(std::string_view("0 1\nfoo\n")), ParseError);
  }

  TEST_CASE("comments, blank lines and round trip") {
    const Graph g = parse_edge_list(std::string_view("# header\n\n2 5\n5 9\n# mid\n9 2\n"));
    CHECK(g.vertices() == ids({2, 5, 9}));
    CHECK(parse_edge_list(std::string_view(to_edge_list(g))) == g);
    const Graph pet = families::petersen();
    CHECK(parse_edge_list(std::string_view(to_edge_list(pet))) == pet);
  }

  TEST_CASE("is_nice examples") {
    CHECK_FALSE(is_nice(families::path(1)));
    CHECK(is_nice(families::path(2)));
    const Graph k2_c3 = Graph::from_edges({Edge::of(0, 1), Edge::of(2, 3), Edge::of(3, 4), Edge::of(2, 4)});
    CHECK_FALSE(is_nice(k2_c3));
    CHECK(is_nice(families::cycle(3)));
  }

  TEST_CASE("girth examples") {
    CHECK(girth(families::cycle(5)) == 5u);
    CHECK_FALSE(girth(families::star(4)).has_value());
    CHECK_FALSE(girth(families::path(7)).has_value());
    CHECK(girth(families::petersen()) == 5u);
    CHECK(girth(families::complete(4)) == 3u);
    CHECK(girth(families::complete_bipartite(3, 3)) == 4u);
    CHECK(girth(families::prism()) == 3u);
  }

  TEST_CASE("girth is infinite exactly for forests") {
    testsupport::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
      const Graph g = testsupport::random_nice_graph(rng, 10);
      CHECK(!girth(g).has_value() == acyclic_by_union_find(g));
      CHECK(is_forest(g) == acyclic_by_union_find(g));
    }
  }

  TEST_CASE("bipartition examples") {
    const auto c4 = bipartition(families::cycle(4));
    REQUIRE(c4);
    CHECK(c4->a == ids({0, 2}));
    CHECK(c4->b == ids({1, 3}));
    CHECK_FALSE(bipartition(families::cycle(3)));
    const auto p7 = bipartition(families::path(7));
    REQUIRE(p7);
    CHECK(p7->a.size() == 4);
    CHECK(p7->b.size() == 4);
  }

  TEST_CASE("bipartite iff no odd cycle on cycles") {
    for (std::size_t n = 3; n <= 12; ++n) CHECK(bipartition(families::cycle(n)).has_value() == (n % 2 == 0));
  }

  TEST_CASE("find_thread examples") {
    const auto t = find_thread(families::cycle(6), 3);
    REQUIRE(t);
    CHECK(t->interior.size() == 3);
    CHECK_FALSE(find_thread(families::complete(4), 1));
    for (std::size_t n = 5; n <= 12; ++n) CHECK(find_thread(families::cycle(n), 3));
  }

  TEST_CASE("find_thread returns valid threads") {
    // Theta: vertices 0 and 1 joined by paths of lengths 4, 5 and 6.
    std::vector<Edge> es;
    int next = 2;
    for (int len : {4, 5, 6}) {
      int prev = 0;
      for (int i = 1; i < len; ++i) {
        es.push_back(Edge::of(prev, next));
        prev = next++;
      }
      es.push_back(Edge::of(prev, 1));
    }
    const Graph g = Graph::from_edges(es);
    for (std::size_t len = 1; len <= 5; ++len) {
      const auto t = find_thread(g, len);
      REQUIRE(t);
      CHECK(t->interior.size() == len);
      CHECK(g.degree(t->u) >= 2);
      CHECK(g.degree(t->w) >= 2);
      VertexId prev = t->u;
      for (VertexId v : t->interior) {
        CHECK(g.degree(v) == 2);
        CHECK(g.has_edge(prev, v));
        prev = v;
      }
      CHECK(g.has_edge(prev, t->w));
    }
    CHECK_FALSE(find_thread(g, 6));
  }

  TEST_CASE("tree_structure examples") {
    const auto star = tree_structure(families::star(3), 0);
    CHECK(star.deepest_branching == 0);
    CHECK(star.pending_leaves == ids({1, 2, 3}));
    CHECK(star.pending_two_paths.empty());

    const auto path = tree_structure(families::path(5), 0);
    CHECK_FALSE(path.deepest_branching);

    // Spider: center 0, legs 0-1, 0-2-3, 0-4-5-6.
    const Graph spider = Graph::from_edges(
        {Edge::of(0, 1), Edge::of(0, 2), Edge::of(2, 3), Edge::of(0, 4), Edge::of(4, 5), Edge::of(5, 6)});
    const auto s = tree_structure(spider, 0);
    REQUIRE(s.long_pending_path);
    CHECK(s.long_pending_path->leaf == 6);
    CHECK(s.long_pending_path->near_leaf == 5);
    CHECK(s.long_pending_path->middle == 4);
    CHECK(s.long_pending_path->attach == 0);

    CHECK_THROWS_AS(tree_structure(families::cycle(4), 0), PreconditionError);
  }

  TEST_CASE("deepest branching vertex has only path descendants") {
    testsupport::Rng rng(5);
    for (int i = 0; i < 200; ++i) {
      const Graph t = testsupport::random_tree(rng, 3 + i % 30);
      const auto s = tree_structure(t, 0);
      if (!s.deepest_branching) {
        CHECK(t.max_degree() <= 2);
        continue;
      }
      for (VertexId v : t.vertices()) {
        VertexId x = v;
        bool below = false;
        while (s.parent[x]) {
          x = *s.parent[x];
          if (x == *s.deepest_branching) below = true;
        }
        if (below) CHECK(t.degree(v) <= 2);
      }
    }
  }

  TEST_CASE("smallest induced cycle") {
    const auto c = smallest_induced_cycle(families::petersen());
    REQUIRE(c);
    CHECK(c->size() == 5);
    CHECK(c->front() == 0);
    CHECK_FALSE(smallest_induced_cycle(families::path(4)));
    const auto k33 = smallest_induced_cycle(families::complete_bipartite(3, 3));
    REQUIRE(k33);
    CHECK(k33->size() == 4);
  }

  TEST_CASE("graph invariants") {
    CHECK_THROWS_AS(Edge::of(2, 2), PreconditionError);
    CHECK_THROWS_AS(Graph::from_edges({Edge::of(0, 1), Edge::of(1, 0)}), PreconditionError);
    CHECK_THROWS_AS(Graph({0, 1}, {Edge::of(0, 2)}), PreconditionError);
    const Graph g = families::petersen();
    for (VertexId v : g.vertices())
      for (VertexId w : g.neighbours(v)) CHECK(g.has_edge(w, v));
    CHECK(g.components().size() == 1);
    CHECK(g.without_vertices(ids({0})).edge_count() == 12);
  }

  TEST_CASE("edge keys") {
    CHECK(edge_key(Edge::of(5, 2)) == "2-5");
    CHECK(parse_edge_key("2-5") == Edge::of(2, 5));
    CHECK_THROWS(parse_edge_key("2_5"));
  }
}
