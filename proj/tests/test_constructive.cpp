#include "prodlab/adversary.hpp"
#include "prodlab/constructive.hpp"
#include "prodlab/errors.hpp"
#include "prodlab/graph_families.hpp"
#include "prodlab/solver.hpp"

#include "support/generators.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace prodlab;

namespace {

using testsupport::random_lists;
using testsupport::Rng;

void check_labelling(const Graph& g, const ListAssignment& la, const Labelling& lab) {
  REQUIRE(lab.total_on(g));
  CHECK_FALSE(first_list_violation(g, lab, la));
  CHECK(check_proper(g, lab, Mode::Product).empty());
}

ListAssignment lists_of(const Graph& g, std::vector<std::vector<Rational>> per_edge) {
  ListAssignment la;
  for (std::size_t i = 0; i < g.edge_count(); ++i) la.set(g.edges()[i], per_edge[i]);
  return la;
}

Labelling path_labels(std::vector<Rational> labels) {
  Labelling lab;
  for (std::size_t i = 0; i < labels.size(); ++i) lab.set(Edge::of(int(i), int(i + 1)), labels[i]);
  return lab;
}

// The center's product avoids every forbidden product and every leaf product.
bool star_ok(const StarExtensionProblem& p, const std::vector<Rational>& labels) {
  if (labels.size() != p.leaf_lists.size()) return false;
  Rational center = p.extra_factor;
  for (const auto& a : p.anchors) center *= a.label;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (std::find(p.leaf_lists[i].begin(), p.leaf_lists[i].end(), labels[i]) == p.leaf_lists[i].end()) return false;
    center *= labels[i];
  }
  for (const auto& a : p.anchors)
    if (center == a.product) return false;
  for (const Rational& x : labels)
    if (center == x) return false;
  return true;
}

Graph theta(std::initializer_list<int> lengths) {
  std::vector<Edge> es;
  int next = 2;
  for (int len : lengths) {
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      es.push_back(Edge::of(prev, next));
      prev = next++;
    }
    es.push_back(Edge::of(prev, 1));
  }
  return Graph::from_edges(es);
}

}  // namespace

TEST_SUITE("constructive") {
  TEST_CASE("label_path examples") {
    const Graph p2 = families::path(2);
    const auto la = lists_of(p2, {{1, 2}, {1, 3}});
    const auto lab = label_path(p2, la);
    CHECK(lab == path_labels({2, 3}));
    check_labelling(p2, la, lab);

    Rng rng(1);
    const Graph p4 = families::path(4);
    for (int i = 0; i < 50; ++i) {
      const auto l4 = random_lists(rng, p4, 2, 3, false, false);
      check_labelling(p4, l4, label_path(p4, l4));
    }
    const Graph p5 = families::path(5);
    const auto l5 = ListAssignment::uniform(p5, {1, 2, 3});
    check_labelling(p5, l5, label_path(p5, l5));
    CHECK_THROWS_AS(label_path(p5, ListAssignment::uniform(p5, {1, 2})), PreconditionError);
  }

  TEST_CASE("label_path on random lists") {
    Rng rng(2);
    for (int i = 0; i < 300; ++i) {
      const std::size_t n = 2 + i % 14;
      const Graph g = families::path(n);
      const std::size_t k = (n % 2 == 0 || n == 3) ? 2 : 3;
      const auto la = random_lists(rng, g, k);
      check_labelling(g, la, label_path(g, la));
    }
  }

  TEST_CASE("label_cycle examples") {
    const Graph c8 = families::cycle(8);
    const auto l8 = ListAssignment::uniform(c8, {1, 2});
    check_labelling(c8, l8, label_cycle(c8, l8));
    const Graph c5 = families::cycle(5);
    const auto l5 = ListAssignment::uniform(c5, {1, 2, 3});
    check_labelling(c5, l5, label_cycle(c5, l5));
    CHECK_THROWS_AS(label_cycle(c5, ListAssignment::uniform(c5, {1, 2})), PreconditionError);
    const Graph c4 = families::cycle(4);
    const auto l4 = lists_of(c4, {{1, 2}, {3, 4}, {1, 2}, {3, 4}});
    check_labelling(c4, l4, label_cycle(c4, l4));
    CHECK(solve(c4, l4, Mode::Product).found());
  }

  TEST_CASE("label_cycle on random lists") {
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
      const std::size_t n = 3 + i % 14;
      const Graph g = families::cycle(n);
      const auto la = random_lists(rng, g, n % 4 == 0 ? 2 : 3);
      check_labelling(g, la, label_cycle(g, la));
    }
  }

  TEST_CASE("cycle properness is the distance-2 rule") {
    for (std::size_t n = 4; n <= 8; ++n) {
      const Graph g = families::cycle(n);
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        Labelling lab;
        std::vector<int> label(n);
        for (std::size_t i = 0; i < n; ++i) {
          label[i] = (mask >> i) & 1u ? 2 : 3;
          lab.set(Edge::of(int(i), int((i + 1) % n)), label[i]);
        }
        bool rule = true;
        for (std::size_t i = 0; i < n; ++i) rule = rule && label[(i + n - 1) % n] != label[(i + 1) % n];
        CHECK(check_proper(g, lab, Mode::Product).empty() == rule);
      }
    }
  }

  TEST_CASE("extend_star examples") {
    StarExtensionProblem p1;
    p1.anchors = {{1, 7}};
    p1.leaf_lists = {{1, 2, 3}, {1, 2, 3}};
    const auto l1 = extend_star(p1);
    CHECK(star_ok(p1, l1));

    StarExtensionProblem p2;
    p2.anchors = {{1, 5}};
    p2.leaf_lists = {{1, 2, 4}, {1, 2, 4}, {1, 2, 4}};
    CHECK(star_ok(p2, extend_star(p2)));

    StarExtensionProblem p3;
    p3.anchors = {{1, -1}};
    p3.leaf_lists = {{2, 3, -3}, {2, 3, -3}, {2, 3, -3}};
    CHECK(star_ok(p3, extend_star(p3)));
  }

  TEST_CASE("extend_star on random problems") {
    Rng rng(4);
    for (int i = 0; i < 2000; ++i) {
      StarExtensionProblem p;
      const bool two = i % 3 == 0;
      const std::size_t q = (two ? 1 : 2) + i % 5;
      const auto small = [&] { return testsupport::random_list(rng, 1, 3, true, i % 2).front(); };
      p.anchors.push_back({small(), small()});
      if (two) p.anchors.push_back({small(), small()});
      if (i % 4 == 0) p.extra_factor = small();
      for (std::size_t j = 0; j < q; ++j) p.leaf_lists.push_back(testsupport::random_list(rng, two ? 4 : 3, 3, true, false));
      Rational base = p.extra_factor;
      for (const auto& a : p.anchors) base *= a.label;
      if (q == 1 && base == 1) CHECK_THROWS_AS(extend_star(p), PreconditionError);
      else CHECK(star_ok(p, extend_star(p)));
    }
  }

  TEST_CASE("extend_star preconditions") {
    StarExtensionProblem p;
    p.anchors = {{1, 2}, {1, 3}};
    p.leaf_lists = {{1, 2, 3}};
    CHECK_THROWS_AS(extend_star(p), PreconditionError);
    p.leaf_lists = {{0, 1, 2, 3}};
    CHECK_THROWS_AS(extend_star(p), PreconditionError);
    p.leaf_lists = {{1, 2, 3, 4}};
    CHECK_THROWS_AS(extend_star(p), PreconditionError);
    p.anchors = {{2, 2}, {1, 3}};
    CHECK(star_ok(p, extend_star(p)));
  }

  TEST_CASE("label_tree examples") {
    const Graph k13 = families::star(3);
    const auto la = ListAssignment::uniform(k13, {1, 2, 3});
    check_labelling(k13, la, label_tree(k13, la));
    const Graph p5 = families::path(5);
    const auto l5 = ListAssignment::uniform(p5, {1, 2, 3});
    check_labelling(p5, l5, label_tree(p5, l5));
    const auto w = bad_tree8(2);
    const auto l8 = ListAssignment::uniform(w.graph, {1, 2, 3});
    check_labelling(w.graph, l8, label_tree(w.graph, l8));
    CHECK_THROWS_AS(label_tree(families::cycle(4), ListAssignment::uniform(families::cycle(4), {1, 2, 3})),
                    PreconditionError);
    CHECK_THROWS_AS(label_tree(families::path(1), ListAssignment::uniform(families::path(1), {1, 2, 3})),
                    PreconditionError);
  }

  TEST_CASE("label_tree on random trees, hard lists") {
    Rng rng(5);
    const std::vector<std::vector<Rational>> hard{{2, 3, -3}, {1, -1, 2}, {1, 2, 4}, {-2, 2, Rational(1, 2)}};
    for (int i = 0; i < 400; ++i) {
      const Graph t = testsupport::random_tree(rng, 2 + i % 30);
      ListAssignment la;
      for (const Edge& e : t.edges()) la.set(e, i % 2 ? hard[rng() % hard.size()] : testsupport::random_list(rng, 3));
      check_labelling(t, la, label_tree(t, la));
    }
  }

  TEST_CASE("product_from_sum examples") {
    const Graph p2 = families::path(2);
    const auto la = ListAssignment::uniform(p2, {1, 2, -2});
    const auto lab = product_from_sum(p2, la, 2, exact_absolute_labeller());
    check_labelling(p2, la, lab);
    CHECK(abs(lab.at(Edge::of(0, 1))) == 2);
    CHECK(abs(lab.at(Edge::of(1, 2))) == 2);

    const Graph s = families::star(4);
    const auto ls = ListAssignment::uniform(s, {1, 2, -2});
    check_labelling(s, ls, product_from_sum(s, ls, 2, exact_absolute_labeller()));

    Rng rng(6);
    for (int i = 0; i < 50; ++i) {
      const Graph t = testsupport::random_tree(rng, 2 + i % 8);
      const auto lt = random_lists(rng, t, 5);
      check_labelling(t, lt, product_from_sum(t, lt, 3, exact_absolute_labeller()));
    }
  }

  TEST_CASE("product_from_sum errors") {
    const Graph p2 = families::path(2);
    const auto la = ListAssignment::uniform(p2, {1, 2, -2});
    const AbsoluteValueLabeller failing = [](const Graph&, const ListAssignment&) -> std::optional<Labelling> {
      return std::nullopt;
    };
    CHECK_THROWS_AS(product_from_sum(p2, la, 2, failing), Error);
    CHECK_THROWS_AS(product_from_sum(p2, ListAssignment::uniform(p2, {1, 2}), 2, exact_absolute_labeller()),
                    PreconditionError);
  }

  TEST_CASE("label_removal_extend examples") {
    // C_5 minus vertex 0 is the path 1-2-3-4.
    const Graph c5 = families::cycle(5);
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
      const auto la = random_lists(rng, c5, 4);
      const std::vector<VertexId> removed{0};
      const Graph rest = c5.without_vertices(removed);
      const auto sub = solve(rest, la, Mode::Product);
      REQUIRE(sub.found());
      check_labelling(c5, la, label_removal_extend(c5, 0, la, *sub.labelling));
    }
    const Graph k13 = families::star(3);
    const auto l13 = ListAssignment::uniform(k13, {1, 2, 3});
    check_labelling(k13, l13, label_removal_extend(k13, 0, l13, Labelling{}));
    const Graph c6 = families::cycle(6);
    for (int i = 0; i < 50; ++i) {
      const auto la = random_lists(rng, c6, 5);
      const std::vector<VertexId> removed{3};
      const Graph rest = c6.without_vertices(removed);
      const auto sub = solve(rest, la, Mode::Product);
      REQUIRE(sub.found());
      check_labelling(c6, la, label_removal_extend(c6, 3, la, *sub.labelling));
    }
    const Graph c3 = families::cycle(3);
    CHECK_THROWS_AS(label_removal_extend(c3, 0, ListAssignment::uniform(c3, {1, 2, 3, 4, 5}), Labelling{}),
                    PreconditionError);
  }

  TEST_CASE("label_planar_girth16 examples") {
    Rng rng(8);
    const Graph c16 = families::cycle(16);
    const auto l16 = random_lists(rng, c16, 4);
    check_labelling(c16, l16, label_planar_girth16(c16, l16));
    const Graph th = theta({8, 8, 9});
    const auto lt = random_lists(rng, th, 4, 4, false, false);
    check_labelling(th, lt, label_planar_girth16(th, lt));
    const Graph t = testsupport::random_tree(rng, 20);
    if (is_nice(t)) {
      const auto ltree = random_lists(rng, t, 4);
      check_labelling(t, ltree, label_planar_girth16(t, ltree));
    }
    const Graph c12 = families::cycle(12);
    CHECK_THROWS_AS(label_planar_girth16(c12, random_lists(rng, c12, 4)), PreconditionError);
  }

  TEST_CASE("label_planar_girth16 on generated graphs") {
    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
      const Graph g = testsupport::random_planar_girth16(rng);
      REQUIRE(girth(g).value_or(99) >= 16);
      const auto la = random_lists(rng, g, 4, i % 2 ? 3 : 6);
      check_labelling(g, la, label_planar_girth16(g, la));
    }
  }

  TEST_CASE("label_subcubic examples") {
    Rng rng(10);
    const Graph k4 = families::complete(4);
    const auto l4 = ListAssignment::uniform(k4, {1, 2, 3, 4});
    check_labelling(k4, l4, label_subcubic(k4, l4));
    const Graph pet = families::petersen();
    for (int i = 0; i < 20; ++i) {
      const auto la = random_lists(rng, pet, 4);
      check_labelling(pet, la, label_subcubic(pet, la));
    }
    const Graph p3 = families::path(3);
    const auto lp = random_lists(rng, p3, 4);
    check_labelling(p3, lp, label_subcubic(p3, lp));
    const Graph k14 = families::star(4);
    CHECK_THROWS_AS(label_subcubic(k14, random_lists(rng, k14, 4)), PreconditionError);
  }

  TEST_CASE("label_subcubic on random graphs") {
    Rng rng(11);
    const std::vector<std::vector<Rational>> hard{{1, -1, 2, -2}, {1, -1, 2, 3}, {2, -2, 4, Rational(1, 2)}};
    for (int i = 0; i < 150; ++i) {
      const Graph g = testsupport::random_subcubic(rng, 14);
      ListAssignment la;
      for (const Edge& e : g.edges()) la.set(e, i % 2 ? hard[rng() % hard.size()] : testsupport::random_list(rng, 4));
      check_labelling(g, la, label_subcubic(g, la));
    }
    for (const Graph& g : {families::complete_bipartite(3, 3), families::prism()}) {
      for (int i = 0; i < 30; ++i) {
        const auto la = random_lists(rng, g, 4, 3);
        check_labelling(g, la, label_subcubic(g, la));
      }
    }
  }
}
