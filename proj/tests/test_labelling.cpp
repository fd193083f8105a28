#include "prodlab/errors.hpp"
#include "prodlab/graph_families.hpp"
#include "prodlab/labelling.hpp"
#include "prodlab/solver.hpp"

#include "support/generators.hpp"

#include <doctest.h>

using namespace prodlab;

namespace {

Labelling on_path(std::vector<Rational> labels) {
  Labelling lab;
  for (std::size_t i = 0; i < labels.size(); ++i) lab.set(Edge::of(int(i), int(i + 1)), labels[i]);
  return lab;
}

Labelling star_labels() {
  Labelling lab;
  lab.set(Edge::of(0, 1), Rational(1, 2));
  lab.set(Edge::of(0, 2), 4);
  lab.set(Edge::of(0, 3), -3);
  return lab;
}

}  // namespace

TEST_SUITE("labelling-core") {
  TEST_CASE("rationals") {
    CHECK(parse_rational("-1/2") == Rational(-1, 2));
    CHECK(parse_rational("+4/6") == Rational(2, 3));
    CHECK(parse_rational("3") == 3);
    CHECK(format_rational(Rational(-2, 4)) == "-1/2");
    CHECK(format_rational(Rational(7)) == "7");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK(label_less(Rational(-1, 2), Rational(-1, 3)));
    CHECK(label_less(Rational(1), Rational(2)));
    std::vector<Rational> xs{3, 1, Rational(1, 2), 3, -2};
    normalize_labels(xs);
    CHECK(xs == std::vector<Rational>{-2, 1, Rational(1, 2), 3});
  }

  TEST_CASE("vertex_product examples") {
    CHECK(vertex_product(families::path(2), on_path({2, 3}), 1) == 6);
    CHECK(vertex_product(Graph({0}, {}), Labelling{}, 0) == 1);
    CHECK(vertex_product(families::star(3), star_labels(), 0) == -6);
  }

  TEST_CASE("vertex_sum examples") {
    CHECK(vertex_sum(families::path(2), on_path({2, 3}), 1) == 5);
    CHECK(vertex_sum(Graph({0}, {}), Labelling{}, 0) == 0);
    CHECK(vertex_sum(families::star(3), star_labels(), 0) == Rational(3, 2));
  }

  TEST_CASE("check_proper examples") {
    const Graph p2 = families::path(2);
    CHECK(check_proper(p2, on_path({2, 3}), Mode::Product).empty());
    CHECK(check_proper(p2, on_path({1, 5}), Mode::Product) == std::vector<Edge>{Edge::of(1, 2)});
    const Graph c4 = families::cycle(4);
    Labelling lab;
    lab.set(Edge::of(0, 1), 1);
    lab.set(Edge::of(1, 2), 1);
    lab.set(Edge::of(2, 3), -1);
    lab.set(Edge::of(0, 3), -1);
    CHECK(check_proper(c4, lab, Mode::Product).empty());
    CHECK_THROWS_AS(check_proper(p2, on_path({2}), Mode::Product), PreconditionError);
  }

  TEST_CASE("strip_zero examples") {
    const Graph p2 = families::path(2);
    const auto stripped = strip_zero(ListAssignment::uniform(p2, {0, 1, 2}));
    CHECK(stripped == ListAssignment::uniform(p2, {1, 2}));
    CHECK(stripped.uniform_size() == 2u);
    const auto same = ListAssignment::uniform(p2, {1, 2});
    CHECK(strip_zero(same) == same);
    ListAssignment mixed;
    mixed.set(Edge::of(0, 1), {0, 1, 2});
    mixed.set(Edge::of(1, 2), {1, 2, 3});
    const auto m = strip_zero(mixed);
    CHECK(m.at(Edge::of(0, 1)) == std::vector<Rational>{1, 2});
    CHECK(m.at(Edge::of(1, 2)) == std::vector<Rational>{1, 2, 3});
    CHECK_FALSE(m.uniform_size());
  }

  TEST_CASE("single-edge relabel scales both endpoint products") {
    testsupport::Rng rng(3);
    for (int i = 0; i < 200; ++i) {
      const Graph g = testsupport::random_nice_graph(rng, 10);
      Labelling lab;
      for (const Edge& e : g.edges()) lab.set(e, testsupport::random_list(rng, 1).front());
      const Edge e = g.edges()[i % g.edge_count()];
      const Rational x = testsupport::random_list(rng, 1).front();
      const Rational factor = x / lab.at(e);
      const Rational pu = vertex_product(g, lab, e.u), pv = vertex_product(g, lab, e.v);
      lab.set(e, x);
      CHECK(vertex_product(g, lab, e.u) == pu * factor);
      CHECK(vertex_product(g, lab, e.v) == pv * factor);
    }
  }

  TEST_CASE("check_proper agrees with recomputation; zero labels are never proper") {
    testsupport::Rng rng(4);
    for (int i = 0; i < 200; ++i) {
      const Graph g = testsupport::random_nice_graph(rng, 10);
      Labelling lab;
      for (const Edge& e : g.edges()) lab.set(e, Rational(int(rng() % 3) + 1) * (rng() % 2 ? 1 : -1));
      for (Mode mode : {Mode::Product, Mode::Sum}) {
        std::vector<Edge> expected;
        for (const Edge& e : g.edges())
          if (vertex_colour(g, lab, e.u, mode) == vertex_colour(g, lab, e.v, mode)) expected.push_back(e);
        CHECK(check_proper(g, lab, mode) == expected);
      }
      lab.set(g.edges()[i % g.edge_count()], 0);
      CHECK_FALSE(check_proper(g, lab, Mode::Product).empty());
    }
  }

  TEST_CASE("feasibility is unchanged by removing 0") {
    testsupport::Rng rng(8);
    for (int i = 0; i < 100; ++i) {
      const Graph g = testsupport::random_nice_graph(rng, 8);
      ListAssignment la;
      for (const Edge& e : g.edges()) {
        auto list = testsupport::random_list(rng, 1 + rng() % 2, 3, true, false);
        list.push_back(0);
        la.set(e, list);
      }
      CHECK(solve(g, la, Mode::Product).found() == solve(g, strip_zero(la), Mode::Product).found());
    }
  }

  TEST_CASE("list assignment basics") {
    ListAssignment la;
    CHECK_THROWS_AS(la.set(Edge::of(0, 1), {}), PreconditionError);
    la.set(Edge::of(0, 1), {3, 1, 3});
    CHECK(la.at(Edge::of(0, 1)) == std::vector<Rational>{1, 3});
    CHECK(la.zero_free());
    CHECK_FALSE(la.covers(families::path(2)));
    CHECK(mode_name(Mode::Sum) == "sum");
    CHECK(parse_mode("product") == Mode::Product);
  }
}
