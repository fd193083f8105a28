#include "prodlab/certifier.hpp"
#include "prodlab/errors.hpp"
#include "prodlab/graph_families.hpp"
#include "prodlab/solver.hpp"

#include "support/generators.hpp"

#include <doctest.h>

using namespace prodlab;

namespace {

SparsePolynomial poly(std::size_t vars, std::initializer_list<std::pair<Exponents, int>> terms) {
  SparsePolynomial p(vars);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

Orientation reversed_first(const Graph& g) {
  Orientation o = default_orientation(g);
  std::swap(o.arcs[0].first, o.arcs[0].second);
  return o;
}

}  // namespace

TEST_SUITE("cn-certifier") {
  TEST_CASE("polynomial arithmetic") {
    const auto x = SparsePolynomial::monomial({1, 0});
    const auto y = SparsePolynomial::monomial({0, 1});
    const auto p = (x + y) * (x - y);
    CHECK(p == poly(2, {{{2, 0}, 1}, {{0, 2}, -1}}));
    CHECK(p.total_degree() == 2u);
    CHECK(p.max_exponent() == 2);
    CHECK((p - p).is_zero());
    CHECK_FALSE((p - p).total_degree());
    CHECK(p.coefficient({1, 1}) == 0);
    CHECK(p.coefficient({5, 5}) == 0);
    const auto big = (x + y + SparsePolynomial::constant(2, 1));
    CHECK_THROWS_AS(big.multiply(big, 4), RefusalError);
  }

  TEST_CASE("build_sum_poly examples") {
    const Graph p2 = families::path(2);
    const auto q = build_sum_poly(p2, default_orientation(p2));
    CHECK(q == poly(2, {{{1, 1}, -1}}));
    CHECK(q.coefficient({1, 1}) == -1);
    const Graph k2 = families::path(1);
    CHECK(build_sum_poly(k2, default_orientation(k2)).is_zero());
    const Graph c3 = families::cycle(3);
    const auto o = default_orientation(c3);
    CHECK(build_sum_poly(c3, o).coefficient({1, 1, 1}) == permanent(sum_matrix(c3, o)));
  }

  TEST_CASE("build_product_poly examples") {
    const Graph p2 = families::path(2);
    const auto p = build_product_poly(p2, default_orientation(p2));
    CHECK(p == poly(2, {{{2, 1}, 1}, {{1, 1}, -1}, {{2, 2}, -1}, {{1, 2}, 1}}));
    CHECK(p.coefficient({2, 2}) == -1);
    const Graph k2 = families::path(1);
    CHECK(build_product_poly(k2, default_orientation(k2)).is_zero());
    const Graph c3 = families::cycle(3);
    CHECK(build_product_poly(c3, default_orientation(c3)).max_exponent() <= 3);
  }

  TEST_CASE("permanent examples") {
    CHECK(permanent({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 1);
    CHECK(permanent({{1, 1}, {1, 1}}) == 2);
    CHECK(permanent({}) == 1);
    testsupport::Rng rng(2);
    for (int i = 0; i < 20; ++i) {
      std::vector<std::vector<BigInt>> m(5, std::vector<BigInt>(5));
      for (auto& row : m)
        for (auto& x : row) x = int(rng() % 5) - 2;
      CHECK(permanent(m) == permanent_naive(m));
    }
    CHECK_THROWS_AS(permanent({{1, 2}}), PreconditionError);
  }

  TEST_CASE("certify examples") {
    const Graph p2 = families::path(2);
    const auto prod = certify(p2, Mode::Product, 3);
    REQUIRE(prod);
    CHECK(prod->exponents == Exponents{2, 2});
    CHECK(prod->coefficient == -1);
    CHECK(prod->bound == 3);
    CHECK(prod->max_degree);
    const auto sum = certify(p2, Mode::Sum, 2);
    REQUIRE(sum);
    CHECK(sum->exponents == Exponents{1, 1});
    CHECK_FALSE(certify(p2, Mode::Sum, 1));
    CHECK_FALSE(certify(p2, Mode::Product, 2));
  }

  TEST_CASE("size guard") {
    std::vector<Edge> es;
    for (int i = 0; i < 17; ++i) es.push_back(Edge::of(i, i + 1));
    const Graph g = Graph::from_edges(es);
    CHECK_THROWS_AS(build_sum_poly(g, default_orientation(g)), RefusalError);
    CHECK_THROWS_AS(certify(g, Mode::Product, 3), RefusalError);
  }

  TEST_CASE("orientations") {
    const Graph c4 = families::cycle(4);
    Orientation bad = default_orientation(c4);
    bad.arcs.pop_back();
    CHECK_THROWS_AS(check_orientation(c4, bad), PreconditionError);
    for (const Graph& g : {families::cycle(4), families::star(3), families::complete(4)}) {
      const auto o = reversed_first(g);
      CHECK(build_sum_poly(g, o) == -build_sum_poly(g, default_orientation(g)));
      CHECK(build_product_poly(g, o) == -build_product_poly(g, default_orientation(g)));
    }
  }

  TEST_CASE("Q structure on small graphs") {
    testsupport::Rng rng(31);
    for (int i = 0; i < 150; ++i) {
      const Graph g = i % 5 == 0 ? Graph::from_edges({Edge::of(0, 1), Edge::of(2, 3), Edge::of(3, 4)})
                                 : testsupport::random_nice_graph(rng, 6);
      const auto o = default_orientation(g);
      const auto q = build_sum_poly(g, o);
      CHECK(q.is_zero() == !is_nice(g));
      for (const auto& [e, c] : q.terms()) CHECK(total_degree_of(e) == g.edge_count());
      Exponents ones(g.edge_count(), 1);
      CHECK(q.coefficient(ones) == permanent(sum_matrix(g, o)));
      const auto p = build_product_poly(g, o);
      CHECK(p.max_exponent() <= 2 * g.max_degree() - 1);
    }
  }

  TEST_CASE("product certificates are sound on random lists") {
    testsupport::Rng rng(32);
    for (const Graph& g : {families::path(3), families::cycle(4), families::star(3), families::cycle(5)}) {
      const auto cert = certify(g, Mode::Product, 2 * g.max_degree());
      REQUIRE(cert);
      for (int i = 0; i < 200; ++i)
        CHECK(solve(g, testsupport::random_lists(rng, g, cert->bound), Mode::Product).found());
    }
  }
}
