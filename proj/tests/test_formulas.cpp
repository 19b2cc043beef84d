#include <doctest.h>

#include "edgecodes/formulas.hpp"
#include "edgecodes/graph.hpp"
#include "oracles.hpp"

using namespace edgecodes;
using formulas::BigInt;

namespace {

Graph two_squares() {
  const std::vector<Graph> parts{make_even_cycle(4), make_even_cycle(4)};
  return make_disjoint_union(parts);
}

}  // namespace

TEST_CASE("integer helpers") {
  CHECK(formulas::binomial(10, 3) == 120);
  CHECK(formulas::binomial(3, 5) == 0);
  CHECK(formulas::binomial(60, 30) == BigInt("118264581564861424"));
  CHECK(formulas::ceil_div(7, 2) == 4);
  CHECK(formulas::ceil_div(8, 2) == 4);
  CHECK(formulas::ceil_div(0, 5) == 0);
  CHECK(formulas::ipow(3, 0) == 1);
  CHECK(formulas::ipow(4, 40) == BigInt(1) << 80);
  CHECK(formulas::monomial_count(8, 3) == 120);
  CHECK(formulas::monomial_count(1, 9) == 1);
}

TEST_CASE("length formula matches enumerated toric sets") {
  struct Case {
    Graph g;
    long long m;
  };
  const std::vector<Case> cases{{make_even_cycle(4), 1}, {make_even_cycle(6), 1}, {make_path(4), 1},
                                {make_complete_bipartite(2, 3), 1}, {two_squares(), 2}};
  for (unsigned q : {3u, 4u, 5u}) {
    auto f = gf::Field::make(q);
    for (const auto& c : cases) {
      const auto pts = oracle::graph_points(c.g, *f);
      CHECK(formulas::length_formula(c.g.n(), c.m, q) == pts.size());
    }
  }
}

TEST_CASE("torus Hilbert function matches elimination") {
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    auto f = gf::Field::make(q);
    for (std::size_t s = 1; s <= 3; ++s) {
      const auto pts = oracle::torus_points(s, *f);
      for (unsigned d = 0; d <= 7; ++d) {
        CAPTURE(q);
        CAPTURE(s);
        CAPTURE(d);
        CHECK(formulas::torus_hilbert(long(s), d, q) == oracle::hilbert(pts, s, d, *f));
      }
    }
  }
  // Four coordinates over GF(5).
  const std::vector<int> h{4, 10, 20, 32, 44, 54, 60, 63};
  for (int d = 1; d <= 8; ++d) CHECK(formulas::torus_hilbert(4, d, 5) == h[d - 1]);
  CHECK(formulas::torus_hilbert(4, 9, 5) == 64);
  CHECK(formulas::torus_reg(4, 5) == 9);
  CHECK(formulas::torus_reg(1, 7) == 0);
}

TEST_CASE("torus minimum distance") {
  const std::vector<int> want{48, 32, 16, 12, 8, 4, 3, 2};
  for (int d = 1; d <= 8; ++d) CHECK(formulas::torus_min_distance(4, 5, d) == want[d - 1]);
  CHECK(formulas::torus_min_distance(4, 5, 9) == 1);
  CHECK(formulas::torus_min_distance(4, 5, 40) == 1);
  CHECK(formulas::torus_min_distance(1, 5, 3) == 1);

  // Exhaustive search over the evaluation code.
  for (unsigned q : {3u, 4u, 5u}) {
    auto f = gf::Field::make(q);
    for (std::size_t s = 2; s <= 3; ++s) {
      const auto pts = oracle::torus_points(s, *f);
      const std::vector<oracle::Vec> list(pts.begin(), pts.end());
      for (unsigned d = 1; d <= (q - 2) * (s - 1) + 1; ++d) {
        const auto got = oracle::min_distance(oracle::evaluations(list, s, d, *f), *f);
        if (!got) continue;
        CAPTURE(q);
        CAPTURE(s);
        CAPTURE(d);
        CHECK(formulas::torus_min_distance(long(s), q, d) == *got);
      }
    }
  }
}

TEST_CASE("bounds for two disjoint 4-cycles over GF(5)") {
  const auto g = two_squares();
  const auto shape = formulas::bipartite_shape(g);
  CHECK(shape.n == 8);
  CHECK(shape.m == 2);
  CHECK(shape.k == 4);
  CHECK(shape.s == 8);
  const std::vector<int> hx{8, 34, 104, 240, 440, 670, 856, 975};
  const std::vector<int> l{512, 192, 64, 32, 12, 4, 2, 1};
  const std::vector<int> u{768, 512, 256, 192, 128, 64, 48, 32};
  const std::vector<int> b{1017, 991, 921, 785, 585, 355, 169, 50};
  for (int d = 1; d <= 8; ++d) {
    const auto r = formulas::edge_bounds(shape, 5, d, BigInt(hx[d - 1]));
    CAPTURE(d);
    CHECK(r.length == 1024);
    CHECK(r.l_d == l[d - 1]);
    CHECK(r.u_d == u[d - 1]);
    CHECK(r.b_d == b[d - 1]);
    CHECK(r.dim_lower == formulas::torus_hilbert(4, d, 5));
  }
  const auto r = formulas::edge_bounds(g, 5, 1);
  CHECK(r.reg_lower == 1);
  CHECK(r.reg_upper == 24);
  CHECK(r.reg_torus_lower == 9);
  CHECK(r.dim_lower == 4);
  // Without H_X the Singleton bound falls back to the dimension lower bound.
  CHECK(r.b_d == 1024 - 4 + 1);
}

TEST_CASE("bound monotonicity") {
  for (unsigned q : {3u, 4u, 5u, 7u}) {
    const auto shape = formulas::bipartite_shape(make_complete_bipartite(3, 3));
    BigInt prev_l = -1, prev_u = -1;
    for (int d = 1; d <= 30; ++d) {
      const auto r = formulas::edge_bounds(shape, q, d);
      CHECK(r.l_d >= 1);
      CHECK(r.l_d <= r.u_d);
      if (d > 1) {
        CHECK(r.l_d <= prev_l);
        CHECK(r.u_d <= prev_u);
      }
      prev_l = r.l_d;
      prev_u = r.u_d;
      CHECK(r.reg_lower <= r.reg_upper);
    }
  }
}

TEST_CASE("shape rejects graphs outside the family") {
  CHECK_THROWS_AS(formulas::bipartite_shape(make_cycle(3)), GraphError);
  CHECK_THROWS_AS(formulas::bipartite_shape(make_path(3)), GraphError);
  CHECK_THROWS_AS(formulas::bipartite_shape(make_complete_bipartite(1, 3)), GraphError);
}

TEST_CASE("huge parameters stay exact") {
  const auto big = formulas::torus_min_distance(60, 101, 1);
  CHECK(big == formulas::ipow(100, 58) * 99);
  CHECK(formulas::length_formula(200, 1, 257) == formulas::ipow(256, 198));
}
