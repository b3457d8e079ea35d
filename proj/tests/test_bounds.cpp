#include <doctest.h>

#include <vector>

#include "linfor/bounds.hpp"
#include "linfor/graph.hpp"
#include "linfor/rational.hpp"
#include "linfor/solve.hpp"

using namespace linfor;

TEST_SUITE("bounds") {
  TEST_CASE("degree-sum weight t(G) as exact fractions") {
    CHECK(caro_wei_t(Graph::complete(4)) == Rational(1));
    CHECK(caro_wei_t(Graph::complete_bipartite(1, 3)) == Rational(7, 4));
    CHECK(caro_wei_t(Graph::cycle(5)) == Rational(5, 3));
    CHECK(caro_wei_t(Graph::empty_graph(3)) == Rational(3));
  }

  TEST_CASE("f ratio on the named graphs") {
    Graph k13 = Graph::complete_bipartite(1, 3);
    CHECK(f_ratio(k13, max_induced_linear_forest(k13).value) == Rational(12, 7));
    Graph k23 = Graph::complete_bipartite(2, 3);
    CHECK(f_ratio(k23, max_induced_linear_forest(k23).value) == Rational(2));
    Graph k33 = Graph::complete_bipartite(3, 3);
    CHECK(f_ratio(k33, max_induced_linear_forest(k33).value) == Rational(2));
    CHECK_THROWS(f_ratio(k33, 0));
  }

  TEST_CASE("regular lower bound 2n/(r+1)") {
    CHECK(lif_regular_lower_bound(4, 3) == Rational(2));
    CHECK(lif_regular_lower_bound(10, 3) == Rational(5));
    CHECK(lif_regular_lower_bound(7, 2) == Rational(14, 3));
  }

  TEST_CASE("induced-path order lower bound, including the parity correction") {
    // 2k + ceil(-2(k-1)/r), plus one more when r is odd and the ceiling is
    // odd.
    CHECK(lip_order_lower_bound(2, 2) == 3);
    CHECK(lip_order_lower_bound(3, 3) == 6);
    CHECK(lip_order_lower_bound(4, 4) == 7);
    CHECK(lip_order_lower_bound(5, 5) == 10);
    CHECK(lip_order_lower_bound(6, 6) == 11);
    CHECK(lip_order_lower_bound(7, 7) == 14);
    CHECK(lip_order_lower_bound(8, 8) == 15);
    CHECK(lip_order_lower_bound(3, 1) == 2);
    CHECK(lip_order_lower_bound(3, 2) == 4);
  }

  TEST_CASE("edge-count identity behind the path bound") {
    // A path of order k >= 2 in an r-regular graph sends exactly
    // 2(r-1) + (k-2)(r-2) = rk - 2(k-1) edges to the rest of the graph.
    for (int r = 2; r <= 8; ++r)
      for (int k = 2; k <= 12; ++k)
        CHECK(2 * (r - 1) + (k - 2) * (r - 2) == r * k - 2 * (k - 1));
  }

  TEST_CASE("induced-path upper bound (rn-2)/(2r-2)") {
    CHECK(lip_upper_bound(6, 3) == Rational(4));          // (18-2)/4
    CHECK(lip_upper_bound(10, 3) == Rational(7));         // (30-2)/4
    CHECK(lip_upper_bound(7, 4) == Rational(26, 6));      // normalises to 13/3
    CHECK(lip_upper_bound(7, 4) == Rational(13, 3));
  }

  TEST_CASE("misc induced-forest lower bounds with trivial flags") {
    Graph p5 = Graph::path(5);
    std::vector<BoundReport> reports = misc_lower_bounds(p5, max_induced_forest(p5).value);
    bool saw_size_bound = false, saw_weight_bound = false;
    for (const BoundReport& rep : reports) {
      if (rep.name == "(8n-2m-2)/9") {
        saw_size_bound = true;
        CHECK(rep.applicable);
        CHECK(rep.value == Rational(10, 3));
        CHECK_FALSE(rep.trivial);
        REQUIRE(rep.holds.has_value());
        CHECK(*rep.holds);
      }
      if (rep.name == "2t(G)") {
        saw_weight_bound = true;
        CHECK(rep.applicable);  // minimum degree 1 qualifies
        CHECK(rep.value == Rational(4));
        REQUIRE(rep.holds.has_value());
        CHECK(*rep.holds);
      }
    }
    CHECK(saw_size_bound);
    CHECK(saw_weight_bound);

    Graph k9 = Graph::complete(9);
    for (const BoundReport& rep : misc_lower_bounds(k9, max_induced_forest(k9).value))
      if (rep.name == "(8n-2m-2)/9") {
        CHECK(rep.value == Rational(-2, 9));
        CHECK(rep.trivial);
      }

    // Isolated vertices disqualify the weight bound; disconnection
    // disqualifies the size bound.
    Graph loose = Graph::from_edges(3, {{0, 1}});
    for (const BoundReport& rep : misc_lower_bounds(loose, max_induced_forest(loose).value)) {
      if (rep.name == "2t(G)") CHECK_FALSE(rep.applicable);
      if (rep.name == "(8n-2m-2)/9") CHECK_FALSE(rep.applicable);
    }
  }

  TEST_CASE("complement-sum report") {
    Graph p4 = Graph::path(4);
    int a = max_induced_forest(p4).value;
    int ac = max_induced_forest(p4.complement()).value;
    NordhausGaddumReport rep = nordhaus_gaddum_check(p4, a, ac);
    CHECK(rep.sum == 8);
    CHECK(rep.limit == 8);
    CHECK(rep.holds);
    CHECK(rep.equality);

    Graph k5 = Graph::complete(5);
    NordhausGaddumReport rep5 = nordhaus_gaddum_check(
        k5, max_induced_forest(k5).value, max_induced_forest(k5.complement()).value);
    CHECK(rep5.sum == 7);
    CHECK(rep5.holds);
    CHECK_FALSE(rep5.equality);
  }

  TEST_CASE("extremal constructions are regular with the designed order") {
    for (int r = 2; r <= 8; ++r) {
      ExtremalConstruction c = construct_extremal_lip(r);
      CAPTURE(r);
      CHECK(c.verified_regular);
      CHECK(c.graph.regularity() == r);
      CHECK(c.graph.order() == c.expected_order);
      CHECK(c.expected_order == lip_order_lower_bound(r, r));
      CHECK(c.even_case == (r % 2 == 0));
    }
  }

  TEST_CASE("extremal constructions attain the designed path length for r=2 and r=4") {
    for (int r : {2, 4}) {
      ExtremalConstruction c = construct_extremal_lip(r);
      fill_extremal_lip(c, SearchBudget{});
      REQUIRE(c.lip_value.has_value());
      CHECK(*c.lip_value == r);
      REQUIRE(c.lip_matches_r.has_value());
      CHECK(*c.lip_matches_r);
    }
  }

  TEST_CASE("the degree-3 construction is the prism and misses its designed value") {
    ExtremalConstruction c = construct_extremal_lip(3);
    CHECK(c.graph.order() == 6);
    CHECK(c.graph.regularity() == 3);
    fill_extremal_lip(c, SearchBudget{});
    REQUIRE(c.lip_value.has_value());
    CHECK(*c.lip_value == 4);        // the recorded discrepancy
    REQUIRE(c.lip_matches_r.has_value());
    CHECK_FALSE(*c.lip_matches_r);   // flagged, not suppressed
    // K_{3,3} shows the k=3 bound itself is attainable at order 6.
    CHECK(lip_order_lower_bound(3, 3) == 6);
    Graph k33 = Graph::complete_bipartite(3, 3);
    CHECK(longest_induced_path(k33).value == 3);
  }

  TEST_CASE("construction rejects degrees below 2") {
    CHECK_THROWS_AS(construct_extremal_lip(1), BoundsError);
  }
}
