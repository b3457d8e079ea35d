#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "linfor/graph.hpp"
#include "oracles.hpp"

using namespace linfor;

namespace {

// All vertex subsets of g as vectors, for exhaustive predicate checks.
std::vector<std::vector<int>> all_subsets(const Graph& g) {
  std::vector<std::vector<int>> out;
  int n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> subset;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) subset.push_back(v);
    out.push_back(subset);
  }
  return out;
}

Bitset128 to_bits(const std::vector<int>& subset) {
  Bitset128 b;
  for (int v : subset) b.set(v);
  return b;
}

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    edges.emplace_back(i, 5 + i);                // spokes
  }
  return Graph::from_edges(10, edges);
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("families have the expected orders, sizes, and degrees") {
    Graph p5 = Graph::path(5);
    CHECK(p5.order() == 5);
    CHECK(p5.edge_count() == 4);
    CHECK(p5.degree(0) == 1);
    CHECK(p5.degree(2) == 2);
    CHECK(p5.connected());

    Graph c6 = Graph::cycle(6);
    CHECK(c6.edge_count() == 6);
    CHECK(c6.regularity() == 2);

    Graph k5 = Graph::complete(5);
    CHECK(k5.edge_count() == 10);
    CHECK(k5.regularity() == 4);

    Graph k23 = Graph::complete_bipartite(2, 3);
    CHECK(k23.order() == 5);
    CHECK(k23.edge_count() == 6);
    CHECK(k23.degree(0) == 3);
    CHECK(k23.degree(2) == 2);
    CHECK_FALSE(k23.regularity().has_value());

    Graph e4 = Graph::empty_graph(4);
    CHECK(e4.edge_count() == 0);
    CHECK(e4.regularity() == 0);
    CHECK_FALSE(e4.connected());
  }

  TEST_CASE("from_edges rejects bad input and deduplicates") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(129, {}), GraphError);
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);
  }

  TEST_CASE("degree sequence is sorted non-increasing") {
    Graph k13 = Graph::complete_bipartite(1, 3);
    std::vector<int> ds = k13.degree_sequence();
    CHECK(ds == std::vector<int>{3, 1, 1, 1});
  }

  TEST_CASE("complement and self-complementary C_5") {
    Graph c5 = Graph::cycle(5);
    Graph cc = c5.complement();
    CHECK(cc.edge_count() == 5);
    CHECK(cc.regularity() == 2);
    // C_5 is self-complementary: its complement is the pentagram, again a
    // 5-cycle (0-2-4-1-3-0).
    std::vector<char> on_cycle(5, 0);
    int v = 0, prev = -1, steps = 0;
    do {
      on_cycle[v] = 1;
      int next = -1;
      cc.neighbors(v).for_each([&](int w) {
        if (w != prev && next == -1) next = w;
      });
      prev = v;
      v = next;
      ++steps;
    } while (v != 0 && steps <= 5);
    CHECK(steps == 5);
    CHECK(std::count(on_cycle.begin(), on_cycle.end(), 1) == 5);

    // Complementing twice returns the original.
    CHECK(cc.complement() == c5);
  }

  TEST_CASE("connected components") {
    Graph p5 = Graph::path(5);
    CHECK(p5.connected_components().size() == 1);
    CHECK(p5.connected_components()[0].count() == 5);

    Graph two = Graph::from_edges(5, {{0, 1}, {2, 3}});
    auto comps = two.connected_components();
    CHECK(comps.size() == 3);
    std::vector<int> sizes;
    for (const auto& c : comps) sizes.push_back(c.count());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 2, 2});

    CHECK(Graph::from_edges(0, {}).connected_components().empty());
  }

  TEST_CASE("shape_check on the canonical examples") {
    Graph k4 = Graph::complete(4);
    CHECK(k4.shape_check(to_bits({0, 1}), Shape::linear_forest));

    Graph star = Graph::complete_bipartite(1, 3);
    Bitset128 all4 = star.vertex_mask();
    CHECK_FALSE(star.shape_check(all4, Shape::linear_forest));
    CHECK(star.shape_check(all4, Shape::forest));

    Graph c5 = Graph::cycle(5);
    for (int skip = 0; skip < 5; ++skip) {
      Bitset128 four = c5.vertex_mask();
      four.reset(skip);
      CHECK(c5.shape_check(four, Shape::induced_path));
    }
  }

  TEST_CASE("empty subset is a forest and linear forest but not a path") {
    Graph g = Graph::cycle(4);
    Bitset128 empty;
    CHECK(g.shape_check(empty, Shape::forest));
    CHECK(g.shape_check(empty, Shape::linear_forest));
    CHECK_FALSE(g.shape_check(empty, Shape::induced_path));
  }

  TEST_CASE("shape_check agrees with the naive checker on every subset") {
    std::vector<Graph> graphs = {Graph::complete(4),
                                 Graph::complete_bipartite(1, 3),
                                 Graph::complete_bipartite(2, 3),
                                 Graph::complete_bipartite(3, 3),
                                 Graph::cycle(5),
                                 Graph::cycle(6),
                                 Graph::path(5),
                                 Graph::empty_graph(3),
                                 Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}),
                                 petersen()};
    for (const Graph& g : graphs) {
      for (const std::vector<int>& subset : all_subsets(g)) {
        Bitset128 bits = to_bits(subset);
        for (Shape shape : {Shape::forest, Shape::linear_forest, Shape::induced_path}) {
          CAPTURE(g.order());
          CAPTURE(subset.size());
          CHECK(g.shape_check(bits, shape) == oracles::naive_shape_check(g, subset, shape));
        }
      }
    }
  }

  TEST_CASE("regularity of the empty-order graph throws") {
    Graph g = Graph::from_edges(0, {});
    CHECK_THROWS_AS(g.regularity(), GraphError);
  }

  TEST_CASE("family descriptors build the same graphs as the constructors") {
    CHECK(standard({GraphFamily::Kind::path, 4, 0}) == Graph::path(4));
    CHECK(standard({GraphFamily::Kind::cycle, 5, 0}) == Graph::cycle(5));
    CHECK(standard({GraphFamily::Kind::complete, 6, 0}) == Graph::complete(6));
    CHECK(standard({GraphFamily::Kind::complete_bipartite, 2, 3}) ==
          Graph::complete_bipartite(2, 3));
    CHECK(standard({GraphFamily::Kind::empty, 3, 0}) == Graph::empty_graph(3));
  }
}
