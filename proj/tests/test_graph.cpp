#include <doctest.h>

#include "helpers.hpp"
#include "twotree/error.hpp"
#include "twotree/generators.hpp"
#include "twotree/graph.hpp"
#include "twotree/recognition.hpp"

using namespace twotree;
using testing_support::edges;
using testing_support::graph;

TEST_CASE("edges are canonical") {
  CHECK(Edge(3, 1) == Edge(1, 3));
  CHECK(Edge(3, 1).u() == 1);
  CHECK_THROWS_AS(Edge(2, 2), Error);
}

TEST_CASE("simple graph rejects duplicates and out-of-range endpoints") {
  const auto dup = edges({{0, 1}, {1, 0}});
  CHECK_THROWS_AS(SimpleGraph(2, dup), Error);
  const auto far = edges({{0, 5}});
  CHECK_THROWS_AS(SimpleGraph(3, far), Error);
}

TEST_CASE("realize") {
  SUBCASE("base only is K_2") {
    const auto g = realize(TwoTreeConstruction(2, {}));
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
  }
  SUBCASE("one attachment is the triangle") {
    const auto g = realize(TwoTreeConstruction(3, {Edge(0, 1)}));
    CHECK(g == graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  }
  SUBCASE("book(4) has 5 edges") {
    const auto g = realize(TwoTreeConstruction(4, {Edge(0, 1), Edge(0, 1)}));
    CHECK(g.edge_count() == 5);
    CHECK(g == graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}));
  }
  SUBCASE("attached vertices see both attach endpoints") {
    const auto c = random_two_tree(15, 99);
    const auto g = realize(c);
    for (Vertex v = 2; v < 15; ++v) {
      CHECK(g.has_edge(v, c.attachment(v).u()));
      CHECK(g.has_edge(v, c.attachment(v).v()));
    }
  }
}

TEST_CASE("invalid constructions are rejected") {
  CHECK_THROWS_AS(TwoTreeConstruction(1, {}), Error);
  // Vertex 3 attaches to 2-3 which does not exist yet.
  try {
    TwoTreeConstruction(4, {Edge(0, 1), Edge(2, 3)});
    FAIL("expected InvalidConstruction");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidConstruction);
  }
  // Vertex 4 attaches to 2-3, absent in book(4).
  CHECK_THROWS_AS(TwoTreeConstruction(5, {Edge(0, 1), Edge(0, 1), Edge(2, 3)}), Error);
  CHECK_THROWS_AS(TwoTreeConstruction(4, {Edge(0, 1)}), Error);
}

TEST_CASE("prefix_graph") {
  const auto c = book(5);
  CHECK(prefix_graph(c, 2) == graph(2, {{0, 1}}));
  CHECK(prefix_graph(c, 5) == realize(c));
  CHECK(prefix_graph(c, 3) == graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK_THROWS_AS(prefix_graph(c, 1), Error);
  CHECK_THROWS_AS(prefix_graph(c, 6), Error);
}

TEST_CASE("prefix graphs are nested induced subgraphs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = random_two_tree(12, seed);
    for (std::size_t i = 2; i < 12; ++i) {
      const auto small = prefix_graph(c, i);
      const auto big = prefix_graph(c, i + 1);
      std::vector<Vertex> first(i);
      for (Vertex k = 0; k < i; ++k) first[k] = k;
      CHECK(induced_subgraph(big, first).graph == small);
    }
  }
}

TEST_CASE("every realized construction has 2n-3 edges and is a 2-tree") {
  for (std::int64_t n = 2; n <= 20; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto g = realize(random_two_tree(n, seed));
      CHECK(g.edge_count() == static_cast<std::size_t>(2 * n - 3));
      CHECK(is_two_tree(g));
    }
  }
}

TEST_CASE("is_spanning_tree") {
  const auto k3 = graph(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(is_spanning_tree(k3, edges({{0, 1}, {1, 2}})));
  CHECK_FALSE(is_spanning_tree(k3, edges({{0, 1}, {1, 2}, {0, 2}})));
  CHECK_FALSE(is_spanning_tree(k3, edges({{0, 1}})));

  const auto b4 = realize(book(4));
  CHECK(is_spanning_tree(b4, edges({{0, 1}, {0, 2}, {0, 3}})));
  CHECK_FALSE(is_spanning_tree(b4, edges({{0, 2}, {1, 2}, {0, 1}})));

  try {
    is_spanning_tree(b4, edges({{2, 3}, {0, 1}, {0, 2}}));
    FAIL("expected ForeignEdge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ForeignEdge);
  }
}

TEST_CASE("induced subgraph and relabel") {
  const auto g = realize(path_square(6));
  const std::vector<Vertex> keep{5, 3, 4};
  const auto sub = induced_subgraph(g, keep);
  CHECK(sub.graph == graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(sub.original_of == keep);
  const auto back = relabel(sub.graph, sub.original_of, 6);
  CHECK(back.edge_count() == 3);
  CHECK(back.has_edge(3, 5));
}
