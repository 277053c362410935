#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "twotree/error.hpp"
#include "twotree/generators.hpp"
#include "twotree/recognition.hpp"

using namespace twotree;
using testing_support::graph;

namespace {

NotTwoTreeReason rejection(const SimpleGraph& g) {
  try {
    recognize(g);
  } catch (const NotTwoTreeError& e) {
    return e.reason();
  }
  FAIL("graph was accepted");
  return NotTwoTreeReason::WrongEdgeCount;
}

}  // namespace

TEST_CASE("recognize K_3") {
  const auto r = recognize(graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(r.construction == TwoTreeConstruction(3, {Edge(0, 1)}));
  CHECK(r.realize_original() == graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  // Vertex 0 is removed first, so it is built last.
  CHECK(r.vertex_of == std::vector<Vertex>{1, 2, 0});
  CHECK(r.ordering.order == std::vector<Vertex>{0, 2, 1});
}

TEST_CASE("recognize rejects with a reason") {
  // C_4 and K_4 fail the edge count.
  CHECK(rejection(graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})) == NotTwoTreeReason::WrongEdgeCount);
  CHECK(rejection(graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) ==
        NotTwoTreeReason::WrongEdgeCount);
  // K_4 with a pendant vertex: 7 edges on 5 vertices, no degree-2 vertex.
  CHECK(rejection(graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}})) ==
        NotTwoTreeReason::NoDegree2Simplicial);
  // 5-cycle with crossing chords 0-2, 1-3: vertex 4 has neighbours 0 and 3.
  CHECK(rejection(graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}, {1, 3}})) ==
        NotTwoTreeReason::NonAdjacentNeighbors);
  // K_5 plus a separate edge: 11 = 2*7 - 3 edges.
  CHECK(rejection(graph(7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                            {3, 4}, {5, 6}})) == NotTwoTreeReason::Disconnected);
}

TEST_CASE("round trip through recognize on generated 2-trees") {
  for (std::int64_t n = 2; n <= 25; ++n) {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      // Scramble labels so recognition cannot lean on build order.
      const auto built = realize(random_two_tree(n, seed));
      std::vector<Vertex> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), Vertex{0});
      SplitMix64 rng(seed * 7919 + static_cast<std::uint64_t>(n));
      for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform(i)]);
      const auto g = relabel(built, perm, static_cast<std::size_t>(n));
      const auto r = recognize(g);
      CHECK(r.realize_original() == g);
      CHECK(is_two_simplicial_ordering(g, r.ordering));
    }
  }
}

TEST_CASE("perturbed 2-trees are rejected") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto g = realize(random_two_tree(9, seed));
    // Drop each edge in turn.
    for (const Edge& e : g.edges()) {
      CHECK_THROWS_AS(recognize(without_edge(g, e)), NotTwoTreeError);
    }
    // Add each missing edge in turn.
    for (Vertex a = 0; a < 9; ++a) {
      for (Vertex b = a + 1; b < 9; ++b) {
        if (g.has_edge(a, b)) continue;
        std::vector<Edge> more(g.edges().begin(), g.edges().end());
        more.emplace_back(a, b);
        CHECK(rejection(SimpleGraph(9, more)) == NotTwoTreeReason::WrongEdgeCount);
      }
    }
  }
}

TEST_CASE("simplicial_vertices") {
  CHECK(simplicial_vertices(realize(book(5))) == std::vector<Vertex>{2, 3, 4});
  CHECK(simplicial_vertices(realize(path_square(6))) == std::vector<Vertex>{0, 5});
  CHECK(simplicial_vertices(graph(3, {{0, 1}, {0, 2}, {1, 2}})).size() == 3);
  CHECK_THROWS_AS(simplicial_vertices(graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})), NotTwoTreeError);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(simplicial_vertices(realize(random_two_tree(3 + seed % 15, seed))).size() >= 2);
  }
}

TEST_CASE("is_book") {
  CHECK(is_book(realize(book(7))));
  CHECK_FALSE(is_book(realize(path_square(5))));
  CHECK(is_book(graph(3, {{0, 1}, {0, 2}, {1, 2}})));
  CHECK(is_book(realize(path_square(4))));
  // A relabelled book is still a book.
  const std::vector<Vertex> perm{4, 2, 0, 1, 3, 5};
  CHECK(is_book(relabel(realize(book(6)), perm, 6)));
}

TEST_CASE("path ordering for two-simplicial 2-trees") {
  const auto ps6 = realize(path_square(6));
  const auto ordering = path_ordering_if_two_simplicial(ps6);
  REQUIRE(ordering);
  CHECK(ordering->order == std::vector<Vertex>{0, 1, 2, 3, 4, 5});

  CHECK_FALSE(path_ordering_if_two_simplicial(realize(book(5))));
  CHECK(path_ordering_if_two_simplicial(realize(book(4))));
  CHECK_FALSE(path_ordering_if_two_simplicial(graph(3, {{0, 1}, {0, 2}, {1, 2}})));

  const auto fan7 = realize(fan(7));
  const auto f = path_ordering_if_two_simplicial(fan7);
  REQUIRE(f);
  CHECK(f->order.front() == 1);
  CHECK(f->order.back() == 6);
}

TEST_CASE("path ordering is a Hamiltonian path of random chains") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = realize(random_chain(4 + seed % 14, seed));
    const auto ordering = path_ordering_if_two_simplicial(g);
    REQUIRE(ordering);
    std::vector<bool> seen(g.vertex_count(), false);
    for (std::size_t k = 0; k < ordering->order.size(); ++k) {
      CHECK_FALSE(seen[ordering->order[k]]);
      seen[ordering->order[k]] = true;
      if (k + 1 < ordering->order.size()) {
        CHECK(g.has_edge(ordering->order[k], ordering->order[k + 1]));
      }
    }
    CHECK(is_two_simplicial_ordering(g, *ordering));
  }
}
