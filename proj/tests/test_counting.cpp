#include <doctest.h>

#include "helpers.hpp"
#include "twotree/counting.hpp"
#include "twotree/error.hpp"
#include "twotree/generators.hpp"
#include "twotree/recognition.hpp"

using namespace twotree;
using testing_support::edges;
using testing_support::graph;
using testing_support::to_pairs;
using testing_support::to_u64;

namespace {

std::uint64_t oracle_containing(const SimpleGraph& g, std::span<const Edge> s) {
  return oracle::count_containing(static_cast<int>(g.vertex_count()), to_pairs(g), to_pairs(s));
}

std::uint64_t oracle_count(const SimpleGraph& g) {
  return oracle::count_trees(static_cast<int>(g.vertex_count()), to_pairs(g));
}

}  // namespace

TEST_CASE("fibonacci") {
  CHECK(fibonacci(-1) == 1);
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(10) == 55);
  CHECK(fibonacci(100) == BigCount("354224848179261915075"));
  CHECK_THROWS_AS(fibonacci(-2), Error);
  for (std::int64_t k = 1; k < 200; ++k) CHECK(fibonacci(k + 1) == fibonacci(k) + fibonacci(k - 1));
}

TEST_CASE("count_book") {
  CHECK(count_book(2) == 1);
  CHECK(count_book(3) == 3);
  CHECK(count_book(4) == 8);
  CHECK(count_book(10) == 1280);
  CHECK(kirchhoff_count(realize(book(10))) == 1280);
  CHECK(count_book(20) == 2621440);
  CHECK_THROWS_AS(count_book(1), Error);
}

TEST_CASE("count_two_simplicial") {
  CHECK(count_two_simplicial(2) == 1);
  CHECK(count_two_simplicial(4) == 8);
  CHECK(count_two_simplicial(5) == 21);
  CHECK(count_two_simplicial(6) == 55);
  CHECK(kirchhoff_count(realize(path_square(6))) == 55);
  CHECK_THROWS_AS(count_two_simplicial(1), Error);
}

TEST_CASE("chain_step") {
  const auto seed = ChainState::start(1, 1);
  const auto one = chain_step(seed);
  CHECK(one.t == 3);
  CHECK(one.s == 2);
  CHECK(one.p == 1);

  // Host K_3, e0 any edge: T = 3 and T(K_3; e0) = 2 by the subset oracle.
  const auto k3 = graph(3, {{0, 1}, {0, 2}, {1, 2}});
  const Edge e0(0, 1);
  CHECK(oracle_count(k3) == 3);
  CHECK(oracle_containing(k3, std::span<const Edge>(&e0, 1)) == 2);
  const auto from_k3 = chain_step(ChainState::start(3, 2));
  CHECK(from_k3.t == 8);
  CHECK(from_k3.s == 5);

  CHECK(ChainState::start(3, 2) == ChainState::start(3, 2));
  CHECK_THROWS_AS(ChainState::start(2, 3), Error);
}

TEST_CASE("chain closed form holds for p up to 50") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const BigCount alpha = 1 + rng.uniform(1000000);
    const BigCount beta = 1 + rng.uniform(alpha.convert_to<std::uint64_t>());
    auto state = ChainState::start(alpha, beta);
    for (int p = 0; p <= 50; ++p) {
      CHECK(state.satisfies_closed_form());
      state = chain_step(state);
    }
  }
}

TEST_CASE("chain_edge_counts against brute force") {
  SUBCASE("degenerate K_2 host, p = 1") {
    const auto c = chain_edge_counts(1, 1, 1);
    CHECK(c.e0 == 2);
    CHECK(c.e_prime == 2);
    CHECK(c.e_last == 2);
    // The 3-vertex chain is K_3: every edge lies in 2 of its 3 trees.
    const auto k3 = realize(book(3));
    for (const Edge& e : k3.edges()) CHECK(oracle_containing(k3, std::span<const Edge>(&e, 1)) == 2);
  }
  SUBCASE("K_3 host, p = 1 and p = 2") {
    // Host K_3 on {0,1,2} with e0 = 0-1; w1 = 3 on 0-1, e1 = 1-3, e' = 0-3;
    // w2 = 4 on e1, e2 = 3-4.
    const auto g1 = graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
    const auto g2 = graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {3, 4}});
    auto on = [](const SimpleGraph& g, int a, int b) {
      const Edge e(a, b);
      return oracle_containing(g, std::span<const Edge>(&e, 1));
    };
    CHECK(on(g1, 0, 1) == 4);
    CHECK(on(g1, 0, 3) == 5);
    CHECK(on(g1, 1, 3) == 5);
    CHECK(on(g2, 0, 1) == 10);
    CHECK(on(g2, 0, 3) == 12);
    CHECK(on(g2, 3, 4) == 13);

    const auto p1 = chain_edge_counts(3, 2, 1);
    CHECK(p1.e0 == 4);
    CHECK(p1.e_prime == 5);
    CHECK(p1.e_last == 5);
    const auto p2 = chain_edge_counts(3, 2, 2);
    CHECK(p2.e0 == 10);
    CHECK(p2.e_prime == 12);
    CHECK(p2.e_last == 13);
    CHECK(p2.e_last > p2.e0);
    CHECK(p2.e_last > p2.e_prime);
  }
  CHECK_THROWS_AS(chain_edge_counts(3, 2, 0), Error);
}

TEST_CASE("bareiss determinant") {
  CHECK(bareiss_determinant({}, 0) == 1);
  CHECK(bareiss_determinant({BigCount(7)}, 1) == 7);
  // Needs a row swap: [[0, 1], [1, 0]] has determinant -1.
  CHECK(bareiss_determinant({0, 1, 1, 0}, 2) == -1);
  CHECK(bareiss_determinant({2, 0, 1, 1, 3, 2, 1, 1, 2}, 3) == 6);
  CHECK(bareiss_determinant({1, 2, 2, 4}, 2) == 0);
}

TEST_CASE("kirchhoff_count") {
  CHECK(kirchhoff_count(graph(3, {{0, 1}, {0, 2}, {1, 2}})) == 3);
  CHECK(kirchhoff_count(realize(book(8))) == 256);
  CHECK(kirchhoff_count(realize(path_square(7))) == 144);
  CHECK(kirchhoff_count(graph(4, {{0, 1}, {2, 3}})) == 0);
  CHECK(kirchhoff_count(SimpleGraph(1, {})) == 1);
  // Cayley: K_6 has 6^4 trees.
  std::vector<Edge> k6;
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = a + 1; b < 6; ++b) k6.emplace_back(a, b);
  CHECK(kirchhoff_count(SimpleGraph(6, k6)) == 1296);
}

TEST_CASE("count_containing") {
  const auto k3 = graph(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto s01 = edges({{0, 1}});
  CHECK(count_containing(k3, s01) == 2);
  CHECK(count_containing(realize(book(4)), s01) == 4);
  const auto g = realize(random_two_tree(9, 3));
  CHECK(count_containing(g, {}) == kirchhoff_count(g));

  const auto cycle = edges({{0, 1}, {0, 2}, {1, 2}});
  try {
    count_containing(k3, cycle);
    FAIL("expected CyclicRequirement");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CyclicRequirement);
  }
  CHECK(count_containing_or_zero(k3, cycle) == 0);
  CHECK_THROWS_AS(count_containing(k3, edges({{0, 3}})), Error);
}

TEST_CASE("count_containing agrees with the subset oracle") {
  SplitMix64 rng(77);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto g = realize(random_two_tree(4 + seed % 5, seed));
    // Random acyclic requirement built greedily.
    std::vector<Edge> s;
    for (const Edge& e : g.edges()) {
      if (rng.uniform(3) != 0) continue;
      s.push_back(e);
      if (!is_acyclic(g.vertex_count(), s)) s.pop_back();
    }
    CHECK(to_u64(count_containing(g, s)) == oracle_containing(g, s));
  }
}

TEST_CASE("deletion-contraction identity") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const auto g = realize(random_two_tree(3 + seed % 10, seed));
    for (const Edge& e : g.edges()) {
      CHECK(kirchhoff_count(g) ==
            count_containing(g, std::span<const Edge>(&e, 1)) + kirchhoff_count(without_edge(g, e)));
    }
  }
}

TEST_CASE("brute_force_count") {
  CHECK(brute_force_count(graph(2, {{0, 1}})) == 1);
  CHECK(brute_force_count(graph(3, {{0, 1}, {0, 2}, {1, 2}})) == 3);
  CHECK(brute_force_count(realize(book(6))) == 48);
  CHECK(brute_force_count(realize(book(6))) == count_book(6));
  try {
    brute_force_count(realize(book(15)));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
}

TEST_CASE("count_via_construction") {
  CHECK(count_via_construction(book(3)) == 3);
  CHECK(count_via_construction(book(5)) == 20);
  CHECK(count_via_construction(path_square(5)) == 21);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = random_two_tree(2 + seed, seed);
    CHECK(count_via_construction(c) == kirchhoff_count(realize(c)));
  }
}

TEST_CASE("verify_bounds") {
  auto both = [](const SimpleGraph& g) {
    const auto b = verify_bounds(g);
    return b.lower_ok && b.upper_ok;
  };
  CHECK(verify_bounds(realize(book(5))).count == 20);
  CHECK(both(realize(book(5))));
  CHECK(both(realize(path_square(5))));
  CHECK(both(graph(3, {{0, 1}, {0, 2}, {1, 2}})));
  CHECK_THROWS_AS(verify_bounds(graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})), NotTwoTreeError);
}

TEST_CASE("Fibonacci ratio approaches phi squared") {
  // F_58 / F_56 vs phi^2 = (3 + sqrt 5) / 2, compared with integers only:
  // |F_58 - phi^2 F_56| < 1e-6 F_56  <=>  |2 F_58 - 3 F_56 - sqrt(5) F_56| < 2e-6 F_56.
  const BigCount a = fibonacci(58);
  const BigCount b = fibonacci(56);
  const BigCount lhs = 2 * a - 3 * b;  // approximates sqrt(5) * b
  // (lhs - sqrt5 b)(lhs + sqrt5 b) = lhs^2 - 5 b^2; bound |lhs^2 - 5 b^2| < 2e-6 b (lhs + sqrt5 b).
  const BigCount diff = boost::multiprecision::abs(lhs * lhs - 5 * b * b);
  CHECK(diff * 1000000 < 2 * b * (2 * lhs));
}
