#include "twotree/counting.hpp"

#include <string>

#include "twotree/error.hpp"
#include "twotree/recognition.hpp"

namespace twotree {

BigCount fibonacci(std::int64_t k) {
  if (k < -1) throw Error(ErrorKind::OutOfRange, "Fibonacci index " + std::to_string(k) + " < -1");
  if (k == -1) return 1;
  BigCount previous = 0;
  BigCount current = 1;
  if (k == 0) return previous;
  for (std::int64_t i = 1; i < k; ++i) {
    BigCount next = previous + current;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

BigCount count_book(std::int64_t n) {
  if (n < 2) throw Error(ErrorKind::OutOfRange, "book needs n >= 2, got " + std::to_string(n));
  if (n == 2) return 1;
  BigCount out = n;
  out <<= static_cast<unsigned>(n - 3);
  return out;
}

BigCount count_two_simplicial(std::int64_t n) {
  if (n < 2) throw Error(ErrorKind::OutOfRange, "2-tree needs n >= 2, got " + std::to_string(n));
  return fibonacci(2 * n - 2);
}

ChainState ChainState::start(BigCount alpha, BigCount beta) {
  if (beta < 0 || beta > alpha) {
    throw Error(ErrorKind::OutOfRange, "chain seeds need 0 <= beta <= alpha");
  }
  ChainState state;
  state.t = alpha;
  state.s = beta;
  state.alpha = std::move(alpha);
  state.beta = std::move(beta);
  return state;
}

bool ChainState::satisfies_closed_form() const {
  const auto q = static_cast<std::int64_t>(p);
  return t == fibonacci(2 * q + 1) * alpha + fibonacci(2 * q) * beta &&
         s == fibonacci(2 * q) * alpha + fibonacci(2 * q - 1) * beta;
}

ChainState chain_step(const ChainState& state) {
  ChainState next = state;
  next.p = state.p + 1;
  next.t = 2 * state.t + state.s;
  next.s = state.t + state.s;
  return next;
}

ChainEdgeCounts chain_edge_counts(const BigCount& alpha, const BigCount& beta, std::int64_t p) {
  if (p < 1) throw Error(ErrorKind::OutOfRange, "chain length p must be >= 1");
  if (beta < 0 || beta > alpha) {
    throw Error(ErrorKind::OutOfRange, "chain seeds need 0 <= beta <= alpha");
  }
  const BigCount f_up = fibonacci(2 * p + 1);
  const BigCount f_mid = fibonacci(2 * p);
  const BigCount f_down = fibonacci(2 * p - 1);
  return {f_up * beta, f_down * alpha + f_mid * beta, f_mid * alpha + f_down * beta};
}

BigCount bareiss_determinant(std::vector<BigCount> m, std::size_t k) {
  if (k == 0) return 1;
  int sign = 1;
  BigCount previous = 1;
  auto at = [&](std::size_t r, std::size_t c) -> BigCount& { return m[r * k + c]; };
  for (std::size_t col = 0; col + 1 < k; ++col) {
    if (at(col, col) == 0) {
      std::size_t swap_row = col + 1;
      while (swap_row < k && at(swap_row, col) == 0) ++swap_row;
      if (swap_row == k) return 0;
      for (std::size_t c = 0; c < k; ++c) std::swap(at(col, c), at(swap_row, c));
      sign = -sign;
    }
    const BigCount& pivot = at(col, col);
    for (std::size_t r = col + 1; r < k; ++r) {
      for (std::size_t c = col + 1; c < k; ++c) {
        // Exact division: Sylvester's identity keeps every entry integral.
        at(r, c) = (at(r, c) * pivot - at(r, col) * at(col, c)) / previous;
      }
      at(r, col) = 0;
    }
    previous = pivot;
  }
  return sign * at(k - 1, k - 1);
}

BigCount kirchhoff_count_multigraph(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) return 0;
  if (n == 1) return 1;
  // Reduced Laplacian: drop vertex 0.
  const std::size_t k = n - 1;
  std::vector<BigCount> lap(k * k, BigCount(0));
  for (const Edge& e : edges) {
    const std::size_t a = e.u();
    const std::size_t b = e.v();
    if (a != 0) lap[(a - 1) * k + (a - 1)] += 1;
    if (b != 0) lap[(b - 1) * k + (b - 1)] += 1;
    if (a != 0 && b != 0) {
      lap[(a - 1) * k + (b - 1)] -= 1;
      lap[(b - 1) * k + (a - 1)] -= 1;
    }
  }
  return bareiss_determinant(std::move(lap), k);
}

BigCount kirchhoff_count(const SimpleGraph& g) {
  return kirchhoff_count_multigraph(g.vertex_count(), g.edges());
}

BigCount count_containing(const SimpleGraph& g, std::span<const Edge> required) {
  const std::size_t n = g.vertex_count();
  detail::DisjointSets sets(n);
  for (const Edge& e : required) {
    if (!g.has_edge(e)) {
      throw Error(ErrorKind::ForeignEdge, "required edge " + std::to_string(e.u()) + "-" +
                                              std::to_string(e.v()) + " not in graph");
    }
    if (!sets.unite(e.u(), e.v())) {
      throw Error(ErrorKind::CyclicRequirement, "required edges contain a cycle");
    }
  }
  // Contract: one vertex per class, loops dropped, parallel edges kept.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_id(n, kUnset);
  std::size_t classes = 0;
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t root = sets.find(x);
    if (class_id[root] == kUnset) class_id[root] = classes++;
  }
  std::vector<Edge> contracted;
  contracted.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const auto a = static_cast<Vertex>(class_id[sets.find(e.u())]);
    const auto b = static_cast<Vertex>(class_id[sets.find(e.v())]);
    if (a != b) contracted.emplace_back(a, b);
  }
  return kirchhoff_count_multigraph(classes, contracted);
}

BigCount count_containing_or_zero(const SimpleGraph& g, std::span<const Edge> required) {
  if (!is_acyclic(g.vertex_count(), required)) {
    for (const Edge& e : required) {
      if (!g.has_edge(e)) throw Error(ErrorKind::ForeignEdge, "required edge not in graph");
    }
    return 0;
  }
  return count_containing(g, required);
}

BigCount brute_force_count(const SimpleGraph& g) {
  const std::size_t m = g.edge_count();
  const std::size_t n = g.vertex_count();
  if (m > kBruteForceMaxEdges) {
    throw Error(ErrorKind::TooLarge, std::to_string(m) + " edges exceeds the brute-force limit of " +
                                         std::to_string(kBruteForceMaxEdges));
  }
  if (n == 0) return 0;
  const std::size_t k = n - 1;
  if (k > m) return 0;
  const auto all = g.edges();
  // Walk all k-subsets of edge indices in lexicographic order.
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::vector<Edge> subset(k);
  BigCount count = 0;
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = all[pick[i]];
    if (is_spanning_tree(g, subset)) ++count;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

BigCount count_via_construction(const TwoTreeConstruction& c) {
  BigCount total = 1;
  for (Vertex v = 2; v < c.vertex_count(); ++v) {
    const SimpleGraph previous = prefix_graph(c, v);
    const Edge attach = c.attachment(v);
    total = 2 * total + count_containing(previous, std::span<const Edge>(&attach, 1));
  }
  return total;
}

BoundsCheck verify_bounds(const SimpleGraph& g) {
  recognize(g);
  const auto exponent = static_cast<unsigned>(g.vertex_count() - 2);
  BoundsCheck out;
  out.count = kirchhoff_count(g);
  out.lower_ok = BigCount(1) << exponent <= out.count;
  out.upper_ok = out.count <= boost::multiprecision::pow(BigCount(3), exponent);
  return out;
}

}  // namespace twotree
