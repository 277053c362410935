#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "twotree/big_count.hpp"
#include "twotree/graph.hpp"

namespace twotree {

/// F_k for k >= -1, with F_{-1} = 1, F_0 = 0, F_1 = 1.
/// Throws Error(OutOfRange) for k < -1.
BigCount fibonacci(std::int64_t k);

/// n * 2^(n-3); 1 for n = 2. Throws Error(OutOfRange) for n < 2.
BigCount count_book(std::int64_t n);

/// F_{2n-2}. Throws Error(OutOfRange) for n < 2.
BigCount count_two_simplicial(std::int64_t n);

/// State of a chain grown from a host with alpha = T(host), beta = T(host; e0).
/// After p steps t = T(G_p) and s = T(G_p; e_p).
struct ChainState {
  BigCount alpha;
  BigCount beta;
  std::uint64_t p = 0;
  BigCount t;
  BigCount s;

  /// p = 0 state (t = alpha, s = beta). Throws Error(OutOfRange) unless
  /// 0 <= beta <= alpha.
  static ChainState start(BigCount alpha, BigCount beta);
  /// True iff t and s match the Fibonacci closed form for p.
  bool satisfies_closed_form() const;

  friend bool operator==(const ChainState&, const ChainState&) = default;
};

/// One vertex further along the chain: t' = 2t + s, s' = t + s.
ChainState chain_step(const ChainState& state);

/// (T(G_p; e0), T(G_p; e'), T(G_p; e_p)) from the closed forms.
/// Throws Error(OutOfRange) for p < 1 or beta > alpha.
struct ChainEdgeCounts {
  BigCount e0;
  BigCount e_prime;
  BigCount e_last;
};
ChainEdgeCounts chain_edge_counts(const BigCount& alpha, const BigCount& beta, std::int64_t p);

/// Spanning-tree count of a multigraph given as edge multiset on n vertices
/// (loops ignored), via a Laplacian cofactor with fraction-free elimination.
BigCount kirchhoff_count_multigraph(std::size_t n, std::span<const Edge> edges);

/// Exact spanning-tree count from a Laplacian cofactor (Kirchhoff). 0 if disconnected.
BigCount kirchhoff_count(const SimpleGraph& g);

/// Determinant of a square integer matrix (Bareiss). Row-major, size k*k.
BigCount bareiss_determinant(std::vector<BigCount> matrix, std::size_t k);

/// T(g; required): trees containing every required edge, by contracting the
/// required edges and counting the resulting multigraph.
/// Throws Error(ForeignEdge) or Error(CyclicRequirement).
BigCount count_containing(const SimpleGraph& g, std::span<const Edge> required);

/// Like count_containing but a cyclic requirement yields 0.
BigCount count_containing_or_zero(const SimpleGraph& g, std::span<const Edge> required);

inline constexpr std::size_t kBruteForceMaxEdges = 25;

/// Counts (n-1)-edge subsets that are spanning trees.
/// Throws Error(TooLarge) if g has more than 25 edges.
BigCount brute_force_count(const SimpleGraph& g);

/// T(G) via T(G_i) = 2 T(G_{i-1}) + T(G_{i-1}; attach_i).
BigCount count_via_construction(const TwoTreeConstruction& c);

struct BoundsCheck {
  bool lower_ok = false;
  bool upper_ok = false;
  BigCount count;
};

/// 2^(n-2) <= T(g) <= 3^(n-2). Throws NotTwoTreeError.
BoundsCheck verify_bounds(const SimpleGraph& g);

}  // namespace twotree
