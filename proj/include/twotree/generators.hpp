#pragma once

#include <cstdint>
#include <vector>

#include "twotree/graph.hpp"

namespace twotree {

/// SplitMix64 (Steele, Lea, Flood 2014). Every random generator in this
/// library draws from it, so a seed reproduces the same graph on any
/// platform and in any language binding.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection: draws below 2^64 mod bound are
  /// discarded. bound must be positive.
  std::uint64_t uniform(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Independent stream seeded from the next output.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

/// B_n: every vertex attached to the base edge {0, 1}.
TwoTreeConstruction book(std::int64_t n);

/// Square of the path 0-1-...-(n-1): vertex i attaches to {i-2, i-1}.
TwoTreeConstruction path_square(std::int64_t n);

/// Vertex 0 adjacent to all others, 1..n-1 a path.
TwoTreeConstruction fan(std::int64_t n);

/// A chain grown from `host`: vertex w_1 attaches to e0, and each later w_i
/// attaches to one of the two edges of w_{i-1}, chosen by a fair coin.
struct ChainGrowth {
  TwoTreeConstruction construction;
  std::size_t p = 0;
  Edge e0;
  /// Edge of w_1 other than e_1 (the one w_2 attaches to, or the last edge when p = 1).
  Edge e_prime;
  /// e_p, an edge of w_p chosen by a final coin flip.
  Edge e_last;
};

/// Throws Error(OutOfRange) for p < 1 and Error(ForeignEdge) if e0 is not an
/// edge of the host.
ChainGrowth grow_chain(const TwoTreeConstruction& host, const Edge& e0, std::size_t p,
                       SplitMix64& rng);

/// A 2-tree with exactly two simplicial vertices, grown as a chain from K_2.
/// Throws Error(OutOfRange) for n < 3.
TwoTreeConstruction random_chain(std::int64_t n, std::uint64_t seed);

/// Each vertex v attaches to one of the 2v - 3 existing edges, uniformly, in
/// edge-id order (base, then (x, w), (y, w) for each earlier w).
TwoTreeConstruction random_two_tree(std::int64_t n, std::uint64_t seed);

inline constexpr std::int64_t kExhaustiveMaxN = 9;

/// Every 2-tree on {0..n-1} buildable in identity order from base {0, 1},
/// one construction per distinct edge set, in depth-first order of the
/// attach-edge choices. Throws Error(OutOfRange) for n < 3 and
/// Error(TooLarge) for n > 9.
std::vector<TwoTreeConstruction> all_labeled_two_tree_constructions(std::int64_t n);

std::vector<SimpleGraph> all_labeled_two_trees(std::int64_t n);

}  // namespace twotree
