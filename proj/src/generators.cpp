#include "twotree/generators.hpp"

#include <string>
#include <unordered_set>

#include "twotree/error.hpp"

namespace twotree {

namespace {

void require_n(std::int64_t n, std::int64_t minimum, const char* family) {
  if (n < minimum) {
    throw Error(ErrorKind::OutOfRange, std::string(family) + " needs n >= " +
                                           std::to_string(minimum) + ", got " + std::to_string(n));
  }
}

// Existing edges of a partial construction in edge-id order.
Edge edge_by_id(const std::vector<Edge>& attachments, std::uint64_t id) {
  if (id == 0) return TwoTreeConstruction::base();
  const auto w = static_cast<Vertex>((id + 3) / 2);
  const Edge& attach = attachments[w - 2];
  return id % 2 == 1 ? Edge(attach.u(), w) : Edge(attach.v(), w);
}

}  // namespace

TwoTreeConstruction book(std::int64_t n) {
  require_n(n, 2, "book");
  return TwoTreeConstruction(static_cast<std::size_t>(n),
                             std::vector<Edge>(static_cast<std::size_t>(n - 2), Edge(0, 1)));
}

TwoTreeConstruction path_square(std::int64_t n) {
  require_n(n, 2, "path-square");
  std::vector<Edge> attach;
  for (Vertex v = 2; v < n; ++v) attach.emplace_back(v - 2, v - 1);
  return TwoTreeConstruction(static_cast<std::size_t>(n), std::move(attach));
}

TwoTreeConstruction fan(std::int64_t n) {
  require_n(n, 2, "fan");
  std::vector<Edge> attach;
  for (Vertex v = 2; v < n; ++v) attach.emplace_back(0, v - 1);
  return TwoTreeConstruction(static_cast<std::size_t>(n), std::move(attach));
}

ChainGrowth grow_chain(const TwoTreeConstruction& host, const Edge& e0, std::size_t p,
                       SplitMix64& rng) {
  if (p < 1) throw Error(ErrorKind::OutOfRange, "chain length p must be >= 1");
  const std::size_t n_host = host.vertex_count();
  if (!realize(host).has_edge(e0)) throw Error(ErrorKind::ForeignEdge, "e0 not in host");

  std::vector<Edge> attach(host.attachments().begin(), host.attachments().end());
  Edge current = e0;
  Edge e_prime;
  for (std::size_t i = 0; i < p; ++i) {
    const auto w = static_cast<Vertex>(n_host + i);
    attach.push_back(current);
    const bool take_larger = rng.uniform(2) == 1;
    const Edge chosen(take_larger ? current.v() : current.u(), w);
    const Edge other(take_larger ? current.u() : current.v(), w);
    if (i == 0) e_prime = other;
    current = chosen;
  }
  ChainGrowth out{TwoTreeConstruction(n_host + p, std::move(attach)), p, e0, e_prime, current};
  return out;
}

TwoTreeConstruction random_chain(std::int64_t n, std::uint64_t seed) {
  require_n(n, 3, "chain");
  SplitMix64 rng(seed);
  return grow_chain(TwoTreeConstruction(2, {}), Edge(0, 1), static_cast<std::size_t>(n - 2), rng)
      .construction;
}

TwoTreeConstruction random_two_tree(std::int64_t n, std::uint64_t seed) {
  require_n(n, 2, "random");
  SplitMix64 rng(seed);
  std::vector<Edge> attach;
  attach.reserve(static_cast<std::size_t>(n - 2));
  for (std::uint64_t v = 2; v < static_cast<std::uint64_t>(n); ++v) {
    attach.push_back(edge_by_id(attach, rng.uniform(2 * v - 3)));
  }
  return TwoTreeConstruction(static_cast<std::size_t>(n), std::move(attach));
}

std::vector<TwoTreeConstruction> all_labeled_two_tree_constructions(std::int64_t n) {
  require_n(n, 3, "exhaustive corpus");
  if (n > kExhaustiveMaxN) {
    throw Error(ErrorKind::TooLarge, "exhaustive corpus limited to n <= " +
                                         std::to_string(kExhaustiveMaxN) + ", got " +
                                         std::to_string(n));
  }
  const auto size = static_cast<std::size_t>(n);
  auto bit = [](const Edge& e) { return std::uint64_t{1} << (e.v() * (e.v() - 1) / 2 + e.u()); };

  std::vector<TwoTreeConstruction> out;
  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> attach;
  std::vector<std::uint64_t> choice;
  std::uint64_t mask = bit(TwoTreeConstruction::base());

  // Iterative DFS over attach-edge ids; level k places vertex k + 2.
  attach.reserve(size - 2);
  choice.reserve(size - 2);
  auto push = [&](std::uint64_t id) {
    const auto w = static_cast<Vertex>(attach.size() + 2);
    const Edge e = edge_by_id(attach, id);
    attach.push_back(e);
    choice.push_back(id);
    mask |= bit(Edge(e.u(), w)) | bit(Edge(e.v(), w));
  };
  auto pop = [&] {
    const auto w = static_cast<Vertex>(attach.size() + 1);
    const Edge e = attach.back();
    mask &= ~(bit(Edge(e.u(), w)) | bit(Edge(e.v(), w)));
    attach.pop_back();
    choice.pop_back();
  };

  while (attach.size() < size - 2) push(0);
  while (true) {
    if (seen.insert(mask).second) out.emplace_back(size, attach);
    // Backtrack to the deepest level with an untried edge.
    bool moved = false;
    while (!attach.empty()) {
      const std::uint64_t id = choice.back();
      const std::uint64_t options = 2 * (attach.size() + 1) - 3;
      pop();
      if (id + 1 < options) {
        push(id + 1);
        moved = true;
        break;
      }
    }
    if (!moved) break;
    while (attach.size() < size - 2) push(0);
  }
  return out;
}

std::vector<SimpleGraph> all_labeled_two_trees(std::int64_t n) {
  std::vector<SimpleGraph> out;
  for (const auto& c : all_labeled_two_tree_constructions(n)) out.push_back(realize(c));
  return out;
}

}  // namespace twotree
