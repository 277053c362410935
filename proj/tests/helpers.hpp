#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "twotree/big_count.hpp"
#include "twotree/graph.hpp"

namespace testing_support {

inline oracle::EdgeSet to_pairs(std::span<const twotree::Edge> edges) {
  oracle::EdgeSet out;
  for (const auto& e : edges) out.emplace_back(static_cast<int>(e.u()), static_cast<int>(e.v()));
  std::sort(out.begin(), out.end());
  return out;
}

inline oracle::EdgeSet to_pairs(const twotree::SimpleGraph& g) { return to_pairs(g.edges()); }

inline twotree::SimpleGraph graph(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<twotree::Edge> list;
  for (auto [a, b] : edges) list.emplace_back(a, b);
  return twotree::SimpleGraph(n, list);
}

inline std::vector<twotree::Edge> edges(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<twotree::Edge> out;
  for (auto [a, b] : pairs) out.emplace_back(a, b);
  return out;
}

inline std::uint64_t to_u64(const twotree::BigCount& c) { return c.convert_to<std::uint64_t>(); }

}  // namespace testing_support
