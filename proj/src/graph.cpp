#include "twotree/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "twotree/error.hpp"

namespace twotree {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidConstruction: return "InvalidConstruction";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ForeignEdge: return "ForeignEdge";
    case ErrorKind::NotTwoTree: return "NotTwoTree";
    case ErrorKind::InvalidTree: return "InvalidTree";
    case ErrorKind::IllegalSplit: return "IllegalSplit";
    case ErrorKind::CyclicRequirement: return "CyclicRequirement";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::IsBook: return "IsBook";
    case ErrorKind::AlreadyTwoSimplicial: return "AlreadyTwoSimplicial";
    case ErrorKind::BadGlue: return "BadGlue";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

std::string_view to_string(NotTwoTreeReason reason) {
  switch (reason) {
    case NotTwoTreeReason::WrongEdgeCount: return "WrongEdgeCount";
    case NotTwoTreeReason::Disconnected: return "Disconnected";
    case NotTwoTreeReason::NoDegree2Simplicial: return "NoDegree2Simplicial";
    case NotTwoTreeReason::NonAdjacentNeighbors: return "NonAdjacentNeighbors";
  }
  return "Unknown";
}

Edge::Edge(Vertex a, Vertex b) : u_(std::min(a, b)), v_(std::max(a, b)) {
  if (a == b) {
    throw Error(ErrorKind::InvalidConstruction, "loop at vertex " + std::to_string(a));
  }
}

SimpleGraph::SimpleGraph(std::size_t n, std::span<const Edge> edges)
    : adj_(n), edges_(edges.begin(), edges.end()) {
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.v() >= n) {
      throw Error(ErrorKind::OutOfRange,
                  "edge endpoint " + std::to_string(e.v()) + " >= n=" + std::to_string(n));
    }
    if (i > 0 && edges_[i - 1] == e) {
      throw Error(ErrorKind::InvalidConstruction, "repeated edge " + std::to_string(e.u()) +
                                                      "-" + std::to_string(e.v()));
    }
    adj_[e.u()].push_back(e.v());
    adj_[e.v()].push_back(e.u());
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const {
  if (a >= adj_.size() || b >= adj_.size()) return false;
  const auto& list = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
  const Vertex target = adj_[a].size() <= adj_[b].size() ? b : a;
  return std::binary_search(list.begin(), list.end(), target);
}

bool SimpleGraph::is_connected() const {
  if (adj_.empty()) return true;
  std::vector<bool> seen(adj_.size(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj_[x]) {
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == adj_.size();
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> keep) {
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> index(g.vertex_count(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.vertex_count() || index[keep[i]] != kAbsent) {
      throw Error(ErrorKind::OutOfRange, "bad vertex in induced subgraph selection");
    }
    index[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u()] != kAbsent && index[e.v()] != kAbsent) {
      edges.emplace_back(index[e.u()], index[e.v()]);
    }
  }
  return {SimpleGraph(keep.size(), edges), std::vector<Vertex>(keep.begin(), keep.end())};
}

SimpleGraph relabel(const SimpleGraph& g, std::span<const Vertex> label, std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.emplace_back(label[e.u()], label[e.v()]);
  return SimpleGraph(n, edges);
}

SimpleGraph without_edge(const SimpleGraph& g, const Edge& e) {
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  if (edges.size() == g.edge_count()) {
    throw Error(ErrorKind::ForeignEdge, "edge not in graph");
  }
  return SimpleGraph(g.vertex_count(), edges);
}

TwoTreeConstruction::TwoTreeConstruction(std::size_t n, std::vector<Edge> attachments)
    : attachments_(std::move(attachments)) {
  if (n < 2) throw Error(ErrorKind::OutOfRange, "a 2-tree needs n >= 2, got " + std::to_string(n));
  if (attachments_.size() != n - 2) {
    throw Error(ErrorKind::InvalidConstruction,
                "expected " + std::to_string(n - 2) + " attachments, got " +
                    std::to_string(attachments_.size()));
  }
  // Edges present after adding vertex v: the base plus (w, x), (w, y) for w < v.
  for (std::size_t i = 0; i < attachments_.size(); ++i) {
    const Vertex v = static_cast<Vertex>(i + 2);
    const Edge& e = attachments_[i];
    bool present = false;
    if (e.v() < v) {
      if (e.u() == 0 && e.v() == 1) {
        present = true;
      } else {
        present = attachments_[e.v() - 2].touches(e.u());
      }
    }
    if (!present) {
      throw Error(ErrorKind::InvalidConstruction,
                  "vertex " + std::to_string(v) + " attaches to absent edge " +
                      std::to_string(e.u()) + "-" + std::to_string(e.v()));
    }
  }
}

SimpleGraph realize(const TwoTreeConstruction& c) { return prefix_graph(c, c.vertex_count()); }

SimpleGraph prefix_graph(const TwoTreeConstruction& c, std::size_t i) {
  if (i < 2 || i > c.vertex_count()) {
    throw Error(ErrorKind::OutOfRange, "prefix size " + std::to_string(i) + " not in [2, " +
                                           std::to_string(c.vertex_count()) + "]");
  }
  std::vector<Edge> edges{TwoTreeConstruction::base()};
  edges.reserve(2 * i - 3);
  for (Vertex v = 2; v < i; ++v) {
    const Edge& e = c.attachment(v);
    edges.emplace_back(e.u(), v);
    edges.emplace_back(e.v(), v);
  }
  return SimpleGraph(i, edges);
}

TwoTreeConstruction prefix_construction(const TwoTreeConstruction& c, std::size_t i) {
  if (i < 2 || i > c.vertex_count()) {
    throw Error(ErrorKind::OutOfRange, "prefix size " + std::to_string(i));
  }
  auto all = c.attachments();
  return TwoTreeConstruction(i, std::vector<Edge>(all.begin(), all.begin() + (i - 2)));
}

SpanningTree::SpanningTree(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
}

bool SpanningTree::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool is_acyclic(std::size_t n, std::span<const Edge> edges) {
  detail::DisjointSets sets(n);
  for (const Edge& e : edges) {
    if (e.v() >= n || !sets.unite(e.u(), e.v())) return false;
  }
  return true;
}

bool is_spanning_tree(const SimpleGraph& g, std::span<const Edge> t) {
  for (const Edge& e : t) {
    if (!g.has_edge(e)) {
      throw Error(ErrorKind::ForeignEdge,
                  "edge " + std::to_string(e.u()) + "-" + std::to_string(e.v()) + " not in graph");
    }
  }
  const std::size_t n = g.vertex_count();
  if (n == 0 || t.size() != n - 1) return false;
  // n - 1 edges without a cycle on n vertices connect everything.
  return is_acyclic(n, t);
}

namespace detail {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = a;
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

}  // namespace detail

}  // namespace twotree
