#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace twotree {

/// Dense 0-based vertex index.
using Vertex = std::uint32_t;

/// Undirected edge, always stored with u < v.
class Edge {
 public:
  Edge() = default;
  /// Throws Error(InvalidConstruction) on a loop.
  Edge(Vertex a, Vertex b);

  Vertex u() const noexcept { return u_; }
  Vertex v() const noexcept { return v_; }
  bool touches(Vertex x) const noexcept { return x == u_ || x == v_; }
  /// The endpoint that is not x; x must be an endpoint.
  Vertex other(Vertex x) const noexcept { return x == u_ ? v_ : u_; }

  auto operator<=>(const Edge&) const = default;

 private:
  Vertex u_ = 0;
  Vertex v_ = 1;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{e.u()} << 32) | e.v());
  }
};

/// Undirected simple graph over vertices [0, n) with sorted adjacency lists.
/// Immutable once built.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Throws Error(OutOfRange) for an endpoint >= n and Error(InvalidConstruction)
  /// for a repeated edge.
  SimpleGraph(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t degree(Vertex x) const { return adj_.at(x).size(); }
  std::span<const Vertex> neighbors(Vertex x) const { return adj_.at(x); }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u(), e.v()); }
  /// All edges in canonical sorted order.
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool is_connected() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.adj_.size() == b.adj_.size() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

/// Subgraph induced by `keep` (any order), relabelled densely in the order
/// given. `original_of[i]` is the source vertex of new vertex i.
struct InducedSubgraph {
  SimpleGraph graph;
  std::vector<Vertex> original_of;
};

InducedSubgraph induced_subgraph(const SimpleGraph& g, std::span<const Vertex> keep);

/// Applies a vertex map: vertex i of g becomes label[i] in a graph on n vertices.
SimpleGraph relabel(const SimpleGraph& g, std::span<const Vertex> label, std::size_t n);

SimpleGraph without_edge(const SimpleGraph& g, const Edge& e);

/// A 2-tree given by its build order. Vertex 0 and 1 form the base edge;
/// vertex i (i >= 2) is attached to both endpoints of attachment(i), which
/// must already be an edge when vertex i is added.
class TwoTreeConstruction {
 public:
  /// Throws Error(OutOfRange) if n < 2, Error(InvalidConstruction) if
  /// attachments.size() != n - 2 or an attach edge is absent at attach time.
  TwoTreeConstruction(std::size_t n, std::vector<Edge> attachments);

  std::size_t vertex_count() const noexcept { return attachments_.size() + 2; }
  static Edge base() { return Edge(0, 1); }
  /// Attach edge of vertex v, 2 <= v < n.
  const Edge& attachment(Vertex v) const { return attachments_.at(v - 2); }
  std::span<const Edge> attachments() const noexcept { return attachments_; }

  friend bool operator==(const TwoTreeConstruction&, const TwoTreeConstruction&) = default;

 private:
  std::vector<Edge> attachments_;
};

SimpleGraph realize(const TwoTreeConstruction& c);

/// G_i: the graph on the first i constructed vertices. Throws
/// Error(OutOfRange) unless 2 <= i <= n.
SimpleGraph prefix_graph(const TwoTreeConstruction& c, std::size_t i);

/// Construction truncated to its first i vertices.
TwoTreeConstruction prefix_construction(const TwoTreeConstruction& c, std::size_t i);

/// Edge set of a spanning tree, kept sorted.
class SpanningTree {
 public:
  SpanningTree() = default;
  explicit SpanningTree(std::vector<Edge> edges);

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool contains(const Edge& e) const;

  auto operator<=>(const SpanningTree&) const = default;

 private:
  std::vector<Edge> edges_;
};

/// True iff `t` has n - 1 edges forming a connected acyclic subgraph on all
/// n vertices of g. Throws Error(ForeignEdge) if some edge is not in g.
bool is_spanning_tree(const SimpleGraph& g, std::span<const Edge> t);

/// True iff the edges contain no cycle (as a multiset; a repeated edge is a cycle).
bool is_acyclic(std::size_t n, std::span<const Edge> edges);

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  /// False if already joined.
  bool unite(std::size_t a, std::size_t b);

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace detail

}  // namespace twotree
