#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "twotree/graph.hpp"

namespace twotree {

/// How a newly added vertex v with attach edge {x, y} (x < y) enters a tree.
enum class ExtensionChoice : std::uint8_t {
  UseVX,    ///< add vx; v is a leaf
  UseVY,    ///< add vy; v is a leaf
  SplitXY,  ///< replace xy by vx and vy; legal only when xy is in the tree
};

/// All spanning trees of G_i obtained from a spanning tree `t` of G_{i-1}
/// (the vertices 0..v-1) by adding vertex v on `attach`: UseVX, UseVY, then
/// SplitXY when xy is in t. Throws Error(InvalidTree) if t is not a spanning
/// tree on 0..v-1 or attach is out of range.
std::vector<SpanningTree> extend_tree(const SpanningTree& t, Vertex v, const Edge& attach);

/// The tree reached by applying one choice per vertex 2..n-1 in build order.
/// Throws Error(IllegalSplit) or Error(InvalidConstruction) on a bad length.
SpanningTree choice_vector_decode(const TwoTreeConstruction& c,
                                  std::span<const ExtensionChoice> choices);

/// Depth-first cursor over all spanning trees of a 2-tree.
///
/// The state is one choice per vertex plus a membership flag per graph
/// edge; each step applies or undoes a single choice, so memory stays O(n)
/// and time per emitted tree is O(n). Trees come out in lexicographic order
/// of their choice vectors (UseVX < UseVY < SplitXY, vertex 2 most significant).
class SpanningTreeStream {
 public:
  explicit SpanningTreeStream(const TwoTreeConstruction& c);

  /// Advances to the next tree; false once every tree has been produced.
  bool next();

  /// Current tree edges, ordered by edge id (base first, then the two edges
  /// of each added vertex). Valid until the following next().
  std::span<const Edge> edges() const noexcept { return current_; }
  SpanningTree tree() const { return SpanningTree(current_); }
  std::span<const ExtensionChoice> choices() const noexcept { return choice_; }
  std::size_t vertex_count() const noexcept { return n_; }

  /// Bytes of cursor state; depends only on n.
  std::size_t state_bytes() const noexcept;

 private:
  void apply(std::size_t level, ExtensionChoice choice);
  void undo(std::size_t level);
  bool advance(std::size_t level);
  void descend(std::size_t from_level);
  void collect();

  std::size_t n_;
  std::vector<Edge> graph_edges_;           // indexed by edge id
  std::vector<std::uint32_t> attach_id_;    // per level: id of the attach edge
  std::vector<std::uint8_t> in_tree_;       // per edge id
  std::vector<ExtensionChoice> choice_;     // per level (vertex level + 2)
  std::vector<Edge> current_;
  bool started_ = false;
  bool done_ = false;
};

enum class EnumerationMode { Streaming, FaithfulList };

using TreeVisitor = std::function<void(std::span<const Edge>)>;

/// Calls `visit` once per spanning tree of realize(c); returns the number
/// emitted. FaithfulList builds every level's full list before moving on
/// and passes each tree in canonical (sorted) edge order.
std::uint64_t enumerate_all(const TwoTreeConstruction& c, EnumerationMode mode,
                            const TreeVisitor& visit);

/// Convenience: collect every tree.
std::vector<SpanningTree> all_spanning_trees(const TwoTreeConstruction& c,
                                             EnumerationMode mode = EnumerationMode::Streaming);

}  // namespace twotree
