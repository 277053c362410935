#pragma once

#include <optional>
#include <vector>

#include "twotree/graph.hpp"

namespace twotree {

/// Elimination order (v_n, ..., v_1): order.front() is removed first, the
/// last two entries form the remaining edge.
struct TwoSimplicialOrdering {
  std::vector<Vertex> order;
};

/// Result of recognizing an arbitrary labelled graph as a 2-tree.
///
/// Constructions always use the identity build order, so the recognized
/// graph is carried in construction labels together with the map back to
/// the caller's labels: relabel(realize(construction), vertex_of, n) == g.
struct Recognition {
  TwoTreeConstruction construction;
  /// vertex_of[i] = vertex of g that is the i-th one built.
  std::vector<Vertex> vertex_of;
  TwoSimplicialOrdering ordering;

  SimpleGraph realize_original() const;
};

/// Repeatedly deletes the smallest-index degree-2 vertex whose neighbours are
/// adjacent; succeeds iff this reaches a single edge. The two survivors become
/// the base edge (smaller index first). Throws NotTwoTreeError.
Recognition recognize(const SimpleGraph& g);

bool is_two_tree(const SimpleGraph& g);

/// Degree-2 vertices of a 2-tree with n >= 3, ascending.
/// Throws NotTwoTreeError, or Error(OutOfRange) for n < 3.
std::vector<Vertex> simplicial_vertices(const SimpleGraph& g);

/// True iff g is the n-book: every simplicial vertex has the same
/// neighbourhood {x, y} and every other vertex is x or y. K_3 counts as B_3.
bool is_book(const SimpleGraph& g);

/// For a 2-tree with exactly two simplicial vertices, a 2-simplicial ordering
/// whose consecutive entries are adjacent. It starts at the smaller-index
/// simplicial vertex; its reverse is equally valid. Empty otherwise.
std::optional<TwoSimplicialOrdering> path_ordering_if_two_simplicial(const SimpleGraph& g);

/// Checks the 2-simplicial ordering property on g.
bool is_two_simplicial_ordering(const SimpleGraph& g, const TwoSimplicialOrdering& ordering);

}  // namespace twotree
