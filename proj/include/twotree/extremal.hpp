#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "twotree/big_count.hpp"
#include "twotree/generators.hpp"
#include "twotree/graph.hpp"

namespace twotree {

/// Outcome of splitting a non-book 2-tree G at two simplicial vertices v1, v2
/// with different neighbourhoods. G_i re-homes both of them onto N(v_i).
///
/// Identities: t_g = 4 t_h + 2 beta1 + 2 beta2 + gamma and
/// t_gi = 4 t_h + 4 beta_i, hence t_g1 + t_g2 + 2 gamma = 2 t_g.
struct SplitReport {
  Vertex v1 = 0;
  Vertex v2 = 0;
  /// H = G - {v1, v2}, relabelled; h_vertices maps H's vertices back to G.
  SimpleGraph graph_h;
  std::vector<Vertex> h_vertices;
  Edge e1;  ///< N(v1), in G's labels
  Edge e2;  ///< N(v2), in G's labels
  BigCount t_h;
  BigCount beta1;
  BigCount beta2;
  BigCount gamma;
  BigCount t_g;
  BigCount t_g1;
  BigCount t_g2;
  SimpleGraph g1;
  SimpleGraph g2;
  int winner = 1;  ///< 1 or 2; ties go to G_1

  const SimpleGraph& winner_graph() const { return winner == 1 ? g1 : g2; }
  const BigCount& winner_count() const { return winner == 1 ? t_g1 : t_g2; }
};

/// Throws Error(IsBook), NotTwoTreeError, or Error(OutOfRange) for n < 5.
SplitReport improve_min(const SimpleGraph& g);

/// Applies improve_min until a book is reached; returns the counts seen,
/// starting with T(g).
std::vector<BigCount> descend_to_book(const SimpleGraph& g);

enum class CrucialRole { EPrime, E0 };

/// Reattachment of the hanging piece J from the crucial edge e to the edge
/// e_p at the simplicial end v of the two-simplicial core, which lies in
/// more spanning trees of H = G - (J - e).
struct SurgeryReport {
  Vertex v = 0;
  Vertex v_prime = 0;
  /// Core H' left after peeling simplicial vertices other than v, v'; listed
  /// from v to v' as a 2-simplicial path ordering.
  std::vector<Vertex> core_path;
  Edge crucial_edge;
  CrucialRole role = CrucialRole::E0;
  std::size_t j_star = 0;
  std::size_t p = 0;
  Edge e_p;
  /// Vertices of J outside the crucial edge, ascending.
  std::vector<Vertex> moved;
  /// J = G[crucial edge + moved], relabelled; subtree_j_vertices maps back.
  SimpleGraph subtree_j;
  std::vector<Vertex> subtree_j_vertices;
  SimpleGraph g_prime;
  BigCount t_g;
  BigCount t_gprime;
  /// T(H; e) and T(H; e_p) for H = G minus the moved vertices.
  BigCount t_h_crucial;
  BigCount t_h_ep;
};

/// Throws Error(AlreadyTwoSimplicial), NotTwoTreeError, or
/// Error(OutOfRange) for n < 5.
SurgeryReport improve_max(const SimpleGraph& g);

/// Checks the four spanning-tree identities obtained by deleting a simplicial
/// vertex v of J from H u J, in both the e-not-in-S and e-in-S forms, where
/// e joins the neighbours of v and S (a subset of E(J - v)) is the required set.
///
/// h and j live on a common vertex set [0, N): a vertex belongs to a part
/// iff it has an edge there. The parts must cover [0, N) and meet exactly in
/// `shared`. Throws Error(BadGlue), Error(ForeignEdge), Error(CyclicRequirement)
/// or NotTwoTreeError.
bool glue_identity_check(const SimpleGraph& h, const SimpleGraph& j, const Edge& shared,
                         std::span<const Edge> s);

/// Arguments for glue_identity_check: random 2-trees H and J with 3..max_part
/// vertices glued along a random edge of each, and a random acyclic S in
/// E(J - v) for the vertex v the check will delete.
struct GlueInstance {
  SimpleGraph h;
  SimpleGraph j;
  Edge shared;
  std::vector<Edge> s;
};

/// Throws Error(OutOfRange) for max_part < 3.
GlueInstance random_glue_instance(SplitMix64& rng, std::int64_t max_part = 7);

struct ExtremalSummary {
  std::int64_t n = 0;
  std::size_t corpus_size = 0;
  BigCount min;
  BigCount max;
  std::size_t min_attainers = 0;
  std::size_t max_attainers = 0;
  std::size_t books = 0;
  std::size_t two_simplicial = 0;
  /// Every graph attaining the minimum is a book.
  bool min_attainers_all_books = false;
  /// Every graph attaining the maximum has exactly two simplicial vertices.
  bool max_attainers_all_two_simplicial = false;
  /// Converse directions: every book attains the minimum, and likewise for
  /// two-simplicial graphs and the maximum.
  bool books_all_attain_min = false;
  bool two_simplicial_all_attain_max = false;
};

/// Scans all_labeled_two_trees(n). Throws Error(OutOfRange) for n < 4 and
/// Error(TooLarge) for n > 8.
ExtremalSummary survey_extremal(std::int64_t n);

inline constexpr std::int64_t kSurveyMaxN = 8;

}  // namespace twotree
