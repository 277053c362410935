#include "twotree/recognition.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "twotree/error.hpp"

namespace twotree {

namespace {

// Deletion state over the live vertices of a fixed graph.
class Eliminator {
 public:
  explicit Eliminator(const SimpleGraph& g)
      : g_(g), alive_(g.vertex_count(), true), degree_(g.vertex_count()) {
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
      degree_[x] = g.degree(x);
      refresh(x);
    }
  }

  std::size_t live_count() const { return g_.vertex_count() - removed_; }
  const std::set<Vertex>& eligible() const { return eligible_; }
  std::size_t degree(Vertex x) const { return degree_[x]; }
  bool alive(Vertex x) const { return alive_[x]; }

  std::array<Vertex, 2> live_pair(Vertex x) const {
    std::array<Vertex, 2> out{};
    std::size_t k = 0;
    for (Vertex y : g_.neighbors(x)) {
      if (alive_[y] && k < 2) out[k++] = y;
    }
    return out;
  }

  void remove(Vertex x) {
    alive_[x] = false;
    eligible_.erase(x);
    ++removed_;
    for (Vertex y : g_.neighbors(x)) {
      if (!alive_[y]) continue;
      --degree_[y];
      refresh(y);
    }
  }

  bool any_live_degree_two() const {
    for (Vertex x = 0; x < g_.vertex_count(); ++x) {
      if (alive_[x] && degree_[x] == 2) return true;
    }
    return false;
  }

 private:
  void refresh(Vertex x) {
    eligible_.erase(x);
    if (degree_[x] != 2) return;
    const auto [a, b] = live_pair(x);
    if (g_.has_edge(a, b)) eligible_.insert(x);
  }

  const SimpleGraph& g_;
  std::vector<bool> alive_;
  std::vector<std::size_t> degree_;
  std::set<Vertex> eligible_;
  std::size_t removed_ = 0;
};

}  // namespace

SimpleGraph Recognition::realize_original() const {
  return relabel(realize(construction), vertex_of, vertex_of.size());
}

Recognition recognize(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw Error(ErrorKind::OutOfRange, "recognition needs n >= 2");
  if (g.edge_count() != 2 * n - 3) {
    throw NotTwoTreeError(NotTwoTreeReason::WrongEdgeCount,
                          std::to_string(g.edge_count()) + " edges, expected " +
                              std::to_string(2 * n - 3));
  }
  if (!g.is_connected()) throw NotTwoTreeError(NotTwoTreeReason::Disconnected);

  Eliminator elim(g);
  std::vector<Vertex> removed;
  std::vector<std::array<Vertex, 2>> attach;
  removed.reserve(n - 2);
  attach.reserve(n - 2);
  while (elim.live_count() > 2) {
    if (elim.eligible().empty()) {
      throw NotTwoTreeError(elim.any_live_degree_two() ? NotTwoTreeReason::NonAdjacentNeighbors
                                                       : NotTwoTreeReason::NoDegree2Simplicial,
                            std::to_string(elim.live_count()) + " vertices left");
    }
    const Vertex x = *elim.eligible().begin();
    attach.push_back(elim.live_pair(x));
    removed.push_back(x);
    elim.remove(x);
  }

  std::vector<Vertex> survivors;
  for (Vertex x = 0; x < n; ++x) {
    if (elim.alive(x)) survivors.push_back(x);
  }
  // Edge count and connectivity guarantee the survivors are adjacent.
  std::vector<Vertex> vertex_of{survivors[0], survivors[1]};
  vertex_of.insert(vertex_of.end(), removed.rbegin(), removed.rend());
  std::vector<Vertex> index_of(n);
  for (std::size_t i = 0; i < n; ++i) index_of[vertex_of[i]] = static_cast<Vertex>(i);

  std::vector<Edge> attachments;
  attachments.reserve(n - 2);
  for (std::size_t k = removed.size(); k-- > 0;) {
    attachments.emplace_back(index_of[attach[k][0]], index_of[attach[k][1]]);
  }
  TwoSimplicialOrdering ordering{std::vector<Vertex>(vertex_of.rbegin(), vertex_of.rend())};
  return Recognition{TwoTreeConstruction(n, std::move(attachments)), std::move(vertex_of),
                     std::move(ordering)};
}

bool is_two_tree(const SimpleGraph& g) {
  try {
    recognize(g);
    return true;
  } catch (const NotTwoTreeError&) {
    return false;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::OutOfRange) return false;
    throw;
  }
}

std::vector<Vertex> simplicial_vertices(const SimpleGraph& g) {
  if (g.vertex_count() < 3) {
    throw Error(ErrorKind::OutOfRange, "simplicial vertices need n >= 3");
  }
  recognize(g);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (g.degree(x) == 2) out.push_back(x);
  }
  return out;
}

bool is_book(const SimpleGraph& g) {
  const auto simplicial = simplicial_vertices(g);
  const std::size_t n = g.vertex_count();
  if (n == 3) return true;
  if (simplicial.size() != n - 2) return false;
  const auto first = g.neighbors(simplicial.front());
  return std::all_of(simplicial.begin(), simplicial.end(), [&](Vertex x) {
    const auto nb = g.neighbors(x);
    return std::equal(nb.begin(), nb.end(), first.begin(), first.end());
  });
}

bool is_two_simplicial_ordering(const SimpleGraph& g, const TwoSimplicialOrdering& ordering) {
  const std::size_t n = g.vertex_count();
  if (ordering.order.size() != n || n < 2) return false;
  std::vector<bool> seen(n, false);
  for (Vertex x : ordering.order) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  // Position k in `order` holds v_{n-k}; later positions are still present.
  std::vector<std::size_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[ordering.order[k]] = k;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const Vertex x = ordering.order[k];
    std::vector<Vertex> later;
    for (Vertex y : g.neighbors(x)) {
      if (pos[y] > k) later.push_back(y);
    }
    if (later.size() != 2 || !g.has_edge(later[0], later[1])) return false;
  }
  return g.has_edge(ordering.order[n - 2], ordering.order[n - 1]);
}

std::optional<TwoSimplicialOrdering> path_ordering_if_two_simplicial(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  recognize(g);
  if (n == 2) return TwoSimplicialOrdering{{0, 1}};
  const auto simplicial = simplicial_vertices(g);
  if (simplicial.size() != 2) return std::nullopt;

  // Peel from the start end while keeping the far end until last.
  const Vertex start = simplicial[0];
  const Vertex keep = simplicial[1];
  Eliminator elim(g);
  std::vector<Vertex> order;
  order.reserve(n);
  Vertex previous = start;
  order.push_back(start);
  elim.remove(start);
  while (elim.live_count() > 2) {
    std::optional<Vertex> pick;
    for (Vertex x : elim.eligible()) {
      if (x != keep && g.has_edge(previous, x)) {
        pick = x;
        break;
      }
    }
    if (!pick) return std::nullopt;
    order.push_back(*pick);
    elim.remove(*pick);
    previous = *pick;
  }
  for (Vertex x = 0; x < n; ++x) {
    if (elim.alive(x) && x != keep) order.push_back(x);
  }
  order.push_back(keep);

  TwoSimplicialOrdering result{std::move(order)};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!g.has_edge(result.order[k], result.order[k + 1])) return std::nullopt;
  }
  if (!is_two_simplicial_ordering(g, result)) return std::nullopt;
  return result;
}

}  // namespace twotree
