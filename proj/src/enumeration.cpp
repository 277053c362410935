#include "twotree/enumeration.hpp"

#include <algorithm>
#include <string>

#include "twotree/error.hpp"

namespace twotree {

namespace {

bool is_tree_on_prefix(const SpanningTree& t, std::size_t vertices) {
  if (vertices == 0 || t.size() != vertices - 1) return false;
  for (const Edge& e : t.edges()) {
    if (e.v() >= vertices) return false;
  }
  return is_acyclic(vertices, t.edges());
}

std::uint32_t edge_id(const TwoTreeConstruction& c, const Edge& e) {
  if (e.u() == 0 && e.v() == 1) return 0;
  // Edge (x, w) with w >= 2 was created by w: id 2w-3 for its smaller
  // attach endpoint and 2w-2 for the larger.
  const Vertex w = e.v();
  return c.attachment(w).u() == e.u() ? 2 * w - 3 : 2 * w - 2;
}

}  // namespace

std::vector<SpanningTree> extend_tree(const SpanningTree& t, Vertex v, const Edge& attach) {
  if (attach.v() >= v) {
    throw Error(ErrorKind::InvalidTree, "attach edge must lie on vertices below " +
                                            std::to_string(v));
  }
  if (!is_tree_on_prefix(t, v)) {
    throw Error(ErrorKind::InvalidTree, "not a spanning tree on vertices 0.." +
                                            std::to_string(v == 0 ? 0 : v - 1));
  }
  const Edge vx(attach.u(), v);
  const Edge vy(attach.v(), v);
  std::vector<SpanningTree> out;
  out.reserve(3);
  for (const Edge& leaf : {vx, vy}) {
    std::vector<Edge> edges(t.edges().begin(), t.edges().end());
    edges.push_back(leaf);
    out.emplace_back(std::move(edges));
  }
  if (t.contains(attach)) {
    std::vector<Edge> edges;
    edges.reserve(t.size() + 1);
    for (const Edge& e : t.edges()) {
      if (e != attach) edges.push_back(e);
    }
    edges.push_back(vx);
    edges.push_back(vy);
    out.emplace_back(std::move(edges));
  }
  return out;
}

SpanningTree choice_vector_decode(const TwoTreeConstruction& c,
                                  std::span<const ExtensionChoice> choices) {
  const std::size_t n = c.vertex_count();
  if (choices.size() != n - 2) {
    throw Error(ErrorKind::InvalidConstruction, "expected " + std::to_string(n - 2) +
                                                    " choices, got " +
                                                    std::to_string(choices.size()));
  }
  std::vector<Edge> edges{TwoTreeConstruction::base()};
  for (Vertex v = 2; v < n; ++v) {
    const Edge& attach = c.attachment(v);
    switch (choices[v - 2]) {
      case ExtensionChoice::UseVX:
        edges.emplace_back(attach.u(), v);
        break;
      case ExtensionChoice::UseVY:
        edges.emplace_back(attach.v(), v);
        break;
      case ExtensionChoice::SplitXY: {
        auto it = std::find(edges.begin(), edges.end(), attach);
        if (it == edges.end()) {
          throw Error(ErrorKind::IllegalSplit,
                      "vertex " + std::to_string(v) + " splits an edge absent from the tree");
        }
        edges.erase(it);
        edges.emplace_back(attach.u(), v);
        edges.emplace_back(attach.v(), v);
        break;
      }
    }
  }
  return SpanningTree(std::move(edges));
}

SpanningTreeStream::SpanningTreeStream(const TwoTreeConstruction& c)
    : n_(c.vertex_count()),
      attach_id_(n_ - 2),
      in_tree_(2 * n_ - 3, 0),
      choice_(n_ - 2, ExtensionChoice::UseVX) {
  graph_edges_.reserve(2 * n_ - 3);
  graph_edges_.push_back(TwoTreeConstruction::base());
  for (Vertex v = 2; v < n_; ++v) {
    const Edge& attach = c.attachment(v);
    graph_edges_.emplace_back(attach.u(), v);
    graph_edges_.emplace_back(attach.v(), v);
    attach_id_[v - 2] = edge_id(c, attach);
  }
  current_.reserve(n_ - 1);
}

std::size_t SpanningTreeStream::state_bytes() const noexcept {
  return graph_edges_.capacity() * sizeof(Edge) + attach_id_.capacity() * sizeof(std::uint32_t) +
         in_tree_.capacity() + choice_.capacity() * sizeof(ExtensionChoice) +
         current_.capacity() * sizeof(Edge);
}

void SpanningTreeStream::apply(std::size_t level, ExtensionChoice choice) {
  const std::size_t vx = 2 * level + 1;  // id of (x, v) for v = level + 2
  choice_[level] = choice;
  switch (choice) {
    case ExtensionChoice::UseVX: in_tree_[vx] = 1; break;
    case ExtensionChoice::UseVY: in_tree_[vx + 1] = 1; break;
    case ExtensionChoice::SplitXY:
      in_tree_[attach_id_[level]] = 0;
      in_tree_[vx] = 1;
      in_tree_[vx + 1] = 1;
      break;
  }
}

void SpanningTreeStream::undo(std::size_t level) {
  const std::size_t vx = 2 * level + 1;
  in_tree_[vx] = 0;
  in_tree_[vx + 1] = 0;
  if (choice_[level] == ExtensionChoice::SplitXY) in_tree_[attach_id_[level]] = 1;
}

bool SpanningTreeStream::advance(std::size_t level) {
  const ExtensionChoice was = choice_[level];
  undo(level);
  if (was == ExtensionChoice::UseVX) {
    apply(level, ExtensionChoice::UseVY);
    return true;
  }
  if (was == ExtensionChoice::UseVY && in_tree_[attach_id_[level]]) {
    apply(level, ExtensionChoice::SplitXY);
    return true;
  }
  return false;
}

void SpanningTreeStream::descend(std::size_t from_level) {
  for (std::size_t level = from_level; level < choice_.size(); ++level) {
    apply(level, ExtensionChoice::UseVX);
  }
}

void SpanningTreeStream::collect() {
  current_.clear();
  for (std::size_t id = 0; id < in_tree_.size(); ++id) {
    if (in_tree_[id]) current_.push_back(graph_edges_[id]);
  }
}

bool SpanningTreeStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    in_tree_[0] = 1;
    descend(0);
    collect();
    return true;
  }
  for (std::size_t level = choice_.size(); level-- > 0;) {
    if (advance(level)) {
      descend(level + 1);
      collect();
      return true;
    }
  }
  done_ = true;
  current_.clear();
  return false;
}

std::uint64_t enumerate_all(const TwoTreeConstruction& c, EnumerationMode mode,
                            const TreeVisitor& visit) {
  std::uint64_t emitted = 0;
  if (mode == EnumerationMode::Streaming) {
    SpanningTreeStream stream(c);
    while (stream.next()) {
      visit(stream.edges());
      ++emitted;
    }
    return emitted;
  }
  std::vector<SpanningTree> list{SpanningTree({TwoTreeConstruction::base()})};
  for (Vertex v = 2; v < c.vertex_count(); ++v) {
    std::vector<SpanningTree> next_list;
    next_list.reserve(list.size() * 3);
    for (const SpanningTree& t : list) {
      for (SpanningTree& grown : extend_tree(t, v, c.attachment(v))) {
        next_list.push_back(std::move(grown));
      }
    }
    list = std::move(next_list);
  }
  for (const SpanningTree& t : list) {
    visit(t.edges());
    ++emitted;
  }
  return emitted;
}

std::vector<SpanningTree> all_spanning_trees(const TwoTreeConstruction& c, EnumerationMode mode) {
  std::vector<SpanningTree> out;
  enumerate_all(c, mode, [&](std::span<const Edge> edges) {
    out.emplace_back(std::vector<Edge>(edges.begin(), edges.end()));
  });
  return out;
}

}  // namespace twotree
