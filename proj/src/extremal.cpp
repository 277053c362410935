#include "twotree/extremal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "twotree/counting.hpp"
#include "twotree/error.hpp"
#include "twotree/generators.hpp"
#include "twotree/recognition.hpp"

namespace twotree {

namespace {

Edge neighborhood_edge(const SimpleGraph& g, Vertex x) {
  const auto nb = g.neighbors(x);
  return Edge(nb[0], nb[1]);
}

// g with every edge at x replaced by edges to both ends of `onto`.
SimpleGraph rehome(const SimpleGraph& g, Vertex x, const Edge& onto) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!e.touches(x)) edges.push_back(e);
  }
  edges.emplace_back(x, onto.u());
  edges.emplace_back(x, onto.v());
  return SimpleGraph(g.vertex_count(), edges);
}

std::vector<Vertex> all_but(std::size_t n, std::initializer_list<Vertex> drop) {
  std::vector<Vertex> keep;
  for (Vertex x = 0; x < n; ++x) {
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) keep.push_back(x);
  }
  return keep;
}

Edge map_edge(const Edge& e, std::span<const Vertex> index) {
  return Edge(index[e.u()], index[e.v()]);
}

std::vector<Vertex> inverse_map(std::span<const Vertex> original_of, std::size_t n) {
  std::vector<Vertex> index(n, ~Vertex{0});
  for (std::size_t i = 0; i < original_of.size(); ++i) {
    index[original_of[i]] = static_cast<Vertex>(i);
  }
  return index;
}

}  // namespace

SplitReport improve_min(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 5) throw Error(ErrorKind::OutOfRange, "improve_min needs n >= 5");
  const auto simplicial = simplicial_vertices(g);
  if (is_book(g)) throw Error(ErrorKind::IsBook, "graph is already the book B_" + std::to_string(n));

  std::optional<std::pair<Vertex, Vertex>> pair;
  for (std::size_t a = 0; a < simplicial.size() && !pair; ++a) {
    for (std::size_t b = a + 1; b < simplicial.size(); ++b) {
      if (neighborhood_edge(g, simplicial[a]) != neighborhood_edge(g, simplicial[b])) {
        pair = {simplicial[a], simplicial[b]};
        break;
      }
    }
  }
  // A non-book 2-tree always has two simplicial vertices with different
  // neighbourhoods.
  if (!pair) throw Error(ErrorKind::IsBook, "all simplicial neighbourhoods coincide");

  SplitReport r;
  r.v1 = pair->first;
  r.v2 = pair->second;
  r.e1 = neighborhood_edge(g, r.v1);
  r.e2 = neighborhood_edge(g, r.v2);

  const auto keep = all_but(n, {r.v1, r.v2});
  auto h = induced_subgraph(g, keep);
  r.graph_h = std::move(h.graph);
  r.h_vertices = std::move(h.original_of);
  const auto index = inverse_map(r.h_vertices, n);
  const Edge he1 = map_edge(r.e1, index);
  const Edge he2 = map_edge(r.e2, index);
  const Edge both[] = {he1, he2};

  r.t_h = kirchhoff_count(r.graph_h);
  r.beta1 = count_containing(r.graph_h, std::span<const Edge>(&he1, 1));
  r.beta2 = count_containing(r.graph_h, std::span<const Edge>(&he2, 1));
  r.gamma = count_containing(r.graph_h, both);

  r.g1 = rehome(g, r.v2, r.e1);
  r.g2 = rehome(g, r.v1, r.e2);
  r.t_g = kirchhoff_count(g);
  r.t_g1 = kirchhoff_count(r.g1);
  r.t_g2 = kirchhoff_count(r.g2);
  r.winner = r.t_g1 <= r.t_g2 ? 1 : 2;
  return r;
}

std::vector<BigCount> descend_to_book(const SimpleGraph& g) {
  std::vector<BigCount> counts{kirchhoff_count(g)};
  SimpleGraph current = g;
  while (!is_book(current)) {
    SplitReport step = improve_min(current);
    counts.push_back(step.winner_count());
    current = step.winner_graph();
  }
  return counts;
}

SurgeryReport improve_max(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 5) throw Error(ErrorKind::OutOfRange, "improve_max needs n >= 5");
  const auto simplicial = simplicial_vertices(g);
  if (simplicial.size() == 2) {
    throw Error(ErrorKind::AlreadyTwoSimplicial, "graph has exactly two simplicial vertices");
  }

  SurgeryReport r;
  r.v = simplicial[0];
  r.v_prime = simplicial[1];

  // Peel the smallest-index degree-2 vertex outside {v, v'} until none remains.
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> degree(n);
  for (Vertex x = 0; x < n; ++x) degree[x] = g.degree(x);
  std::set<Vertex> eligible;
  for (Vertex x : simplicial) {
    if (x != r.v && x != r.v_prime) eligible.insert(x);
  }
  while (!eligible.empty()) {
    const Vertex x = *eligible.begin();
    eligible.erase(eligible.begin());
    alive[x] = false;
    for (Vertex y : g.neighbors(x)) {
      if (!alive[y]) continue;
      if (--degree[y] == 2 && y != r.v && y != r.v_prime) eligible.insert(y);
    }
  }

  std::vector<Vertex> core;
  for (Vertex x = 0; x < n; ++x) {
    if (alive[x]) core.push_back(x);
  }
  const auto core_graph = induced_subgraph(g, core);
  const auto path = path_ordering_if_two_simplicial(core_graph.graph);
  if (!path) throw Error(ErrorKind::NotTwoTree, "peeled core lacks a two-simplicial path");
  for (Vertex x : path->order) r.core_path.push_back(core.at(x));
  if (r.core_path.front() != r.v || r.core_path.back() != r.v_prime) {
    throw Error(ErrorKind::NotTwoTree, "core path does not run from v to v'");
  }

  // Path index j (v_q = v ... v_1 = v') and, for j >= 3, the neighbours of
  // v_j at its deletion.
  const std::size_t q = r.core_path.size();
  std::vector<std::size_t> index_of(n, 0);
  for (std::size_t k = 0; k < q; ++k) index_of[r.core_path[k]] = q - k;
  auto vertex_at = [&](std::size_t j) { return r.core_path[q - j]; };
  std::map<std::size_t, Edge> deletion_pair;
  for (std::size_t j = 3; j <= q; ++j) {
    std::vector<Vertex> lower;
    for (Vertex y : g.neighbors(vertex_at(j))) {
      if (alive[y] && index_of[y] < j) lower.push_back(y);
    }
    if (lower.size() != 2) throw Error(ErrorKind::NotTwoTree, "core ordering is not 2-simplicial");
    deletion_pair.emplace(j, Edge(lower[0], lower[1]));
  }

  // Group the peeled vertices into pieces hanging off single core edges.
  std::map<Edge, std::vector<Vertex>> hanging;
  std::vector<bool> visited(n, false);
  for (Vertex start = 0; start < n; ++start) {
    if (alive[start] || visited[start]) continue;
    std::vector<Vertex> component{start};
    std::set<Vertex> attach;
    visited[start] = true;
    for (std::size_t k = 0; k < component.size(); ++k) {
      for (Vertex y : g.neighbors(component[k])) {
        if (alive[y]) {
          attach.insert(y);
        } else if (!visited[y]) {
          visited[y] = true;
          component.push_back(y);
        }
      }
    }
    if (attach.size() != 2 || !g.has_edge(*attach.begin(), *attach.rbegin())) {
      throw Error(ErrorKind::NotTwoTree, "hanging piece does not attach along one edge");
    }
    auto& bucket = hanging[Edge(*attach.begin(), *attach.rbegin())];
    bucket.insert(bucket.end(), component.begin(), component.end());
  }

  // Largest index j at which some hanging edge is incident to v_j, or joins
  // the neighbours of v_j; incidence wins on ties.
  std::optional<Edge> incident_best;
  std::optional<Edge> pair_best;
  std::size_t best = 0;
  for (const auto& [e, piece] : hanging) {
    const std::size_t j_incident = std::max(index_of[e.u()], index_of[e.v()]);
    if (j_incident >= 3) {
      if (j_incident > best) {
        best = j_incident;
        incident_best = e;
        pair_best.reset();
      } else if (j_incident == best && !incident_best) {
        incident_best = e;
      }
    }
    for (const auto& [j, pair] : deletion_pair) {
      if (pair != e) continue;
      if (j > best) {
        best = j;
        incident_best.reset();
        pair_best = e;
      } else if (j == best && !incident_best && !pair_best) {
        pair_best = e;
      }
    }
  }
  if (best == 0) throw Error(ErrorKind::NotTwoTree, "no crucial edge found");
  r.j_star = best;
  r.crucial_edge = incident_best ? *incident_best : *pair_best;
  r.role = incident_best ? CrucialRole::EPrime : CrucialRole::E0;
  r.p = q - r.j_star + 1;

  const auto v_nb = g.neighbors(r.v);
  r.e_p = Edge(r.v, v_nb[0]);

  r.moved = hanging.at(r.crucial_edge);
  std::sort(r.moved.begin(), r.moved.end());
  std::vector<Vertex> j_vertices{r.crucial_edge.u(), r.crucial_edge.v()};
  j_vertices.insert(j_vertices.end(), r.moved.begin(), r.moved.end());
  auto j_graph = induced_subgraph(g, j_vertices);
  r.subtree_j = std::move(j_graph.graph);
  r.subtree_j_vertices = std::move(j_graph.original_of);

  // Glue J back along e_p, keeping a shared endpoint fixed.
  Vertex from_a = r.crucial_edge.u();
  Vertex from_b = r.crucial_edge.v();
  Vertex to_a = r.e_p.u();
  Vertex to_b = r.e_p.v();
  if (from_b == to_a || from_a == to_b) std::swap(to_a, to_b);
  std::vector<bool> is_moved(n, false);
  for (Vertex x : r.moved) is_moved[x] = true;
  std::vector<Edge> rewired;
  for (const Edge& e : g.edges()) {
    if (is_moved[e.u()] == is_moved[e.v()]) {
      rewired.push_back(e);
      continue;
    }
    const Vertex inside = is_moved[e.u()] ? e.u() : e.v();
    const Vertex outside = e.other(inside);
    rewired.emplace_back(inside, outside == from_a ? to_a : to_b);
  }
  r.g_prime = SimpleGraph(n, rewired);
  recognize(r.g_prime);

  std::vector<Vertex> kept;
  for (Vertex x = 0; x < n; ++x) {
    if (!is_moved[x]) kept.push_back(x);
  }
  const auto h = induced_subgraph(g, kept);
  const auto h_index = inverse_map(h.original_of, n);
  const Edge h_crucial = map_edge(r.crucial_edge, h_index);
  const Edge h_ep = map_edge(r.e_p, h_index);
  r.t_h_crucial = count_containing(h.graph, std::span<const Edge>(&h_crucial, 1));
  r.t_h_ep = count_containing(h.graph, std::span<const Edge>(&h_ep, 1));
  r.t_g = kirchhoff_count(g);
  r.t_gprime = kirchhoff_count(r.g_prime);
  return r;
}

bool glue_identity_check(const SimpleGraph& h, const SimpleGraph& j, const Edge& shared,
                         std::span<const Edge> s) {
  const std::size_t n = h.vertex_count();
  if (j.vertex_count() != n) throw Error(ErrorKind::BadGlue, "parts use different vertex ranges");
  std::vector<Vertex> h_vertices;
  std::vector<Vertex> j_vertices;
  for (Vertex x = 0; x < n; ++x) {
    const bool in_h = h.degree(x) > 0;
    const bool in_j = j.degree(x) > 0;
    if (in_h) h_vertices.push_back(x);
    if (in_j) j_vertices.push_back(x);
    if (!in_h && !in_j) throw Error(ErrorKind::BadGlue, "vertex in neither part");
    if (in_h && in_j && !shared.touches(x)) {
      throw Error(ErrorKind::BadGlue, "parts overlap outside the shared edge");
    }
  }
  if (!h.has_edge(shared) || !j.has_edge(shared)) {
    throw Error(ErrorKind::BadGlue, "shared edge missing from a part");
  }
  if (h_vertices.size() < 3 || j_vertices.size() < 3) {
    throw Error(ErrorKind::BadGlue, "each part must properly contain the shared edge");
  }
  const auto h_part = induced_subgraph(h, h_vertices);
  const auto j_part = induced_subgraph(j, j_vertices);
  recognize(h_part.graph);
  recognize(j_part.graph);

  // v: smallest simplicial vertex of J off the shared edge.
  std::optional<Vertex> v;
  for (Vertex x : j_vertices) {
    if (j.degree(x) == 2 && !shared.touches(x)) {
      v = x;
      break;
    }
  }
  if (!v) throw Error(ErrorKind::BadGlue, "J has no simplicial vertex off the shared edge");
  const Vertex w = j.neighbors(*v)[0];
  const Vertex z = j.neighbors(*v)[1];
  const Edge e(w, z);
  const Edge vw(*v, w);
  const Edge vz(*v, z);

  for (const Edge& f : s) {
    if (!j.has_edge(f) || f.touches(*v)) {
      throw Error(ErrorKind::ForeignEdge, "required edge not in J - v");
    }
  }
  if (!is_acyclic(n, s)) throw Error(ErrorKind::CyclicRequirement, "S contains a cycle");

  std::vector<Edge> union_edges(h.edges().begin(), h.edges().end());
  for (const Edge& f : j.edges()) {
    if (f != shared) union_edges.push_back(f);
  }
  const SimpleGraph glued(n, union_edges);
  const auto reduced = induced_subgraph(glued, all_but(n, {*v}));
  const auto reduced_index = inverse_map(reduced.original_of, n);

  auto with = [](std::vector<Edge> base, std::initializer_list<Edge> extra) {
    for (const Edge& f : extra) {
      if (std::find(base.begin(), base.end(), f) == base.end()) base.push_back(f);
    }
    return base;
  };
  auto count_glued = [&](const std::vector<Edge>& req) {
    return count_containing_or_zero(glued, req);
  };
  auto count_reduced = [&](const std::vector<Edge>& req) {
    std::vector<Edge> mapped;
    for (const Edge& f : req) mapped.push_back(map_edge(f, reduced_index));
    return count_containing_or_zero(reduced.graph, mapped);
  };

  std::vector<Edge> without_e;
  for (const Edge& f : s) {
    if (f != e) without_e.push_back(f);
  }
  const std::vector<Edge> with_e = with(without_e, {e});

  // Column e not in S.
  const BigCount t = count_reduced(without_e);
  const BigCount s0 = count_reduced(with_e);
  const bool column_out = count_glued(without_e) == 2 * t + s0 &&
                          count_glued(with(without_e, {vw})) == t + s0 &&
                          count_glued(with(without_e, {vz})) == t + s0 &&
                          count_glued(with(without_e, {vw, vz})) == s0;
  // Column e in S.
  const BigCount s1 = count_reduced(with_e);
  const bool column_in = count_glued(with_e) == 2 * s1 &&
                         count_glued(with(with_e, {vw})) == s1 &&
                         count_glued(with(with_e, {vz})) == s1 &&
                         count_glued(with(with_e, {vw, vz})) == 0;
  return column_out && column_in;
}

GlueInstance random_glue_instance(SplitMix64& rng, std::int64_t max_part) {
  if (max_part < 3) throw Error(ErrorKind::OutOfRange, "max_part must be at least 3");
  const auto span_size = static_cast<std::uint64_t>(max_part - 2);
  const auto nh = static_cast<std::size_t>(3 + rng.uniform(span_size));
  const auto nj = static_cast<std::size_t>(3 + rng.uniform(span_size));
  const std::size_t n = nh + nj - 2;

  const auto h_own = realize(random_two_tree(static_cast<std::int64_t>(nh), rng.next()));
  const auto j_own = realize(random_two_tree(static_cast<std::int64_t>(nj), rng.next()));
  const Edge shared = h_own.edges()[rng.uniform(h_own.edge_count())];
  const Edge j_edge = j_own.edges()[rng.uniform(j_own.edge_count())];

  // J's chosen edge lands on the shared edge, its other vertices after H's.
  std::vector<Vertex> label(nj);
  Vertex next = static_cast<Vertex>(nh);
  for (Vertex x = 0; x < nj; ++x) {
    if (x == j_edge.u()) label[x] = shared.u();
    else if (x == j_edge.v()) label[x] = shared.v();
    else label[x] = next++;
  }
  GlueInstance out{SimpleGraph(n, h_own.edges()), relabel(j_own, label, n), shared, {}};

  Vertex v = 0;
  for (Vertex x = 0; x < n; ++x) {
    if (out.j.degree(x) == 2 && !shared.touches(x)) {
      v = x;
      break;
    }
  }
  for (const Edge& f : out.j.edges()) {
    if (f.touches(v) || rng.uniform(2) == 0) continue;
    out.s.push_back(f);
    if (!is_acyclic(n, out.s)) out.s.pop_back();
  }
  return out;
}

ExtremalSummary survey_extremal(std::int64_t n) {
  if (n < 4) throw Error(ErrorKind::OutOfRange, "survey needs n >= 4");
  if (n > kSurveyMaxN) {
    throw Error(ErrorKind::TooLarge, "survey limited to n <= " + std::to_string(kSurveyMaxN));
  }
  struct Entry {
    BigCount count;
    bool book;
    bool two_simplicial;
  };
  std::vector<Entry> entries;
  for (const SimpleGraph& g : all_labeled_two_trees(n)) {
    entries.push_back({kirchhoff_count(g), is_book(g), simplicial_vertices(g).size() == 2});
  }

  ExtremalSummary out;
  out.n = n;
  out.corpus_size = entries.size();
  out.min = entries.front().count;
  out.max = entries.front().count;
  for (const Entry& e : entries) {
    out.min = std::min(out.min, e.count);
    out.max = std::max(out.max, e.count);
  }
  out.min_attainers_all_books = true;
  out.max_attainers_all_two_simplicial = true;
  out.books_all_attain_min = true;
  out.two_simplicial_all_attain_max = true;
  for (const Entry& e : entries) {
    if (e.count == out.min) {
      ++out.min_attainers;
      out.min_attainers_all_books &= e.book;
    }
    if (e.count == out.max) {
      ++out.max_attainers;
      out.max_attainers_all_two_simplicial &= e.two_simplicial;
    }
    if (e.book) {
      ++out.books;
      out.books_all_attain_min &= e.count == out.min;
    }
    if (e.two_simplicial) {
      ++out.two_simplicial;
      out.two_simplicial_all_attain_max &= e.count == out.max;
    }
  }
  return out;
}

}  // namespace twotree
