#include "twotree/report.hpp"

namespace twotree {

nlohmann::json count_json(std::size_t n, const std::string& family, const BigCount& count) {
  return {{"n", n}, {"family", family}, {"count", to_decimal(count)}};
}

nlohmann::json edge_json(const Edge& e) { return nlohmann::json::array({e.u(), e.v()}); }

nlohmann::json edges_json(std::span<const Edge> edges) {
  auto out = nlohmann::json::array();
  for (const Edge& e : edges) out.push_back(edge_json(e));
  return out;
}

nlohmann::json to_json(const ExtremalSummary& s) {
  return {
      {"n", s.n},
      {"corpus_size", s.corpus_size},
      {"min", to_decimal(s.min)},
      {"max", to_decimal(s.max)},
      {"min_attainers", s.min_attainers},
      {"max_attainers", s.max_attainers},
      {"books", s.books},
      {"two_simplicial", s.two_simplicial},
      {"min_attainers_all_books", s.min_attainers_all_books},
      {"max_attainers_all_two_simplicial", s.max_attainers_all_two_simplicial},
      {"books_all_attain_min", s.books_all_attain_min},
      {"two_simplicial_all_attain_max", s.two_simplicial_all_attain_max},
  };
}

nlohmann::json to_json(const SplitReport& r) {
  return {
      {"v1", r.v1},
      {"v2", r.v2},
      {"e1", edge_json(r.e1)},
      {"e2", edge_json(r.e2)},
      {"t_h", to_decimal(r.t_h)},
      {"beta1", to_decimal(r.beta1)},
      {"beta2", to_decimal(r.beta2)},
      {"gamma", to_decimal(r.gamma)},
      {"t_g", to_decimal(r.t_g)},
      {"t_g1", to_decimal(r.t_g1)},
      {"t_g2", to_decimal(r.t_g2)},
      {"winner", r.winner},
      {"result_edges", edges_json(r.winner_graph().edges())},
  };
}

nlohmann::json to_json(const SurgeryReport& r) {
  return {
      {"v", r.v},
      {"v_prime", r.v_prime},
      {"core_path", r.core_path},
      {"crucial_edge", edge_json(r.crucial_edge)},
      {"crucial_role", r.role == CrucialRole::EPrime ? "e_prime" : "e0"},
      {"j_star", r.j_star},
      {"p", r.p},
      {"e_p", edge_json(r.e_p)},
      {"moved", r.moved},
      {"t_h_crucial", to_decimal(r.t_h_crucial)},
      {"t_h_ep", to_decimal(r.t_h_ep)},
      {"t_g", to_decimal(r.t_g)},
      {"t_gprime", to_decimal(r.t_gprime)},
      {"result_edges", edges_json(r.g_prime.edges())},
  };
}

}  // namespace twotree
