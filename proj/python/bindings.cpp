#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twotree/counting.hpp"
#include "twotree/enumeration.hpp"
#include "twotree/error.hpp"
#include "twotree/extremal.hpp"
#include "twotree/generators.hpp"
#include "twotree/recognition.hpp"
#include "twotree/report.hpp"
#include "twotree/verify.hpp"

namespace py = pybind11;
using namespace twotree;

namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

SimpleGraph to_graph(std::size_t n, const Pairs& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.emplace_back(a, b);
  return SimpleGraph(n, edges);
}

Pairs to_pairs(std::span<const Edge> edges) {
  Pairs out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.emplace_back(e.u(), e.v());
  return out;
}

py::object to_int(const BigCount& value) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(to_decimal(value).c_str(), nullptr, 10));
}

std::pair<std::size_t, Pairs> graph_tuple(const SimpleGraph& g) { return {g.vertex_count(), to_pairs(g.edges())}; }

TwoTreeConstruction family(const std::string& name, std::int64_t n, std::uint64_t seed) {
  if (name == "book") return book(n);
  if (name == "path-square") return path_square(n);
  if (name == "fan") return fan(n);
  if (name == "chain") return random_chain(n, seed);
  if (name == "random") return random_two_tree(n, seed);
  throw Error(ErrorKind::OutOfRange, "unknown family '" + name + "'");
}

nlohmann::json suite_json(const SuiteResult& r) {
  auto checks = nlohmann::json::array();
  for (const Check& c : r.checks) {
    checks.push_back({{"name", c.name}, {"instances", c.instances}, {"failures", c.failures},
                      {"passed", c.passed()}, {"first_failure", c.first_failure}});
  }
  return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spanning trees of 2-trees";

  static py::exception<Error> error(m, "TwoTreeError", PyExc_ValueError);
  static py::exception<NotTwoTreeError> not_two_tree(m, "NotTwoTreeError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const NotTwoTreeError& e) {
      not_two_tree(e.what());
    } catch (const Error& e) {
      error(e.what());
    }
  });

  m.def("generate", [](const std::string& name, std::int64_t n, std::uint64_t seed) {
    return graph_tuple(realize(family(name, n, seed)));
  }, py::arg("family"), py::arg("n"), py::arg("seed") = 0);

  m.def("is_two_tree", [](std::size_t n, const Pairs& e) { return is_two_tree(to_graph(n, e)); });
  m.def("is_book", [](std::size_t n, const Pairs& e) { return is_book(to_graph(n, e)); });
  m.def("simplicial_vertices", [](std::size_t n, const Pairs& e) { return simplicial_vertices(to_graph(n, e)); });
  m.def("elimination_order", [](std::size_t n, const Pairs& e) { return recognize(to_graph(n, e)).ordering.order; });

  m.def("kirchhoff_count", [](std::size_t n, const Pairs& e) { return to_int(kirchhoff_count(to_graph(n, e))); });
  m.def("count_containing", [](std::size_t n, const Pairs& e, const Pairs& s) {
    const auto required = to_graph(n, s).edges();
    return to_int(count_containing(to_graph(n, e), required));
  });
  m.def("brute_force_count", [](std::size_t n, const Pairs& e) { return to_int(brute_force_count(to_graph(n, e))); });
  m.def("count_book", [](std::int64_t n) { return to_int(count_book(n)); });
  m.def("count_two_simplicial", [](std::int64_t n) { return to_int(count_two_simplicial(n)); });
  m.def("fibonacci", [](std::int64_t k) { return to_int(fibonacci(k)); });

  m.def("spanning_trees", [](std::size_t n, const Pairs& e, std::optional<std::uint64_t> limit) {
    const auto r = recognize(to_graph(n, e));
    std::vector<Pairs> out;
    SpanningTreeStream stream(r.construction);
    while ((!limit || out.size() < *limit) && stream.next()) {
      Pairs tree;
      for (const Edge& t : stream.edges()) {
        const Edge mapped(r.vertex_of[t.u()], r.vertex_of[t.v()]);
        tree.emplace_back(mapped.u(), mapped.v());
      }
      out.push_back(std::move(tree));
    }
    return out;
  }, py::arg("n"), py::arg("edges"), py::arg("limit") = py::none());

  // Structured results cross the boundary as JSON text; the package decodes them.
  m.def("_survey_extremal", [](std::int64_t n) { return to_json(survey_extremal(n)).dump(); });
  m.def("_improve_min", [](std::size_t n, const Pairs& e) { return to_json(improve_min(to_graph(n, e))).dump(); });
  m.def("_improve_max", [](std::size_t n, const Pairs& e) { return to_json(improve_max(to_graph(n, e))).dump(); });
  m.def("_verify", [](const std::string& suite, std::int64_t n_max, std::uint64_t trials, std::uint64_t seed) {
    if (suite == "oracle") return suite_json(verify_oracle_suite(n_max)).dump();
    if (suite == "extremal") return suite_json(verify_extremal_suite(n_max)).dump();
    if (suite == "bounds") return suite_json(verify_bounds_suite(trials, seed, n_max)).dump();
    if (suite == "identities") return suite_json(verify_identities_suite(trials, seed)).dump();
    throw Error(ErrorKind::OutOfRange, "unknown suite '" + suite + "'");
  });
}
