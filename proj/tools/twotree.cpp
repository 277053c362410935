#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twotree/counting.hpp"
#include "twotree/enumeration.hpp"
#include "twotree/error.hpp"
#include "twotree/extremal.hpp"
#include "twotree/generators.hpp"
#include "twotree/recognition.hpp"
#include "twotree/report.hpp"
#include "twotree/text_format.hpp"
#include "twotree/verify.hpp"

using namespace twotree;
using nlohmann::json;

namespace {

enum Exit : int { kOk = 0, kUsage = 2, kNotTwoTree = 3, kMismatch = 4, kInvariant = 5 };

const std::vector<std::string> kFamilies{"book", "path-square", "fan", "chain", "random"};

struct Options {
  bool json = false;
  std::string family;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::string in;
  std::string out;
  std::string format = "construction";
  std::string method = "auto";
  std::optional<std::uint64_t> limit;
  std::string suite;
  std::int64_t n_max = 0;
  std::uint64_t trials = 0;
  std::string direction;
};

// Thrown by command bodies to stop with a specific exit code.
struct Stop {
  int code;
  std::string message;
};

struct Report {
  std::string command;
  std::vector<std::string> argv;
  json inputs = json::object();
  json outputs = json::object();
  json checks = json::array();

  void check(const std::string& name, bool passed, const std::string& detail = {}) {
    json c{{"name", name}, {"passed", passed}};
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(std::move(c));
  }
};

TwoTreeConstruction family_construction(const std::string& family, std::int64_t n, std::uint64_t seed) {
  if (family == "book") return book(n);
  if (family == "path-square") return path_square(n);
  if (family == "fan") return fan(n);
  if (family == "chain") return random_chain(n, seed);
  if (family == "random") return random_two_tree(n, seed);
  throw Stop{kUsage, "unknown family '" + family + "'"};
}

// The graph under study, with a construction when one is known.
struct Input {
  SimpleGraph graph;
  std::optional<TwoTreeConstruction> construction;
};

Input load_input(const Options& o, Report& report) {
  if (!o.in.empty()) {
    report.inputs["file"] = o.in;
    std::ifstream file(o.in);
    if (!file) throw Stop{kUsage, "cannot open " + o.in};
    auto parsed = read_graph_file(file);
    if (auto* c = std::get_if<TwoTreeConstruction>(&parsed)) return {realize(*c), *c};
    return {std::get<SimpleGraph>(std::move(parsed)), std::nullopt};
  }
  if (o.family.empty()) throw Stop{kUsage, "give --in FILE or --family NAME --n N"};
  report.inputs["family"] = o.family;
  report.inputs["n"] = o.n;
  report.inputs["seed"] = o.seed;
  auto c = family_construction(o.family, o.n, o.seed);
  return {realize(c), c};
}

// Construction in the caller's labels, or recognition's relabelling.
struct Built {
  TwoTreeConstruction construction;
  std::vector<Vertex> vertex_of;
};

Built build_order(const Input& input) {
  if (input.construction) {
    std::vector<Vertex> identity(input.graph.vertex_count());
    for (Vertex v = 0; v < identity.size(); ++v) identity[v] = v;
    return {*input.construction, identity};
  }
  auto r = recognize(input.graph);
  return {r.construction, r.vertex_of};
}

std::ostream& open_output(const Options& o, std::ofstream& file) {
  if (o.out.empty()) return std::cout;
  file.open(o.out, std::ios::binary);
  if (!file) throw Stop{kUsage, "cannot write " + o.out};
  return file;
}

// Reports go to stderr when stdout carries the command's payload.
void emit(const Options& o, const Report& r, int code, double ms, const std::string& text,
          bool payload_on_stdout, const std::string& error = {}) {
  std::ostream& sink = payload_on_stdout ? std::cerr : std::cout;
  if (o.json) {
    json j{{"command", r.command}, {"argv", r.argv},         {"inputs", r.inputs},
           {"outputs", r.outputs}, {"checks", r.checks},     {"wall_time_ms", ms},
           {"exit_code", code}};
    if (!error.empty()) j["error"] = error;
    sink << j.dump(2) << '\n';
    return;
  }
  if (!error.empty()) std::cerr << "twotree " << r.command << ": " << error << '\n';
  if (!text.empty()) sink << text;
  for (const auto& c : r.checks) {
    if (!c["passed"].get<bool>()) {
      std::cerr << "FAILED: " << c["name"].get<std::string>();
      if (c.contains("detail")) std::cerr << " (" << c["detail"].get<std::string>() << ")";
      std::cerr << '\n';
    }
  }
}

// ---- commands --------------------------------------------------------------
// Each returns the human-readable text; payloads are written directly.

std::string cmd_gen(const Options& o, Report& r) {
  r.inputs = {{"family", o.family}, {"n", o.n}, {"seed", o.seed}, {"format", o.format}};
  const auto c = family_construction(o.family, o.n, o.seed);
  std::ofstream file;
  std::ostream& out = open_output(o, file);
  if (o.format == "edges") write_edge_list(out, realize(c));
  else write_construction(out, c);
  r.outputs = {{"vertices", c.vertex_count()}, {"edges", 2 * c.vertex_count() - 3}};
  return {};
}

std::string cmd_order(const Options& o, Report& r) {
  const auto input = load_input(o, r);
  std::vector<Vertex> order;
  if (auto path = path_ordering_if_two_simplicial(input.graph)) order = path->order;
  else order = recognize(input.graph).ordering.order;
  r.outputs["order"] = order;
  r.check("two-simplicial ordering", is_two_simplicial_ordering(input.graph, TwoSimplicialOrdering{order}));
  std::string text;
  for (std::size_t i = 0; i < order.size(); ++i) text += (i ? " " : "") + std::to_string(order[i]);
  return text + '\n';
}

std::optional<BigCount> closed_form(const std::string& family, const SimpleGraph& g) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  if (family == "book") return count_book(n);
  if (family == "path-square" || family == "fan" || family == "chain") return count_two_simplicial(n);
  if (!family.empty() || n < 3) return std::nullopt;
  if (is_book(g)) return count_book(n);
  if (simplicial_vertices(g).size() == 2) return count_two_simplicial(n);
  return std::nullopt;
}

std::string cmd_count(const Options& o, Report& r) {
  const auto input = load_input(o, r);
  const auto& g = input.graph;
  r.inputs["method"] = o.method;
  if (!o.in.empty() && !o.family.empty()) r.inputs["family"] = o.family;
  r.outputs["n"] = g.vertex_count();

  // A claimed family applies its formula without checking the graph.
  auto formula = [&]() -> BigCount {
    if (o.family.empty()) recognize(g);
    auto value = closed_form(o.family, g);
    if (!value) throw Stop{kUsage, "closed form applies only to books and two-simplicial 2-trees"};
    return *value;
  };
  auto recurrence = [&] { return count_via_construction(build_order(input).construction); };

  BigCount result;
  if (o.method == "kirchhoff") {
    result = kirchhoff_count(g);
  } else if (o.method == "recurrence") {
    result = recurrence();
  } else if (o.method == "closed-form") {
    result = formula();
  } else if (o.method == "brute") {
    result = brute_force_count(g);
  } else {
    result = kirchhoff_count(g);
    const BigCount rec = recurrence();
    r.outputs["kirchhoff"] = to_decimal(result);
    r.outputs["recurrence"] = to_decimal(rec);
    r.check("kirchhoff equals recurrence", rec == result);
    if (auto value = o.family.empty() ? closed_form("", g) : std::optional<BigCount>(formula())) {
      r.outputs["closed_form"] = to_decimal(*value);
      r.check("kirchhoff equals closed form", *value == result);
    }
  }
  r.outputs["count"] = to_decimal(result);
  return to_decimal(result) + '\n';
}

std::string cmd_enumerate(const Options& o, Report& r) {
  const auto input = load_input(o, r);
  const auto built = build_order(input);
  const BigCount expected = kirchhoff_count(input.graph);
  if (o.limit) r.inputs["limit"] = *o.limit;

  std::ofstream file;
  std::ostream& out = open_output(o, file);
  write_tree_stream_header(out, input.graph.vertex_count(), to_decimal(expected));
  std::vector<Edge> mapped;
  std::uint64_t emitted = 0;
  bool truncated = false;
  SpanningTreeStream stream(built.construction);
  while (stream.next()) {
    if (o.limit && emitted == *o.limit) {
      truncated = true;
      break;
    }
    mapped.clear();
    for (const Edge& e : stream.edges()) mapped.emplace_back(built.vertex_of[e.u()], built.vertex_of[e.v()]);
    write_tree_line(out, mapped);
    ++emitted;
  }
  out.flush();

  r.outputs = {{"emitted", emitted}, {"expected", to_decimal(expected)}, {"truncated", truncated}};
  if (!truncated) r.check("emitted equals expected", BigCount(emitted) == expected);
  return "emitted " + std::to_string(emitted) + " of " + to_decimal(expected) +
         (truncated ? " (truncated by --limit)" : "") + '\n';
}

std::string cmd_verify(const Options& o, Report& r) {
  r.inputs = {{"suite", o.suite}, {"n_max", o.n_max}, {"seed", o.seed}, {"trials", o.trials}};
  SuiteResult result;
  if (o.suite == "oracle") result = verify_oracle_suite(o.n_max ? o.n_max : 7);
  else if (o.suite == "extremal") result = verify_extremal_suite(o.n_max ? o.n_max : 7);
  else if (o.suite == "bounds") result = verify_bounds_suite(o.trials ? o.trials : 500, o.seed, o.n_max ? o.n_max : 16);
  else result = verify_identities_suite(o.trials ? o.trials : 50, o.seed);

  std::string text;
  for (const Check& c : result.checks) {
    std::string detail = std::to_string(c.instances - c.failures) + "/" + std::to_string(c.instances);
    if (!c.passed()) detail += ", first failure at " + c.first_failure;
    r.check(c.name, c.passed(), detail);
    text += std::string(c.passed() ? "pass " : "FAIL ") + c.name + " [" + detail + "]\n";
  }
  r.outputs["passed"] = result.passed();
  return text;
}

std::string cmd_survey(const Options& o, Report& r) {
  r.inputs["n"] = o.n;
  const auto s = survey_extremal(o.n);
  r.outputs = to_json(s);
  r.check("minimum equals book count", s.min == count_book(o.n));
  r.check("maximum equals two-simplicial count", s.max == count_two_simplicial(o.n));
  r.check("minimum attained only by books", s.min_attainers_all_books && s.books_all_attain_min);
  r.check("maximum attained only by two-simplicial graphs",
          s.max_attainers_all_two_simplicial && s.two_simplicial_all_attain_max);
  return to_json(s).dump(2) + '\n';
}

std::string cmd_improve(const Options& o, Report& r) {
  const auto input = load_input(o, r);
  r.inputs["direction"] = o.direction;
  SimpleGraph result;
  if (o.direction == "min") {
    const auto s = improve_min(input.graph);
    r.outputs = to_json(s);
    r.check("count decreases", s.winner_count() < s.t_g);
    r.check("split identity", 2 * s.t_g == s.t_g1 + s.t_g2 + 2 * s.gamma && s.gamma >= 1);
    result = s.winner_graph();
  } else {
    const auto s = improve_max(input.graph);
    r.outputs = to_json(s);
    r.check("count increases", s.t_gprime > s.t_g);
    result = s.g_prime;
  }
  std::ofstream file;
  std::ostream& out = open_output(o, file);
  write_edge_list(out, result);
  return {};
}

int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::NotTwoTree ? kNotTwoTree : kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"Spanning trees of 2-trees: generation, counting, enumeration and extremal checks"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Print a JSON run report");

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--in", o.in, "Graph file (edge list or construction)");
    cmd->add_option("--family", o.family, "Generated input family")->check(CLI::IsMember(kFamilies));
    cmd->add_option("--n", o.n, "Vertex count for --family");
    cmd->add_option("--seed", o.seed, "Seed for chain and random families");
  };

  auto* gen = app.add_subcommand("gen", "Generate a 2-tree");
  gen->add_option("family", o.family)->required()->check(CLI::IsMember(kFamilies));
  gen->add_option("n", o.n)->required();
  gen->add_option("--seed", o.seed);
  gen->add_option("--format", o.format)->check(CLI::IsMember({"construction", "edges"}));
  gen->add_option("--out", o.out);

  auto* order = app.add_subcommand("order", "Print a 2-simplicial ordering");
  add_input(order);

  auto* count = app.add_subcommand("count", "Count spanning trees exactly");
  add_input(count);
  count->add_option("--method", o.method)
      ->check(CLI::IsMember({"auto", "kirchhoff", "recurrence", "closed-form", "brute"}));

  auto* enumerate = app.add_subcommand("enumerate", "Stream every spanning tree");
  add_input(enumerate);
  enumerate->add_option("--out", o.out, "Tree stream file (default stdout)");
  enumerate->add_option("--limit", o.limit, "Stop after this many trees (default unlimited)");

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", o.suite)->required()->check(
      CLI::IsMember({"bounds", "extremal", "identities", "oracle"}));
  verify->add_option("--n-max", o.n_max);
  verify->add_option("--seed", o.seed);
  verify->add_option("--trials", o.trials);

  auto* survey = app.add_subcommand("survey", "Min/max over all labelled 2-trees on n vertices");
  survey->add_option("--n", o.n)->required();

  auto* improve = app.add_subcommand("improve", "Apply the count-decreasing or count-increasing surgery");
  improve->add_option("direction", o.direction)->required()->check(CLI::IsMember({"min", "max"}));
  add_input(improve);
  improve->add_option("--out", o.out, "Resulting edge list (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Report report;
  report.command = app.get_subcommands().front()->get_name();
  report.argv.assign(argv, argv + argc);
  const bool payload_on_stdout =
      o.out.empty() && (report.command == "gen" || report.command == "enumerate" || report.command == "improve");

  const auto start = std::chrono::steady_clock::now();
  std::string text;
  std::string error;
  int code = kOk;
  try {
    if (report.command == "gen") text = cmd_gen(o, report);
    else if (report.command == "order") text = cmd_order(o, report);
    else if (report.command == "count") text = cmd_count(o, report);
    else if (report.command == "enumerate") text = cmd_enumerate(o, report);
    else if (report.command == "verify") text = cmd_verify(o, report);
    else if (report.command == "survey") text = cmd_survey(o, report);
    else text = cmd_improve(o, report);

    bool all_passed = true;
    for (const auto& c : report.checks) all_passed = all_passed && c["passed"].get<bool>();
    if (!all_passed) {
      code = report.command == "count" || report.command == "enumerate" ? kMismatch : kInvariant;
    }
  } catch (const Stop& s) {
    code = s.code;
    error = s.message;
  } catch (const Error& e) {
    code = exit_code_for(e);
    error = e.what();
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(o, report, code, ms, error.empty() ? text : std::string{}, payload_on_stdout, error);
  return code;
}
