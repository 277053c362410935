#include "twotree/text_format.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "twotree/error.hpp"

namespace twotree {

namespace {

std::vector<std::string> next_fields(std::istream& in, std::size_t& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::vector<std::string> out;
    for (std::string f; fields >> f;) out.push_back(f);
    if (!out.empty()) return out;
  }
  return {};
}

std::uint64_t to_number(const std::string& field, std::size_t line_no) {
  if (field.empty() || !std::all_of(field.begin(), field.end(), [](char ch) {
        return ch >= '0' && ch <= '9';
      })) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected a nonnegative "
                                  "integer, got '" + field + "'");
  }
  try {
    return std::stoull(field);
  } catch (const std::out_of_range&) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": number too large");
  }
}

void expect_fields(const std::vector<std::string>& fields, std::size_t count, std::size_t line_no) {
  if (fields.size() != count) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected " +
                                      std::to_string(count) + " fields, got " +
                                      std::to_string(fields.size()));
  }
}

SimpleGraph parse_edge_list_body(std::istream& in, std::uint64_t n, std::uint64_t m,
                                 std::size_t& line_no) {
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    const auto fields = next_fields(in, line_no);
    if (fields.empty()) throw Error(ErrorKind::Parse, "edge list ended after " + std::to_string(i) + " edges");
    expect_fields(fields, 2, line_no);
    const auto u = to_number(fields[0], line_no);
    const auto v = to_number(fields[1], line_no);
    if (u >= v || v >= n) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": need 0 <= u < v < n");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return SimpleGraph(n, edges);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

TwoTreeConstruction parse_construction_body(std::istream& in, std::uint64_t n,
                                            std::size_t& line_no) {
  if (n < 2) throw Error(ErrorKind::Parse, "construction needs n >= 2");
  std::vector<Edge> attach;
  for (std::uint64_t v = 2; v < n; ++v) {
    const auto fields = next_fields(in, line_no);
    if (fields.empty()) throw Error(ErrorKind::Parse, "construction ended before vertex " + std::to_string(v));
    expect_fields(fields, 3, line_no);
    if (to_number(fields[0], line_no) != v) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected vertex " +
                                        std::to_string(v) + " in build order");
    }
    const auto x = to_number(fields[1], line_no);
    const auto y = to_number(fields[2], line_no);
    if (x == y || x >= v || y >= v) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) +
                                        ": attach endpoints must be distinct earlier vertices");
    }
    attach.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
  }
  return TwoTreeConstruction(n, std::move(attach));
}

}  // namespace

void write_edge_list(std::ostream& out, const SimpleGraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u() << ' ' << e.v() << '\n';
}

SimpleGraph read_edge_list(std::istream& in) {
  std::size_t line_no = 0;
  const auto header = next_fields(in, line_no);
  if (header.empty()) throw Error(ErrorKind::Parse, "empty input");
  expect_fields(header, 2, line_no);
  return parse_edge_list_body(in, to_number(header[0], line_no), to_number(header[1], line_no),
                              line_no);
}

void write_construction(std::ostream& out, const TwoTreeConstruction& c) {
  out << c.vertex_count() << '\n';
  for (Vertex v = 2; v < c.vertex_count(); ++v) {
    const Edge& e = c.attachment(v);
    out << v << ' ' << e.u() << ' ' << e.v() << '\n';
  }
}

TwoTreeConstruction read_construction(std::istream& in) {
  std::size_t line_no = 0;
  const auto header = next_fields(in, line_no);
  if (header.empty()) throw Error(ErrorKind::Parse, "empty input");
  expect_fields(header, 1, line_no);
  return parse_construction_body(in, to_number(header[0], line_no), line_no);
}

std::variant<SimpleGraph, TwoTreeConstruction> read_graph_file(std::istream& in) {
  std::size_t line_no = 0;
  const auto header = next_fields(in, line_no);
  if (header.empty()) throw Error(ErrorKind::Parse, "empty input");
  if (header.size() == 1) return parse_construction_body(in, to_number(header[0], line_no), line_no);
  expect_fields(header, 2, line_no);
  return parse_edge_list_body(in, to_number(header[0], line_no), to_number(header[1], line_no),
                              line_no);
}

void write_tree_stream_header(std::ostream& out, std::size_t n,
                              const std::optional<std::string>& expected) {
  out << "# n=" << n << " expected=" << expected.value_or("unknown") << '\n';
}

std::string format_tree(std::span<const Edge> edges) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  std::string line;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0) line += ' ';
    line += std::to_string(sorted[i].u());
    line += '-';
    line += std::to_string(sorted[i].v());
  }
  return line;
}

void write_tree_line(std::ostream& out, std::span<const Edge> edges) {
  out << format_tree(edges) << '\n';
}

}  // namespace twotree
