#include "sgraph/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

namespace sgraph {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_int(std::string_view field, std::size_t line, const char* what) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(field) + "'");
  return value;
}

}  // namespace

SignedGraph parse(std::string_view text) {
  bool have_magic = false;
  long order = -1;
  std::vector<Edge> edges;
  std::unordered_set<std::string> ids;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto f = split_fields(line);
    if (f.empty()) continue;

    auto arity = [&](std::size_t want) {
      if (f.size() != want)
        throw ParseError(line_no, "'" + std::string(f[0]) + "' expects " + std::to_string(want - 1) +
                                      " field(s), got " + std::to_string(f.size() - 1));
    };
    auto vertex = [&](std::string_view field) {
      long v = parse_int(field, line_no, "vertex");
      if (v < 1 || v > order)
        throw ParseError(line_no, "vertex " + std::string(field) + " out of range 1.." + std::to_string(order));
      return static_cast<VertexId>(v - 1);
    };
    auto edge_id = [&](std::string_view field) {
      std::string id(field);
      if (!ids.insert(id).second) throw ParseError(line_no, "duplicate edge id '" + id + "'");
      return id;
    };

    if (!have_magic) {
      if (f.size() != 2 || f[0] != "sg" || f[1] != "1") throw ParseError(line_no, "expected header 'sg 1'");
      have_magic = true;
      continue;
    }
    if (f[0] == "n") {
      arity(2);
      if (order >= 0) throw ParseError(line_no, "order given twice");
      order = parse_int(f[1], line_no, "order");
      if (order < 0) throw ParseError(line_no, "negative order");
      continue;
    }
    if (order < 0) throw ParseError(line_no, "'n <order>' must precede edges");

    if (f[0] == "edge") {
      arity(5);
      auto id = edge_id(f[1]);
      VertexId u = vertex(f[2]);
      VertexId v = vertex(f[3]);
      Sign s;
      if (f[4] == "+")
        s = Sign::Plus;
      else if (f[4] == "-")
        s = Sign::Minus;
      else
        throw ParseError(line_no, "edge '" + id + "': sign must be + or -, got '" + std::string(f[4]) + "'");
      edges.push_back(u == v ? Edge::loop(std::move(id), u, s) : Edge::link(std::move(id), u, v, s));
    } else if (f[0] == "half") {
      if (f.size() == 4 && (f[3] == "+" || f[3] == "-"))
        throw ParseError(line_no, "half edge '" + std::string(f[1]) + "' cannot carry a sign");
      arity(3);
      auto id = edge_id(f[1]);
      edges.push_back(Edge::half(std::move(id), vertex(f[2])));
    } else if (f[0] == "loose") {
      if (f.size() == 3 && (f[2] == "+" || f[2] == "-"))
        throw ParseError(line_no, "loose edge '" + std::string(f[1]) + "' cannot carry a sign");
      arity(2);
      edges.push_back(Edge::loose(edge_id(f[1])));
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(f[0]) + "'");
    }
  }
  if (!have_magic) throw ParseError(line_no, "missing header 'sg 1'");
  if (order < 0) throw ParseError(line_no, "missing 'n <order>'");
  return SignedGraph(static_cast<int>(order), std::move(edges));
}

std::string serialize(const SignedGraph& g) {
  std::string out = "sg 1\nn " + std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) {
    switch (e.kind) {
      case EdgeKind::Link:
      case EdgeKind::Loop:
        out += "edge " + e.id + " " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " +
               to_char(e.sign) + "\n";
        break;
      case EdgeKind::Half:
        out += "half " + e.id + " " + std::to_string(e.u + 1) + "\n";
        break;
      case EdgeKind::Loose:
        out += "loose " + e.id + "\n";
        break;
    }
  }
  return out;
}

SignedGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace sgraph
