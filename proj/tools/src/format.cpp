#include "format.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sgtool {

using namespace sgraph;

std::string vertex_set(const std::vector<VertexId>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i] + 1);
  return out + "}";
}

std::string edge_list(const SignedGraph& g, const EdgeSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int i) {
    out += (first ? "" : ",") + g.edge(i).id;
    first = false;
  });
  return out + "}";
}

json edge_ids(const SignedGraph& g, const EdgeSet& s) {
  json out = json::array();
  s.for_each([&](int i) { out.push_back(g.edge(i).id); });
  return out;
}

json vertex_numbers(const std::vector<VertexId>& vs) {
  json out = json::array();
  for (VertexId v : vs) out.push_back(v + 1);
  return out;
}

json graph_summary(const SignedGraph& g) {
  json kinds = json::object();
  for (EdgeKind k : {EdgeKind::Link, EdgeKind::Loop, EdgeKind::Half, EdgeKind::Loose})
    kinds[std::string(to_string(k))] = g.edges_of_kind(k).count();
  return {{"n", g.order()}, {"m", g.size()}, {"kinds", kinds}};
}

json graph_json(const SignedGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    json je = {{"id", e.id}, {"kind", std::string(to_string(e.kind))}};
    if (e.u >= 0) je["u"] = e.u + 1;
    if (e.v >= 0 && e.kind != EdgeKind::Half) je["v"] = e.v + 1;
    if (e.is_ordinary()) je["sign"] = std::string(1, to_char(e.sign));
    edges.push_back(je);
  }
  return {{"n", g.order()}, {"edges", edges}};
}

json polynomial_json(const IntPolynomial& p) { return {{"coefficients", p.coefficients()}, {"text", p.format()}}; }

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

std::string matrix_tsv(const IntMatrix& m, const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels) {
  std::ostringstream os;
  for (const auto& c : col_labels) os << '\t' << c;
  os << '\n';
  for (int r = 0; r < m.rows(); ++r) {
    os << row_labels[static_cast<std::size_t>(r)];
    for (int c = 0; c < m.cols(); ++c) os << '\t' << m(r, c);
    os << '\n';
  }
  return os.str();
}

std::string big(const BigInt& x) { return x.str(); }

double rounded(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double r = std::strtod(buf, nullptr);
  return r == 0 ? 0.0 : r;
}

std::string real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", rounded(x));
  return buf;
}

json reals(const std::vector<double>& xs) {
  json out = json::array();
  for (double x : xs) out.push_back(rounded(x));
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) throw std::invalid_argument(std::string("bad ") + what + " '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace sgtool
