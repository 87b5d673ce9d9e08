#include "sgraph/graph.hpp"

#include <unordered_set>

namespace sgraph {

std::string_view to_string(EdgeKind kind) noexcept {
  switch (kind) {
    case EdgeKind::Link: return "link";
    case EdgeKind::Loop: return "loop";
    case EdgeKind::Half: return "half";
    case EdgeKind::Loose: return "loose";
  }
  return "?";
}

Edge Edge::link(std::string id, VertexId u, VertexId v, Sign s) {
  if (u == v) throw InvalidArgument("link '" + id + "' needs distinct endpoints");
  return Edge{std::move(id), EdgeKind::Link, u, v, s};
}

Edge Edge::loop(std::string id, VertexId u, Sign s) { return Edge{std::move(id), EdgeKind::Loop, u, u, s}; }

Edge Edge::half(std::string id, VertexId u) { return Edge{std::move(id), EdgeKind::Half, u, -1, Sign::Plus}; }

Edge Edge::loose(std::string id) { return Edge{std::move(id), EdgeKind::Loose, -1, -1, Sign::Plus}; }

SignedGraph::SignedGraph(int order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
  if (order_ < 0) throw InvalidArgument("negative order");
  incidence_.assign(static_cast<std::size_t>(order_), {});
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (e.id.empty()) throw InvalidArgument("edge " + std::to_string(i + 1) + " has an empty id");
    if (!seen.insert(e.id).second) throw InvalidArgument("duplicate edge id '" + e.id + "'");
    auto check = [&](VertexId w) {
      if (w < 0 || w >= order_)
        throw InvalidArgument("edge '" + e.id + "': vertex " + std::to_string(w + 1) + " out of range");
    };
    switch (e.kind) {
      case EdgeKind::Link:
        check(e.u);
        check(e.v);
        if (e.u == e.v) throw InvalidArgument("link '" + e.id + "' has equal endpoints");
        break;
      case EdgeKind::Loop:
        check(e.u);
        e.v = e.u;
        break;
      case EdgeKind::Half:
        check(e.u);
        e.v = -1;
        e.sign = Sign::Plus;
        break;
      case EdgeKind::Loose:
        e.u = e.v = -1;
        e.sign = Sign::Plus;
        break;
    }
    int idx = static_cast<int>(i);
    if (e.u >= 0) incidence_[static_cast<std::size_t>(e.u)].push_back(idx);
    if (e.kind == EdgeKind::Link) incidence_[static_cast<std::size_t>(e.v)].push_back(idx);
  }
}

std::optional<int> SignedGraph::find_edge(std::string_view id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return static_cast<int>(i);
  return std::nullopt;
}

int SignedGraph::edge_index(std::string_view id) const {
  if (auto i = find_edge(id)) return *i;
  throw InvalidArgument("unknown edge '" + std::string(id) + "'");
}

EdgeSet SignedGraph::edges_of_kind(EdgeKind kind) const {
  EdgeSet s(size());
  for (int i = 0; i < size(); ++i)
    if (edges_[static_cast<std::size_t>(i)].kind == kind) s.set(i);
  return s;
}

EdgeSet SignedGraph::edge_set(std::string_view comma_ids) const {
  EdgeSet s(size());
  std::size_t pos = 0;
  while (pos <= comma_ids.size()) {
    std::size_t comma = comma_ids.find(',', pos);
    if (comma == std::string_view::npos) comma = comma_ids.size();
    auto token = comma_ids.substr(pos, comma - pos);
    if (!token.empty()) s.set(edge_index(token));
    pos = comma + 1;
  }
  return s;
}

std::vector<std::string> SignedGraph::ids(const EdgeSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](int i) { out.push_back(edge(i).id); });
  return out;
}

void SignedGraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= order_) throw InvalidArgument("vertex " + std::to_string(v + 1) + " out of range");
}

SignedGraph SignedGraph::with_signs(const std::vector<Sign>& signs) const {
  if (signs.size() != edges_.size()) throw InvalidArgument("sign vector length mismatch");
  auto edges = edges_;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].is_ordinary()) edges[i].sign = signs[i];
  return SignedGraph(order_, std::move(edges));
}

SignedGraph SignedGraph::negated() const {
  auto edges = edges_;
  for (auto& e : edges)
    if (e.is_ordinary()) e.sign = -e.sign;
  return SignedGraph(order_, std::move(edges));
}

bool SignedGraph::has_kind(EdgeKind kind) const {
  for (const auto& e : edges_)
    if (e.kind == kind) return true;
  return false;
}

bool SignedGraph::is_link_graph() const {
  for (const auto& e : edges_)
    if (e.kind != EdgeKind::Link) return false;
  return true;
}

bool SignedGraph::same_underlying(const SignedGraph& other) const {
  if (order_ != other.order_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& a = edges_[i];
    const auto& b = other.edges_[i];
    if (a.id != b.id || a.kind != b.kind || a.u != b.u || a.v != b.v) return false;
  }
  return true;
}

std::string GraphBuilder::next_id(std::string id) {
  if (!id.empty()) return id;
  return "e" + std::to_string(edges_.size() + 1);
}

GraphBuilder& GraphBuilder::link(VertexId u, VertexId v, Sign s, std::string id) {
  edges_.push_back(Edge::link(next_id(std::move(id)), u, v, s));
  return *this;
}

GraphBuilder& GraphBuilder::loop(VertexId u, Sign s, std::string id) {
  edges_.push_back(Edge::loop(next_id(std::move(id)), u, s));
  return *this;
}

GraphBuilder& GraphBuilder::half(VertexId u, std::string id) {
  edges_.push_back(Edge::half(next_id(std::move(id)), u));
  return *this;
}

GraphBuilder& GraphBuilder::loose(std::string id) {
  edges_.push_back(Edge::loose(next_id(std::move(id))));
  return *this;
}

GraphBuilder& GraphBuilder::add(Edge e) {
  e.id = next_id(std::move(e.id));
  edges_.push_back(std::move(e));
  return *this;
}

}  // namespace sgraph
