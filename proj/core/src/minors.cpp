#include "sgraph/minors.hpp"

#include <algorithm>

#include "sgraph/balance.hpp"

namespace sgraph {

SignedGraph delete_edges(const SignedGraph& g, const EdgeSet& s) {
  std::vector<Edge> kept;
  for (int i = 0; i < g.size(); ++i)
    if (!s.test(i)) kept.push_back(g.edge(i));
  return SignedGraph(g.order(), std::move(kept));
}

SignedGraph delete_vertices(const SignedGraph& g, const std::vector<VertexId>& vertices) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (VertexId v : vertices) {
    g.check_vertex(v);
    gone[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<VertexId> image(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (VertexId v = 0; v < g.order(); ++v)
    if (!gone[static_cast<std::size_t>(v)]) image[static_cast<std::size_t>(v)] = next++;

  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if ((e.u >= 0 && gone[static_cast<std::size_t>(e.u)]) || (e.v >= 0 && gone[static_cast<std::size_t>(e.v)])) continue;
    Edge f = e;
    if (f.u >= 0) f.u = image[static_cast<std::size_t>(f.u)];
    if (f.v >= 0) f.v = image[static_cast<std::size_t>(f.v)];
    kept.push_back(std::move(f));
  }
  return SignedGraph(next, std::move(kept));
}

std::pair<SignedGraph, MinorTrace> contract_set(const SignedGraph& g, const EdgeSet& s) {
  const auto scan = scan_components(g, s);
  MinorTrace trace;
  trace.source_order = g.order();
  trace.contracted = s;
  trace.deleted = EdgeSet(g.size());
  trace.image.assign(static_cast<std::size_t>(g.order()), std::nullopt);

  // Components are labelled by lowest vertex, so new indices follow that order.
  std::vector<int> block(static_cast<std::size_t>(scan.components), -1);
  int blocks = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    int c = scan.component[static_cast<std::size_t>(v)];
    if (!scan.balanced[static_cast<std::size_t>(c)]) continue;
    if (block[static_cast<std::size_t>(c)] < 0) block[static_cast<std::size_t>(c)] = blocks++;
    trace.image[static_cast<std::size_t>(v)] = block[static_cast<std::size_t>(c)];
  }

  std::vector<Edge> out;
  for (int i = 0; i < g.size(); ++i) {
    if (s.test(i)) continue;
    const Edge& e = g.edge(i);
    auto img = [&](VertexId v) { return v < 0 ? std::nullopt : trace.image[static_cast<std::size_t>(v)]; };
    switch (e.kind) {
      case EdgeKind::Loose:
        out.push_back(e);
        break;
      case EdgeKind::Half:
        out.push_back(img(e.u) ? Edge::half(e.id, *img(e.u)) : Edge::loose(e.id));
        break;
      case EdgeKind::Loop:
        out.push_back(img(e.u) ? Edge::loop(e.id, *img(e.u), e.sign) : Edge::loose(e.id));
        break;
      case EdgeKind::Link: {
        auto a = img(e.u), b = img(e.v);
        Sign sign = scan.zeta(e.u) * e.sign * scan.zeta(e.v);
        if (a && b) {
          if (*a == *b)
            out.push_back(Edge::loop(e.id, *a, sign));
          else
            out.push_back(Edge::link(e.id, std::min(*a, *b), std::max(*a, *b), sign));
        } else if (a || b) {
          out.push_back(Edge::half(e.id, a ? *a : *b));
        } else {
          out.push_back(Edge::loose(e.id));
        }
        break;
      }
    }
  }
  return {SignedGraph(blocks, std::move(out)), std::move(trace)};
}

// The single-edge case table (positive link merges, negative link switches
// the higher endpoint then merges, unbalanced edges delete their vertex,
// balanced loops and loose edges vanish) is what contract_set does on {e}.
std::pair<SignedGraph, MinorTrace> contract_edge(const SignedGraph& g, int edge_index) {
  if (edge_index < 0 || edge_index >= g.size()) throw InvalidArgument("edge index out of range");
  return contract_set(g, EdgeSet(g.size(), {edge_index}));
}

std::pair<SignedGraph, MinorTrace> contract_edge(const SignedGraph& g, std::string_view id) {
  return contract_edge(g, g.edge_index(id));
}

}  // namespace sgraph
