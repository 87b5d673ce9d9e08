#include "sgraph/circles.hpp"

#include <algorithm>
#include <deque>

#include "sgraph/detail/union_find.hpp"

namespace sgraph {

bool is_circle(const SignedGraph& g, const EdgeSet& s) {
  if (s.empty()) return false;
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  detail::UnionFind uf(g.order());
  bool ok = true;
  s.for_each([&](int i) {
    const Edge& e = g.edge(i);
    if (!e.is_ordinary()) {
      ok = false;
      return;
    }
    deg[static_cast<std::size_t>(e.u)] += 1;
    deg[static_cast<std::size_t>(e.v)] += 1;
    uf.unite(e.u, e.v);
  });
  if (!ok) return false;
  int root = -1;
  for (int v = 0; v < g.order(); ++v) {
    int d = deg[static_cast<std::size_t>(v)];
    if (d == 0) continue;
    if (d != 2) return false;
    if (root < 0)
      root = uf.find(v);
    else if (uf.find(v) != root)
      return false;
  }
  return true;
}

Circle::Circle(const SignedGraph& g, EdgeSet edges) : edges_(std::move(edges)) {
  if (!is_circle(g, edges_)) throw InvalidArgument("edge set is not a circle");
}

std::vector<VertexId> Circle::vertices(const SignedGraph& g) const { return vertices_of(g, edges_); }

int degree(const SignedGraph& g, VertexId v) {
  g.check_vertex(v);
  int d = 0;
  for (int i : g.incident(v)) {
    switch (g.edge(i).kind) {
      case EdgeKind::Link: d += 1; break;
      case EdgeKind::Loop: d += 2; break;
      case EdgeKind::Half: d += 1; break;
      case EdgeKind::Loose: break;
    }
  }
  return d;
}

Sign edge_set_sign(const SignedGraph& g, const EdgeSet& s) {
  Sign sign = Sign::Plus;
  s.for_each([&](int i) {
    const Edge& e = g.edge(i);
    if (!e.is_ordinary()) throw InvalidArgument("edge '" + e.id + "' is unsigned (" + std::string(to_string(e.kind)) + ")");
    sign *= e.sign;
  });
  return sign;
}

std::vector<VertexId> vertices_of(const SignedGraph& g, const EdgeSet& s) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  s.for_each([&](int i) {
    const Edge& e = g.edge(i);
    if (e.u >= 0) seen[static_cast<std::size_t>(e.u)] = 1;
    if (e.v >= 0) seen[static_cast<std::size_t>(e.v)] = 1;
  });
  std::vector<VertexId> out;
  for (int v = 0; v < g.order(); ++v)
    if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

std::vector<int> component_labels(const SignedGraph& g, const EdgeSet& s, int* count) {
  detail::UnionFind uf(g.order());
  s.for_each([&](int i) {
    const Edge& e = g.edge(i);
    if (e.kind == EdgeKind::Link) uf.unite(e.u, e.v);
  });
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> root_label(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int v = 0; v < g.order(); ++v) {
    int r = uf.find(v);
    auto& rl = root_label[static_cast<std::size_t>(r)];
    if (rl < 0) rl = next++;
    label[static_cast<std::size_t>(v)] = rl;
  }
  if (count) *count = next;
  return label;
}

std::vector<Circle> enumerate_circles(const SignedGraph& g, const EdgeSet& s, const Limits& limits) {
  require_cap(s.count(), limits.circle_edges, "enumerate_circles edge count");
  std::vector<EdgeSet> found;

  s.for_each([&](int i) {
    if (g.edge(i).kind == EdgeKind::Loop) found.push_back(EdgeSet(g.size(), {i}));
  });

  // Link adjacency restricted to s.
  std::vector<std::vector<std::pair<VertexId, int>>> adj(static_cast<std::size_t>(g.order()));
  s.for_each([&](int i) {
    const Edge& e = g.edge(i);
    if (e.kind != EdgeKind::Link) return;
    adj[static_cast<std::size_t>(e.u)].push_back({e.v, i});
    adj[static_cast<std::size_t>(e.v)].push_back({e.u, i});
  });

  std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> path_edges;

  // Circles through `root` whose other vertices all exceed `root`. Each
  // circle is traversed in two directions; keep the one whose first edge
  // index is smaller than its closing edge index.
  auto dfs = [&](auto&& self, VertexId root, VertexId x) -> void {
    for (auto [y, ei] : adj[static_cast<std::size_t>(x)]) {
      if (!path_edges.empty() && ei == path_edges.back()) continue;
      if (y == root) {
        if (!path_edges.empty() && path_edges.front() < ei) {
          EdgeSet c(g.size());
          for (int p : path_edges) c.set(p);
          c.set(ei);
          found.push_back(std::move(c));
        }
        continue;
      }
      if (y < root || on_path[static_cast<std::size_t>(y)]) continue;
      on_path[static_cast<std::size_t>(y)] = 1;
      path_edges.push_back(ei);
      self(self, root, y);
      path_edges.pop_back();
      on_path[static_cast<std::size_t>(y)] = 0;
    }
  };
  for (VertexId r = 0; r < g.order(); ++r) {
    on_path[static_cast<std::size_t>(r)] = 1;
    dfs(dfs, r, r);
    on_path[static_cast<std::size_t>(r)] = 0;
  }

  std::sort(found.begin(), found.end());
  std::vector<Circle> out;
  out.reserve(found.size());
  for (auto& c : found) out.emplace_back(g, std::move(c));
  return out;
}

EdgeSet spanning_forest(const SignedGraph& g, const EdgeSet& s) {
  detail::UnionFind uf(g.order());
  EdgeSet forest(g.size());
  s.for_each([&](int i) {
    const Edge& e = g.edge(i);
    if (e.kind == EdgeKind::Link && uf.unite(e.u, e.v)) forest.set(i);
  });
  return forest;
}

std::optional<EdgeSet> forest_path(const SignedGraph& g, const EdgeSet& t, VertexId a, VertexId b) {
  g.check_vertex(a);
  g.check_vertex(b);
  std::vector<int> via(static_cast<std::size_t>(g.order()), -2);
  std::deque<VertexId> queue{a};
  via[static_cast<std::size_t>(a)] = -1;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    if (x == b) break;
    for (int i : g.incident(x)) {
      if (!t.test(i)) continue;
      const Edge& e = g.edge(i);
      if (e.kind != EdgeKind::Link) continue;
      VertexId y = e.other(x);
      if (via[static_cast<std::size_t>(y)] != -2) continue;
      via[static_cast<std::size_t>(y)] = i;
      queue.push_back(y);
    }
  }
  if (via[static_cast<std::size_t>(b)] == -2) return std::nullopt;
  EdgeSet path(g.size());
  for (VertexId x = b; x != a;) {
    int i = via[static_cast<std::size_t>(x)];
    path.set(i);
    x = g.edge(i).other(x);
  }
  return path;
}

std::map<int, Circle> fundamental_system(const SignedGraph& g, const EdgeSet& t) {
  detail::UnionFind uf(g.order());
  t.for_each([&](int i) {
    const Edge& e = g.edge(i);
    if (e.kind != EdgeKind::Link) throw InvalidArgument("forest contains non-link edge '" + e.id + "'");
    if (!uf.unite(e.u, e.v)) throw InvalidArgument("edge set is not a forest (cycle through '" + e.id + "')");
  });
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edge(i);
    if (e.kind == EdgeKind::Link && !t.test(i) && uf.find(e.u) != uf.find(e.v))
      throw InvalidArgument("forest is not maximal: '" + e.id + "' joins two trees");
  }
  std::map<int, Circle> out;
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edge(i);
    if (!e.is_ordinary() || t.test(i)) continue;
    EdgeSet c(g.size(), {i});
    if (e.kind == EdgeKind::Link) c |= *forest_path(g, t, e.u, e.v);
    out.emplace(i, Circle(g, std::move(c)));
  }
  return out;
}

}  // namespace sgraph
