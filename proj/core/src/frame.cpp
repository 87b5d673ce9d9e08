#include "sgraph/frame.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "sgraph/balance.hpp"
#include "sgraph/circles.hpp"

namespace sgraph {

std::string_view to_string(CircuitKind kind) noexcept {
  switch (kind) {
    case CircuitKind::PositiveCircle: return "positive-circle";
    case CircuitKind::LooseEdge: return "loose-edge";
    case CircuitKind::TightHandcuff: return "tight-handcuff";
    case CircuitKind::LooseHandcuff: return "loose-handcuff";
  }
  return "?";
}

namespace {

// Negative circles and half edges, each with its vertex set.
struct PseudoCircle {
  EdgeSet edges;
  std::vector<VertexId> vertices;
  bool negative = true;
};

std::vector<PseudoCircle> pseudo_circles(const SignedGraph& g, const EdgeSet& s, const Limits& limits) {
  std::vector<PseudoCircle> out;
  for (const auto& c : enumerate_circles(g, s, limits))
    out.push_back({c.edges(), c.vertices(g), edge_set_sign(g, c.edges()) == Sign::Minus});
  s.for_each([&](int i) {
    if (g.edge(i).kind == EdgeKind::Half) out.push_back({EdgeSet(g.size(), {i}), {g.edge(i).u}, true});
  });
  return out;
}

bool share_vertex(const std::vector<VertexId>& a, const std::vector<VertexId>& b, int* common = nullptr) {
  std::vector<VertexId> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  if (common) *common = static_cast<int>(both.size());
  return !both.empty();
}

// Ends at v counting a half edge like a loop.
int frame_degree(const SignedGraph& g, const EdgeSet& s, VertexId v) {
  int d = 0;
  for (int i : g.incident(v)) {
    if (!s.test(i)) continue;
    const Edge& e = g.edge(i);
    d += (e.kind == EdgeKind::Link) ? 1 : 2;
  }
  return d;
}

// Bit 1: a simple u-v path of sign + inside s; bit 2: one of sign -.
void path_signs(const SignedGraph& g, const EdgeSet& s, VertexId x, VertexId target, Sign sign,
                std::vector<char>& on_path, int wanted, int& found) {
  if (x == target) {
    found |= (sign == Sign::Plus) ? 1 : 2;
    return;
  }
  for (int i : g.incident(x)) {
    if ((found & wanted) == wanted) return;
    if (!s.test(i)) continue;
    const Edge& e = g.edge(i);
    if (e.kind != EdgeKind::Link) continue;
    VertexId y = e.other(x);
    if (on_path[static_cast<std::size_t>(y)]) continue;
    on_path[static_cast<std::size_t>(y)] = 1;
    path_signs(g, s, y, target, sign * e.sign, on_path, wanted, found);
    on_path[static_cast<std::size_t>(y)] = 0;
  }
}

bool has_path_of_sign(const SignedGraph& g, const EdgeSet& s, VertexId u, VertexId v, Sign sign) {
  std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
  on_path[static_cast<std::size_t>(u)] = 1;
  int wanted = sign == Sign::Plus ? 1 : 2;
  int found = 0;
  path_signs(g, s, u, v, Sign::Plus, on_path, wanted, found);
  return (found & wanted) != 0;
}

// Simple paths of links from a vertex of `from` to a vertex of `to` whose
// interior avoids both sets and whose edges avoid `banned`.
void connecting_paths(const SignedGraph& g, const std::vector<char>& in_from, const std::vector<char>& in_to,
                      const EdgeSet& banned, VertexId x, EdgeSet& path, std::vector<char>& on_path,
                      std::vector<EdgeSet>& out) {
  for (int i : g.incident(x)) {
    const Edge& e = g.edge(i);
    if (e.kind != EdgeKind::Link || banned.test(i) || path.test(i)) continue;
    VertexId y = e.other(x);
    auto yi = static_cast<std::size_t>(y);
    if (on_path[yi] || in_from[yi]) continue;
    path.set(i);
    if (in_to[yi]) {
      out.push_back(path);
    } else {
      on_path[yi] = 1;
      connecting_paths(g, in_from, in_to, banned, y, path, on_path, out);
      on_path[yi] = 0;
    }
    path.reset(i);
  }
}

}  // namespace

std::optional<FrameCircuit> is_frame_circuit(const SignedGraph& g, const EdgeSet& s) {
  if (s.empty()) return std::nullopt;
  const EdgeSet loose = s & g.edges_of_kind(EdgeKind::Loose);
  if (!loose.empty()) {
    if (s.count() != 1) return std::nullopt;
    return FrameCircuit{CircuitKind::LooseEdge, s, {}, EdgeSet(g.size())};
  }

  const auto verts = vertices_of(g, s);
  int components = 0;
  auto labels = component_labels(g, s, &components);
  for (VertexId v : verts)
    if (labels[static_cast<std::size_t>(v)] != labels[static_cast<std::size_t>(verts.front())]) return std::nullopt;
  for (VertexId v : verts)
    if (frame_degree(g, s, v) < 2) return std::nullopt;

  const int cyclomatic = s.count() - static_cast<int>(verts.size()) + 1;
  if (cyclomatic == 1) {
    if (!is_circle(g, s) || edge_set_sign(g, s) != Sign::Plus) return std::nullopt;
    return FrameCircuit{CircuitKind::PositiveCircle, s, {s}, EdgeSet(g.size())};
  }
  if (cyclomatic != 2) return std::nullopt;

  Limits unbounded;
  unbounded.circle_edges = s.universe();
  auto pcs = pseudo_circles(g, s, unbounded);
  if (pcs.size() != 2 || !pcs[0].negative || !pcs[1].negative) return std::nullopt;
  if (pcs[0].edges.intersects(pcs[1].edges)) return std::nullopt;
  int common = 0;
  share_vertex(pcs[0].vertices, pcs[1].vertices, &common);
  if (common > 1) return std::nullopt;
  FrameCircuit fc;
  fc.edges = s;
  fc.circles = {pcs[0].edges, pcs[1].edges};
  std::sort(fc.circles.begin(), fc.circles.end());
  fc.path = s - pcs[0].edges - pcs[1].edges;
  fc.kind = common == 1 ? CircuitKind::TightHandcuff : CircuitKind::LooseHandcuff;
  if (fc.kind == CircuitKind::TightHandcuff && !fc.path.empty()) return std::nullopt;
  if (fc.kind == CircuitKind::LooseHandcuff && fc.path.empty()) return std::nullopt;
  return fc;
}

std::vector<FrameCircuit> enumerate_frame_circuits(const SignedGraph& g, const Limits& limits) {
  require_cap(g.order(), limits.frame_vertices, "frame circuit enumeration order");
  require_cap(g.size(), limits.frame_edges, "frame circuit enumeration edge count");

  std::set<EdgeSet> seen;
  std::vector<FrameCircuit> out;
  auto add = [&](FrameCircuit fc) {
    if (seen.insert(fc.edges).second) out.push_back(std::move(fc));
  };

  const EdgeSet all = g.all_edges();
  g.edges_of_kind(EdgeKind::Loose).for_each([&](int i) {
    add({CircuitKind::LooseEdge, EdgeSet(g.size(), {i}), {}, EdgeSet(g.size())});
  });

  std::vector<PseudoCircle> negative;
  for (auto& pc : pseudo_circles(g, all, limits)) {
    if (pc.negative)
      negative.push_back(std::move(pc));
    else
      add({CircuitKind::PositiveCircle, pc.edges, {pc.edges}, EdgeSet(g.size())});
  }

  const auto n = static_cast<std::size_t>(g.order());
  for (std::size_t a = 0; a < negative.size(); ++a) {
    for (std::size_t b = a + 1; b < negative.size(); ++b) {
      const auto& ca = negative[a];
      const auto& cb = negative[b];
      if (ca.edges.intersects(cb.edges)) continue;
      int common = 0;
      share_vertex(ca.vertices, cb.vertices, &common);
      std::vector<EdgeSet> circles{ca.edges, cb.edges};
      std::sort(circles.begin(), circles.end());
      if (common == 1) {
        add({CircuitKind::TightHandcuff, ca.edges | cb.edges, circles, EdgeSet(g.size())});
        continue;
      }
      if (common > 1) continue;
      std::vector<char> in_a(n, 0), in_b(n, 0), on_path(n, 0);
      for (VertexId v : ca.vertices) in_a[static_cast<std::size_t>(v)] = 1;
      for (VertexId v : cb.vertices) in_b[static_cast<std::size_t>(v)] = 1;
      const EdgeSet banned = ca.edges | cb.edges;
      std::vector<EdgeSet> paths;
      EdgeSet path(g.size());
      for (VertexId start : ca.vertices)
        connecting_paths(g, in_a, in_b, banned, start, path, on_path, paths);
      for (const auto& p : paths) add({CircuitKind::LooseHandcuff, banned | p, circles, p});
    }
  }
  std::sort(out.begin(), out.end(), [](const FrameCircuit& x, const FrameCircuit& y) { return x.edges < y.edges; });
  return out;
}

EdgeSet balance_closure(const SignedGraph& g, const EdgeSet& s) {
  EdgeSet out = s;
  for (int i = 0; i < g.size(); ++i) {
    if (s.test(i)) continue;
    const Edge& e = g.edge(i);
    switch (e.kind) {
      case EdgeKind::Loose:
        out.set(i);
        break;
      case EdgeKind::Loop:
        if (e.sign == Sign::Plus) out.set(i);
        break;
      case EdgeKind::Half:
        break;
      case EdgeKind::Link:
        if (has_path_of_sign(g, s, e.u, e.v, e.sign)) out.set(i);
        break;
    }
  }
  return out;
}

EdgeSet closure(const SignedGraph& g, const EdgeSet& s) {
  const auto scan = scan_components(g, s);
  auto comp = [&](VertexId v) { return scan.component[static_cast<std::size_t>(v)]; };
  auto unbalanced = [&](VertexId v) { return !scan.balanced[static_cast<std::size_t>(comp(v))]; };

  EdgeSet out = s;
  for (int i = 0; i < g.size(); ++i) {
    if (s.test(i)) continue;
    const Edge& e = g.edge(i);
    switch (e.kind) {
      case EdgeKind::Loose:
        out.set(i);
        break;
      case EdgeKind::Half:
        if (unbalanced(e.u)) out.set(i);
        break;
      case EdgeKind::Loop:
        if (unbalanced(e.u) || e.sign == Sign::Plus) out.set(i);
        break;
      case EdgeKind::Link:
        if (unbalanced(e.u) && unbalanced(e.v))
          out.set(i);
        else if (comp(e.u) == comp(e.v) && scan.zeta(e.u) * e.sign * scan.zeta(e.v) == Sign::Plus)
          out.set(i);
        break;
    }
  }
  return out;
}

EdgeSet closure_by_circuits(const SignedGraph& g, const EdgeSet& s, const Limits& limits) {
  EdgeSet out = s;
  for (const auto& fc : enumerate_frame_circuits(g, limits)) {
    EdgeSet outside = fc.edges - s;
    if (outside.count() == 1) out |= outside;
  }
  return out;
}

ClosedSetLattice closed_sets(const SignedGraph& g, const Limits& limits, int threads) {
  require_cap(g.size(), limits.lattice_edges, "closed set enumeration edge count");
  const int m = g.size();
  const std::uint64_t total = std::uint64_t{1} << m;
  threads = std::max(1, threads);
  std::vector<std::vector<EdgeSet>> found(static_cast<std::size_t>(threads));
  auto work = [&](int t) {
    for (std::uint64_t mask = static_cast<std::uint64_t>(t); mask < total; mask += static_cast<std::uint64_t>(threads)) {
      EdgeSet s = EdgeSet::from_mask(m, mask);
      if (closure(g, s) == s) found[static_cast<std::size_t>(t)].push_back(std::move(s));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  ClosedSetLattice lat;
  for (auto& part : found)
    for (auto& s : part) lat.elements.push_back(std::move(s));
  std::sort(lat.elements.begin(), lat.elements.end(), [](const EdgeSet& a, const EdgeSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return lat;
}

int rank(const SignedGraph& g, const EdgeSet& s) { return g.order() - balanced_components(g, s); }

bool is_independent(const SignedGraph& g, const EdgeSet& s) { return rank(g, s) == s.count(); }

}  // namespace sgraph
