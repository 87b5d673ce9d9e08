#include "sgraph/balance.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "sgraph/circles.hpp"

namespace sgraph {

SwitchingFunction SwitchingFunction::from_set(int order, const std::vector<VertexId>& minus) {
  std::vector<Sign> values(static_cast<std::size_t>(order), Sign::Plus);
  for (VertexId v : minus) {
    if (v < 0 || v >= order) throw InvalidArgument("switching set vertex " + std::to_string(v + 1) + " out of range");
    values[static_cast<std::size_t>(v)] = Sign::Minus;
  }
  return SwitchingFunction(std::move(values));
}

std::vector<VertexId> SwitchingFunction::minus_set() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < values_.size(); ++v)
    if (values_[v] == Sign::Minus) out.push_back(static_cast<VertexId>(v));
  return out;
}

SwitchingFunction SwitchingFunction::negated() const {
  auto v = values_;
  for (auto& s : v) s = -s;
  return SwitchingFunction(std::move(v));
}

ComponentScan scan_components(const SignedGraph& g, const EdgeSet& s) {
  const auto n = static_cast<std::size_t>(g.order());
  ComponentScan scan;
  scan.component.assign(n, -1);
  std::vector<Sign> zeta(n, Sign::Plus);

  for (VertexId root = 0; root < g.order(); ++root) {
    if (scan.component[static_cast<std::size_t>(root)] >= 0) continue;
    const int label = scan.components++;
    scan.component[static_cast<std::size_t>(root)] = label;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (int i : g.incident(x)) {
        if (!s.test(i)) continue;
        const Edge& e = g.edge(i);
        if (e.kind != EdgeKind::Link) continue;
        VertexId y = e.other(x);
        if (scan.component[static_cast<std::size_t>(y)] >= 0) continue;
        scan.component[static_cast<std::size_t>(y)] = label;
        zeta[static_cast<std::size_t>(y)] = zeta[static_cast<std::size_t>(x)] * e.sign;
        queue.push_back(y);
      }
    }
  }

  scan.balanced.assign(static_cast<std::size_t>(scan.components), 1);
  s.for_each([&](int i) {
    const Edge& e = g.edge(i);
    switch (e.kind) {
      case EdgeKind::Loose:
        return;
      case EdgeKind::Half:
        scan.balanced[static_cast<std::size_t>(scan.component[static_cast<std::size_t>(e.u)])] = 0;
        return;
      case EdgeKind::Loop:
      case EdgeKind::Link: {
        Sign switched = zeta[static_cast<std::size_t>(e.u)] * e.sign * zeta[static_cast<std::size_t>(e.v)];
        if (switched == Sign::Minus)
          scan.balanced[static_cast<std::size_t>(scan.component[static_cast<std::size_t>(e.u)])] = 0;
        return;
      }
    }
  });
  scan.zeta = SwitchingFunction(std::move(zeta));
  return scan;
}

BalancePartition balance_partition(const SignedGraph& g, const EdgeSet& s) {
  auto scan = scan_components(g, s);
  BalancePartition p;
  std::vector<int> block_of(static_cast<std::size_t>(scan.components), -1);
  for (VertexId v = 0; v < g.order(); ++v) {
    int c = scan.component[static_cast<std::size_t>(v)];
    if (!scan.balanced[static_cast<std::size_t>(c)]) {
      p.v0.push_back(v);
      continue;
    }
    auto& b = block_of[static_cast<std::size_t>(c)];
    if (b < 0) {
      b = static_cast<int>(p.pib.size());
      p.pib.emplace_back();
    }
    p.pib[static_cast<std::size_t>(b)].push_back(v);
  }
  p.b = static_cast<int>(p.pib.size());
  return p;
}

int balanced_components(const SignedGraph& g, const EdgeSet& s) {
  auto scan = scan_components(g, s);
  return static_cast<int>(std::count(scan.balanced.begin(), scan.balanced.end(), 1));
}

bool is_balanced(const SignedGraph& g, const EdgeSet& s) {
  auto scan = scan_components(g, s);
  return std::all_of(scan.balanced.begin(), scan.balanced.end(), [](char b) { return b != 0; });
}

std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> harary_bipartition(const SignedGraph& g) {
  auto scan = scan_components(g, g.all_edges());
  for (char b : scan.balanced)
    if (!b) return std::nullopt;
  std::pair<std::vector<VertexId>, std::vector<VertexId>> parts;
  for (VertexId v = 0; v < g.order(); ++v)
    (scan.zeta(v) == Sign::Plus ? parts.first : parts.second).push_back(v);
  return parts;
}

SignedGraph switch_graph(const SignedGraph& g, const SwitchingFunction& z) {
  if (z.order() != g.order()) throw InvalidArgument("switching function has wrong order");
  std::vector<Sign> signs;
  signs.reserve(static_cast<std::size_t>(g.size()));
  for (const auto& e : g.edges()) signs.push_back(e.is_ordinary() ? z(e.u) * e.sign * z(e.v) : e.sign);
  return g.with_signs(signs);
}

std::optional<SwitchingFunction> switching_equivalent(const SignedGraph& g1, const SignedGraph& g2) {
  if (!g1.same_underlying(g2)) throw InvalidArgument("switching_equivalent: underlying graphs differ");
  const auto n = static_cast<std::size_t>(g1.order());
  std::vector<Sign> zeta(n, Sign::Plus);
  std::vector<char> seen(n, 0);
  for (VertexId root = 0; root < g1.order(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    seen[static_cast<std::size_t>(root)] = 1;
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (int i : g1.incident(x)) {
        const Edge& e = g1.edge(i);
        if (e.kind != EdgeKind::Link) continue;
        VertexId y = e.other(x);
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = 1;
        zeta[static_cast<std::size_t>(y)] = zeta[static_cast<std::size_t>(x)] * e.sign * g2.edge(i).sign;
        queue.push_back(y);
      }
    }
  }
  SwitchingFunction z(std::move(zeta));
  for (int i = 0; i < g1.size(); ++i) {
    const Edge& e = g1.edge(i);
    if (!e.is_ordinary()) continue;
    if (z(e.u) * e.sign * z(e.v) != g2.edge(i).sign) return std::nullopt;
  }
  return z;
}

std::vector<BalancingEdge> classify_balancing_edges(const SignedGraph& g) {
  const EdgeSet all = g.all_edges();
  const int b = balanced_components(g, all);
  const bool balanced = is_balanced(g, all);
  std::vector<BalancingEdge> out(static_cast<std::size_t>(g.size()), BalancingEdge::None);
  for (int i = 0; i < g.size(); ++i) {
    EdgeSet rest = all;
    rest.reset(i);
    if (!balanced && is_balanced(g, rest))
      out[static_cast<std::size_t>(i)] = BalancingEdge::Total;
    else if (balanced_components(g, rest) > b)
      out[static_cast<std::size_t>(i)] = BalancingEdge::Partial;
  }
  return out;
}

EdgeSet edges_avoiding(const SignedGraph& g, const std::vector<VertexId>& removed) {
  EdgeSet s = g.all_edges();
  for (VertexId v : removed)
    for (int i : g.incident(v)) s.reset(i);
  return s;
}

std::vector<VertexId> balancing_vertices(const SignedGraph& g) {
  std::vector<VertexId> out;
  if (is_balanced(g)) return out;
  for (VertexId v = 0; v < g.order(); ++v)
    if (is_balanced(g, edges_avoiding(g, {v}))) out.push_back(v);
  return out;
}

EdgeSet min_balancing_set(const SignedGraph& g, const Limits& limits) {
  require_cap(g.size(), limits.balancing_edges, "min_balancing_set edge count");
  const int m = g.size();
  std::vector<int> by_id(static_cast<std::size_t>(m));
  std::iota(by_id.begin(), by_id.end(), 0);
  std::sort(by_id.begin(), by_id.end(), [&](int a, int b) { return g.edge(a).id < g.edge(b).id; });

  const EdgeSet all = g.all_edges();
  for (int k = 0; k <= m; ++k) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      EdgeSet removed(m);
      for (int p : pick) removed.set(by_id[static_cast<std::size_t>(p)]);
      if (is_balanced(g, all - removed)) return removed;
      // Next k-combination of positions in lexicographic order.
      int j = k - 1;
      while (j >= 0 && pick[static_cast<std::size_t>(j)] == m - k + j) --j;
      if (j < 0) break;
      ++pick[static_cast<std::size_t>(j)];
      for (int t = j + 1; t < k; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return all;  // unreachable: deleting every edge balances any graph
}

bool has_two_disjoint_negative_circles(const SignedGraph& g, const Limits& limits) {
  std::vector<std::vector<VertexId>> negative;
  for (const auto& c : enumerate_circles(g, g.all_edges(), limits))
    if (edge_set_sign(g, c.edges()) == Sign::Minus) negative.push_back(c.vertices(g));
  for (const auto& e : g.edges())
    if (e.kind == EdgeKind::Half) negative.push_back({e.u});
  for (std::size_t a = 0; a < negative.size(); ++a)
    for (std::size_t b = a + 1; b < negative.size(); ++b) {
      std::vector<VertexId> common;
      std::set_intersection(negative[a].begin(), negative[a].end(), negative[b].begin(), negative[b].end(),
                            std::back_inserter(common));
      if (common.empty()) return true;
    }
  return false;
}

}  // namespace sgraph
