#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

#ifndef SGRAPH_FIXTURE_DIR
#error "SGRAPH_FIXTURE_DIR must be defined"
#endif

namespace sgraph::testing {

std::string fixture_path(const std::string& name) { return std::string(SGRAPH_FIXTURE_DIR) + "/" + name; }

SignedGraph fixture(const std::string& name) { return read_graph_file(fixture_path(name)); }

SignedGraph sigma4() {
  return GraphBuilder(4)
      .link(0, 1, Sign::Plus, "a")
      .link(1, 2, Sign::Minus, "b")
      .link(2, 3, Sign::Plus, "c")
      .link(0, 3, Sign::Minus, "d")
      .link(0, 3, Sign::Plus, "e")
      .link(0, 2, Sign::Minus, "f")
      .half(2, "h")
      .build();
}

SignedGraph signed_cycle(const std::vector<Sign>& signs) {
  const int n = static_cast<int>(signs.size());
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) {
    if (n == 1)
      b.loop(0, signs[0]);
    else
      b.link(i, (i + 1) % n, signs[static_cast<std::size_t>(i)]);
  }
  return b.build();
}

SignedGraph all_signed(const SignedGraph& g, Sign s) {
  std::vector<Sign> signs(static_cast<std::size_t>(g.size()), s);
  return g.with_signs(signs);
}

SignedGraph random_graph(std::mt19937_64& rng, const RandomSpec& spec) {
  std::uniform_int_distribution<int> order_d(spec.min_order, spec.max_order);
  const int n = order_d(rng);
  std::uniform_int_distribution<int> m_d(0, spec.max_edges);
  const int m = m_d(rng);
  std::uniform_int_distribution<int> v_d(0, n - 1);
  std::uniform_int_distribution<int> kind_d(0, 99);
  std::bernoulli_distribution coin(0.5);
  GraphBuilder b(n);
  for (int i = 0; i < m; ++i) {
    const int k = kind_d(rng);
    const Sign s = coin(rng) ? Sign::Plus : Sign::Minus;
    if (spec.loose && k < 4) {
      b.loose();
    } else if (spec.halves && k < 12) {
      b.half(v_d(rng));
    } else if (spec.loops && (k < 20 || n == 1)) {
      b.loop(v_d(rng), s);
    } else if (n > 1) {
      const int u = v_d(rng);
      int v = v_d(rng);
      while (v == u) v = v_d(rng);
      b.link(u, v, s);
    }
  }
  return b.build();
}

SignedGraph random_link_graph(std::mt19937_64& rng, int max_order, int max_edges) {
  std::uniform_int_distribution<int> order_d(2, max_order);
  const int n = order_d(rng);
  std::uniform_int_distribution<int> m_d(1, max_edges);
  const int m = m_d(rng);
  std::uniform_int_distribution<int> v_d(0, n - 1);
  std::bernoulli_distribution coin(0.5);
  std::set<std::tuple<int, int, int>> used;
  GraphBuilder b(n);
  for (int i = 0; i < m; ++i) {
    int u = v_d(rng), v = v_d(rng);
    if (u == v) continue;
    Sign s = coin(rng) ? Sign::Plus : Sign::Minus;
    if (!used.insert({std::min(u, v), std::max(u, v), to_int(s)}).second) continue;
    b.link(u, v, s);
  }
  return b.build();
}

SignedGraph random_simple_graph(std::mt19937_64& rng, int order, double p) {
  std::bernoulli_distribution edge(p), coin(0.5);
  GraphBuilder b(order);
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j)
      if (edge(rng)) b.link(i, j, coin(rng) ? Sign::Plus : Sign::Minus);
  return b.build();
}

SwitchingFunction random_switching(std::mt19937_64& rng, int order) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Sign> v;
  for (int i = 0; i < order; ++i) v.push_back(coin(rng) ? Sign::Plus : Sign::Minus);
  return SwitchingFunction(std::move(v));
}

namespace {

bool subset_is_circle(const SignedGraph& g, const std::vector<int>& edges) {
  if (edges.empty()) return false;
  std::vector<int> deg(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> parent(static_cast<std::size_t>(g.order()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
  for (int i : edges) {
    const Edge& e = g.edge(i);
    deg[static_cast<std::size_t>(e.u)] += 1;
    deg[static_cast<std::size_t>(e.v)] += 1;
    parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
  }
  int root = -1;
  for (int v = 0; v < g.order(); ++v) {
    if (deg[static_cast<std::size_t>(v)] == 0) continue;
    if (deg[static_cast<std::size_t>(v)] != 2) return false;
    if (root < 0) root = find(v);
    if (find(v) != root) return false;
  }
  return true;
}

}  // namespace

std::vector<EdgeSet> subset_circles(const SignedGraph& g, const EdgeSet& s) {
  std::vector<int> ordinary;
  s.for_each([&](int i) {
    if (g.edge(i).is_ordinary()) ordinary.push_back(i);
  });
  std::vector<EdgeSet> out;
  const auto k = ordinary.size();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> pick;
    for (std::size_t b = 0; b < k; ++b)
      if (mask >> b & 1u) pick.push_back(ordinary[b]);
    if (subset_is_circle(g, pick)) out.push_back(EdgeSet::from_indices(g.size(), pick));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool circles_positive(const SignedGraph& g, const EdgeSet& s) {
  bool half = false;
  s.for_each([&](int i) { half = half || g.edge(i).kind == EdgeKind::Half; });
  if (half) return false;
  for (const auto& c : subset_circles(g, s)) {
    int sign = 1;
    c.for_each([&](int i) { sign *= to_int(g.edge(i).sign); });
    if (sign < 0) return false;
  }
  return true;
}

bool path_pairs_agree(const SignedGraph& g) {
  for (const auto& e : g.edges())
    if (e.kind == EdgeKind::Loop && e.sign == Sign::Minus) return false;
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    // signs[b]: bit 1 if a + path to b exists, bit 2 for a - path.
    std::vector<int> signs(static_cast<std::size_t>(n), 0);
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> dfs = [&](int x, int sign) {
      signs[static_cast<std::size_t>(x)] |= sign > 0 ? 1 : 2;
      for (int i : g.incident(x)) {
        const Edge& e = g.edge(i);
        if (e.kind != EdgeKind::Link) continue;
        int y = e.other(x);
        if (on[static_cast<std::size_t>(y)]) continue;
        on[static_cast<std::size_t>(y)] = 1;
        dfs(y, sign * to_int(e.sign));
        on[static_cast<std::size_t>(y)] = 0;
      }
    };
    on[static_cast<std::size_t>(a)] = 1;
    dfs(a, 1);
    for (int b = 0; b < n; ++b)
      if (b != a && signs[static_cast<std::size_t>(b)] == 3) return false;
  }
  return true;
}

std::vector<EdgeSet> blocks(const SignedGraph& g) {
  const int n = g.order();
  std::vector<EdgeSet> out;
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<int> stack;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int x, int via) {
    disc[static_cast<std::size_t>(x)] = low[static_cast<std::size_t>(x)] = timer++;
    for (int i : g.incident(x)) {
      const Edge& e = g.edge(i);
      if (e.kind != EdgeKind::Link || i == via) continue;
      int y = e.other(x);
      if (disc[static_cast<std::size_t>(y)] < 0) {
        stack.push_back(i);
        dfs(y, i);
        low[static_cast<std::size_t>(x)] = std::min(low[static_cast<std::size_t>(x)], low[static_cast<std::size_t>(y)]);
        if (low[static_cast<std::size_t>(y)] >= disc[static_cast<std::size_t>(x)]) {
          EdgeSet blk(g.size());
          while (true) {
            int top = stack.back();
            stack.pop_back();
            blk.set(top);
            if (top == i) break;
          }
          out.push_back(blk);
        }
      } else if (disc[static_cast<std::size_t>(y)] < disc[static_cast<std::size_t>(x)]) {
        stack.push_back(i);
        low[static_cast<std::size_t>(x)] = std::min(low[static_cast<std::size_t>(x)], disc[static_cast<std::size_t>(y)]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[static_cast<std::size_t>(v)] < 0) dfs(v, -1);
  for (int i = 0; i < g.size(); ++i)
    if (g.edge(i).kind != EdgeKind::Link && g.edge(i).kind != EdgeKind::Loose) out.push_back(EdgeSet(g.size(), {i}));
  return out;
}

std::vector<EdgeSet> minimal_dependent_sets(const SignedGraph& g) {
  const int m = g.size();
  auto dependent = [&](std::uint64_t mask) {
    EdgeSet s = EdgeSet::from_mask(m, mask);
    return rank(incidence_matrix(g, s)) < s.count();
  };
  std::vector<EdgeSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    if (!dependent(mask)) continue;
    bool minimal = true;
    for (int i = 0; i < m && minimal; ++i)
      if (mask >> i & 1u) minimal = !dependent(mask & ~(std::uint64_t{1} << i));
    if (minimal) out.push_back(EdgeSet::from_mask(m, mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int gf2_rank(const IntMatrix& m) {
  std::vector<std::vector<int>> a(static_cast<std::size_t>(m.rows()), std::vector<int>(static_cast<std::size_t>(m.cols())));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = static_cast<int>(((m(r, c) % 2) + 2) % 2);
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int p = rank;
    while (p < m.rows() && !a[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)]) ++p;
    if (p == m.rows()) continue;
    std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(rank)]);
    for (int r = 0; r < m.rows(); ++r)
      if (r != rank && a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)])
        for (int j = 0; j < m.cols(); ++j) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] ^= a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)];
    ++rank;
  }
  return rank;
}

int balanced_components_oracle(const SignedGraph& g, const EdgeSet& s) {
  // Components by repeated flooding, then a circle-sign check on each.
  const int n = g.order();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[static_cast<std::size_t>(v)] >= 0) continue;
    std::vector<int> todo{v};
    comp[static_cast<std::size_t>(v)] = count;
    while (!todo.empty()) {
      int x = todo.back();
      todo.pop_back();
      s.for_each([&](int i) {
        const Edge& e = g.edge(i);
        if (e.kind != EdgeKind::Link || !e.touches(x)) return;
        int y = e.other(x);
        if (comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = count;
          todo.push_back(y);
        }
      });
    }
    ++count;
  }
  int balanced = 0;
  for (int c = 0; c < count; ++c) {
    EdgeSet part(g.size());
    s.for_each([&](int i) {
      const Edge& e = g.edge(i);
      if (e.kind != EdgeKind::Loose && comp[static_cast<std::size_t>(e.u)] == c) part.set(i);
    });
    if (circles_positive(g, part)) ++balanced;
  }
  return balanced;
}

std::vector<SignedGraph> all_signatures(const SignedGraph& g) {
  std::vector<int> signed_edges;
  for (int i = 0; i < g.size(); ++i)
    if (g.edge(i).is_ordinary()) signed_edges.push_back(i);
  std::vector<SignedGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << signed_edges.size()); ++mask) {
    std::vector<Sign> signs;
    for (const auto& e : g.edges()) signs.push_back(e.sign);
    for (std::size_t k = 0; k < signed_edges.size(); ++k)
      signs[static_cast<std::size_t>(signed_edges[k])] = (mask >> k & 1u) ? Sign::Minus : Sign::Plus;
    out.push_back(g.with_signs(signs));
  }
  return out;
}

bool switching_isomorphic_brute(const SignedGraph& g1, const SignedGraph& g2) {
  if (g1.order() != g2.order()) return false;
  const int n = g1.order();
  const IntMatrix a1 = adjacency_matrix(g1), a2 = adjacency_matrix(g2);
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do {
    for (std::uint32_t z = 0; z < (1u << n); ++z) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
          int s = ((z >> i & 1u) ? -1 : 1) * ((z >> j & 1u) ? -1 : 1);
          ok = a2(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]) == s * a1(i, j);
        }
      if (ok) return true;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

double max_abs(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace sgraph::testing
