#include "sgraph/linegraph.hpp"

#include <algorithm>

#include "sgraph/matrices.hpp"

namespace sgraph {

namespace {

void require_link_graph(const SignedGraph& g) {
  if (!g.is_link_graph()) throw InvalidArgument("line graphs need a link graph (no loops, half or loose edges)");
}

std::string vid(VertexId v) { return std::to_string(v + 1); }

}  // namespace

LineGraphResult line_graph(const BidirectedGraph& b) {
  const SignedGraph& g = b.graph();
  require_link_graph(g);
  std::vector<Edge> edges;
  std::vector<std::array<Sign, 2>> tau;
  std::vector<LineEdgeSource> provenance;
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto& inc = g.incident(v);
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t c = a + 1; c < inc.size(); ++c) {
        int e = std::min(inc[a], inc[c]);
        int f = std::max(inc[a], inc[c]);
        Sign te = b.tau(e, g.edge(e).u == v ? 0 : 1);
        Sign tf = b.tau(f, g.edge(f).u == v ? 0 : 1);
        edges.push_back(Edge::link(g.edge(e).id + "~" + g.edge(f).id + "@" + vid(v), e, f, -(te * tf)));
        tau.push_back({te, tf});
        provenance.push_back({e, f, v});
      }
  }
  return {BidirectedGraph(SignedGraph(g.size(), std::move(edges)), std::move(tau)), std::move(provenance)};
}

SignedGraph line_graph_class(const SignedGraph& g) { return line_graph(orient(g)).line.graph(); }

SignedGraph reduced_line_graph(const SignedGraph& g) { return reduce(line_graph_class(g)); }

std::pair<IntMatrix, IntMatrix> line_adjacency_identity(const SignedGraph& g) {
  require_link_graph(g);
  IntMatrix h = incidence_matrix(g);
  IntMatrix rhs = 2LL * IntMatrix::identity(g.size()) - h.transposed() * h;
  return {adjacency_matrix(line_graph_class(g)), rhs};
}

GeneralizedLineGraph generalized_line_graph(const SignedGraph& base, const std::vector<int>& m, const Limits& limits) {
  if (static_cast<int>(m.size()) != base.order()) throw InvalidArgument("need one digon count per base vertex");
  require_link_graph(base);
  for (int k : m)
    if (k < 0) throw InvalidArgument("digon counts must be non-negative");

  int extra = 0;
  for (int k : m) extra += k;
  std::vector<Edge> src;
  for (const auto& e : base.edges()) src.push_back(Edge::link(e.id, e.u, e.v, Sign::Minus));
  int next = base.order();
  for (VertexId v = 0; v < base.order(); ++v)
    for (int k = 0; k < m[static_cast<std::size_t>(v)]; ++k, ++next) {
      std::string id = "d" + vid(v) + "_" + std::to_string(k + 1);
      src.push_back(Edge::link(id + "p", v, next, Sign::Plus));
      src.push_back(Edge::link(id + "n", v, next, Sign::Minus));
    }

  GeneralizedLineGraph out;
  out.source = SignedGraph(base.order() + extra, std::move(src));

  // -Λ(Γ; m): line graph of Γ, then for each v a cocktail party graph on the
  // 2 m_v digon vertices, each joined to every line vertex of an edge at v.
  const int lines = base.size();
  std::vector<Edge> exp;
  auto add = [&](int a, int b) { exp.push_back(Edge::link("x" + std::to_string(exp.size() + 1), a, b, Sign::Minus)); };
  for (int e = 0; e < lines; ++e)
    for (int f = e + 1; f < lines; ++f) {
      const Edge& x = base.edge(e);
      const Edge& y = base.edge(f);
      int shared = (x.u == y.u) + (x.u == y.v) + (x.v == y.u) + (x.v == y.v);
      for (int s = 0; s < shared; ++s) add(e, f);
    }
  int vertex = lines;
  for (VertexId v = 0; v < base.order(); ++v) {
    const int k = m[static_cast<std::size_t>(v)];
    const int first = vertex;
    for (int a = 0; a < 2 * k; ++a)
      for (int b = a + 1; b < 2 * k; ++b)
        if (b != a + 1 || a % 2 == 1) add(first + a, first + b);
    for (int a = 0; a < 2 * k; ++a)
      for (int i : base.incident(v)) add(i, first + a);
    vertex += 2 * k;
  }
  out.expected = SignedGraph(vertex, std::move(exp));
  out.reduced_line = reduced_line_graph(out.source);
  out.isomorphic = switching_isomorphism(out.reduced_line, out.expected, limits).has_value();
  return out;
}

SignedGraph harary_norman(const SignedGraph& digraph) {
  require_link_graph(digraph);
  std::vector<std::array<Sign, 2>> tau;
  for (const auto& e : digraph.edges()) {
    if (e.sign != Sign::Plus) throw InvalidArgument("digraph edge '" + e.id + "' is not positive");
    tau.push_back({Sign::Minus, Sign::Plus});  // tail, head
  }
  auto lg = line_graph(BidirectedGraph(digraph, std::move(tau)));
  std::vector<Edge> arcs;
  for (std::size_t k = 0; k < lg.provenance.size(); ++k) {
    const Edge& le = lg.line.graph().edge(static_cast<int>(k));
    if (le.sign != Sign::Plus) continue;
    // τ(v, e) = + marks e as the arc entering the shared vertex.
    bool e_enters = lg.line.tau(static_cast<int>(k), 0) == Sign::Plus;
    auto [e, f, v] = lg.provenance[k];
    arcs.push_back(e_enters ? Edge::link(le.id, e, f, Sign::Plus) : Edge::link(le.id, f, e, Sign::Plus));
  }
  return SignedGraph(digraph.size(), std::move(arcs));
}

namespace {

struct IsoSearch {
  const IntMatrix& a1;
  const IntMatrix& a2;
  int n;
  std::vector<VertexId> perm;
  std::vector<Sign> sign;
  std::vector<char> used;
  std::vector<std::vector<long long>> profile1, profile2;

  bool extend(int i) {
    if (i == n) return true;
    for (int t = 0; t < n; ++t) {
      if (used[static_cast<std::size_t>(t)] || profile1[static_cast<std::size_t>(i)] != profile2[static_cast<std::size_t>(t)]) continue;
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
          ok = a2(t, perm[static_cast<std::size_t>(j)]) == to_int(s * sign[static_cast<std::size_t>(j)]) * a1(i, j);
        if (!ok) continue;
        perm[static_cast<std::size_t>(i)] = t;
        sign[static_cast<std::size_t>(i)] = s;
        used[static_cast<std::size_t>(t)] = 1;
        if (extend(i + 1)) return true;
        used[static_cast<std::size_t>(t)] = 0;
      }
    }
    return false;
  }
};

// Diagonal entry followed by the sorted absolute off-diagonal row.
std::vector<std::vector<long long>> row_profiles(const IntMatrix& a) {
  std::vector<std::vector<long long>> out;
  for (int i = 0; i < a.rows(); ++i) {
    std::vector<long long> row;
    for (int j = 0; j < a.cols(); ++j)
      if (j != i) row.push_back(std::llabs(a(i, j)));
    std::sort(row.begin(), row.end());
    row.insert(row.begin(), a(i, i));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::optional<std::pair<std::vector<VertexId>, std::vector<Sign>>> switching_isomorphism(
    const SignedGraph& g1, const SignedGraph& g2, const Limits& limits) {
  if (g1.order() != g2.order()) return std::nullopt;
  require_cap(g1.order(), limits.isomorphism_order, "switching isomorphism order");
  const IntMatrix a1 = adjacency_matrix(g1);
  const IntMatrix a2 = adjacency_matrix(g2);
  const int n = g1.order();
  IsoSearch search{a1, a2, n, std::vector<VertexId>(static_cast<std::size_t>(n), -1),
                   std::vector<Sign>(static_cast<std::size_t>(n), Sign::Plus), std::vector<char>(static_cast<std::size_t>(n), 0),
                   row_profiles(a1), row_profiles(a2)};
  if (!search.extend(0)) return std::nullopt;
  return std::make_pair(search.perm, search.sign);
}

}  // namespace sgraph
