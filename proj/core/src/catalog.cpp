#include "sgraph/catalog.hpp"

#include <algorithm>
#include <map>

#include "sgraph/coloring.hpp"
#include "sgraph/detail/union_find.hpp"
#include "sgraph/minors.hpp"

namespace sgraph {

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::Full: return "full";
    case Family::FullLoops: return "fullloops";
    case Family::AllPositive: return "pos";
    case Family::AllPositiveFull: return "posfull";
    case Family::AllNegative: return "neg";
    case Family::SignedExpansion: return "pm";
    case Family::SignedExpansionFull: return "pmfull";
    case Family::PlusMinusKn: return "pmkn";
    case Family::PlusMinusKnFull: return "pmknfull";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::Full, Family::FullLoops, Family::AllPositive, Family::AllPositiveFull, Family::AllNegative,
                   Family::SignedExpansion, Family::SignedExpansionFull, Family::PlusMinusKn, Family::PlusMinusKnFull})
    if (to_string(f) == name) return f;
  throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

bool needs_base(Family f) noexcept { return f != Family::PlusMinusKn && f != Family::PlusMinusKnFull; }

bool is_simple_link_graph(const SignedGraph& g) {
  std::vector<std::pair<int, int>> seen;
  for (const auto& e : g.edges()) {
    if (e.kind != EdgeKind::Link) return false;
    seen.push_back(std::minmax(e.u, e.v));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

namespace {

void require_simple(const SignedGraph& base) {
  if (!is_simple_link_graph(base)) throw InvalidArgument("base graph must be a simple link graph");
}

std::string vid(VertexId v) { return std::to_string(v + 1); }

// Adjacency as bitmasks; n stays small at desk scale.
using Adj = std::vector<std::uint32_t>;

Adj adjacency_masks(const SignedGraph& base) {
  if (base.order() > 32) throw CapExceeded("unsigned chromatic polynomial order exceeds 32");
  Adj adj(static_cast<std::size_t>(base.order()), 0);
  for (const auto& e : base.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
    adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
  }
  return adj;
}

// χ(G) = χ(G - uv) - χ(G / uv) on simple graphs.
struct UnsignedDelCon {
  std::map<Adj, IntPolynomial> memo;

  IntPolynomial operator()(const Adj& adj) {
    if (auto it = memo.find(adj); it != memo.end()) return it->second;
    IntPolynomial p;
    int u = -1;
    for (std::size_t i = 0; i < adj.size() && u < 0; ++i)
      if (adj[i]) u = static_cast<int>(i);
    if (u < 0) {
      p = IntPolynomial::monomial(static_cast<int>(adj.size()));
    } else {
      int v = std::countr_zero(adj[static_cast<std::size_t>(u)]);
      Adj del = adj;
      del[static_cast<std::size_t>(u)] &= ~(1u << v);
      del[static_cast<std::size_t>(v)] &= ~(1u << u);
      p = (*this)(del) - (*this)(contract(del, u, v));
    }
    memo.emplace(adj, p);
    return p;
  }

  // Merge v into u, then drop v and renumber.
  static Adj contract(const Adj& adj, int u, int v) {
    Adj a = adj;
    a[static_cast<std::size_t>(u)] |= a[static_cast<std::size_t>(v)];
    a[static_cast<std::size_t>(u)] &= ~(1u << u);
    for (auto& row : a)
      if (row >> v & 1u) row = (row & ~(1u << v)) | (1u << u);
    a[static_cast<std::size_t>(u)] &= ~(1u << u);
    Adj out;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (static_cast<int>(i) == v) continue;
      std::uint32_t row = a[i];
      std::uint32_t low = row & ((1u << v) - 1u);
      std::uint32_t high = (row >> (v + 1)) << v;
      out.push_back(low | high);
    }
    return out;
  }
};

SignedGraph with_unbalanced_everywhere(const SignedGraph& g, bool loops) {
  std::vector<Edge> edges = g.edges();
  std::vector<char> bare(static_cast<std::size_t>(g.order()), 1);
  for (const auto& e : g.edges())
    if (e.is_unbalanced()) bare[static_cast<std::size_t>(e.u)] = 0;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (!bare[static_cast<std::size_t>(v)]) continue;
    std::string id = (loops ? "l" : "h") + vid(v);
    while (g.find_edge(id)) id += "'";
    edges.push_back(loops ? Edge::loop(id, v, Sign::Minus) : Edge::half(id, v));
  }
  return SignedGraph(g.order(), std::move(edges));
}

SignedGraph signed_copy(const SignedGraph& base, Sign s) {
  std::vector<Edge> edges;
  for (const auto& e : base.edges()) edges.push_back(Edge::link(e.id, e.u, e.v, s));
  return SignedGraph(base.order(), std::move(edges));
}

SignedGraph signed_expansion(const SignedGraph& base) {
  std::vector<Edge> edges;
  for (const auto& e : base.edges()) {
    edges.push_back(Edge::link(e.id + "p", e.u, e.v, Sign::Plus));
    edges.push_back(Edge::link(e.id + "n", e.u, e.v, Sign::Minus));
  }
  return SignedGraph(base.order(), std::move(edges));
}

long long pow2(int k) { return 1LL << k; }

}  // namespace

SignedGraph complete_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b.link(i, j, Sign::Plus, "e" + vid(i) + "_" + vid(j));
  return b.build();
}

SignedGraph path_graph(int vertices) {
  GraphBuilder b(vertices);
  for (int i = 0; i + 1 < vertices; ++i) b.link(i, i + 1, Sign::Plus);
  return b.build();
}

SignedGraph cycle_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.link(i, (i + 1) % n, Sign::Plus);
  return b.build();
}

IntPolynomial unsigned_chromatic(const SignedGraph& base) {
  require_simple(base);
  return UnsignedDelCon{}(adjacency_masks(base));
}

std::vector<EdgeSet> unsigned_flats(const SignedGraph& base, const Limits& limits) {
  require_simple(base);
  require_cap(base.size(), limits.lattice_edges, "flat enumeration edge count");
  const int m = base.size();
  std::vector<EdgeSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    detail::UnionFind uf(base.order());
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) uf.unite(base.edge(i).u, base.edge(i).v);
    bool closed = true;
    for (int i = 0; i < m && closed; ++i)
      if (!(mask >> i & 1u) && uf.find(base.edge(i).u) == uf.find(base.edge(i).v)) closed = false;
    if (closed) out.push_back(EdgeSet::from_mask(m, mask));
  }
  return out;
}

IntPolynomial negative_flat_sum(const SignedGraph& base, bool weighted, const Limits& limits) {
  IntPolynomial sum;
  const SignedGraph positive = signed_copy(base, Sign::Plus);
  for (const auto& f : unsigned_flats(base, limits)) {
    // Γ/F: contract every edge of F; parallel edges collapse.
    auto [quotient, trace] = contract_set(positive, f);
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : quotient.edges()) pairs.push_back(std::minmax(e.u, e.v));
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    GraphBuilder simple(quotient.order());
    for (auto [u, v] : pairs) simple.link(u, v, Sign::Plus);
    const long long w = weighted ? pow2(quotient.order()) : pow2(base.order());
    sum += unsigned_chromatic(simple.build()).substitute(1, 0, 2, w);
  }
  return sum;
}

int complement_max_matching(const SignedGraph& base) {
  require_simple(base);
  const int n = base.order();
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const auto& e : base.edges()) adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  // Lowest unused vertex is either left unmatched or matched to a later non-neighbour.
  auto best = [&](auto&& self, int from) -> int {
    int v = from;
    while (v < n && used[static_cast<std::size_t>(v)]) ++v;
    if (v >= n) return 0;
    used[static_cast<std::size_t>(v)] = 1;
    int result = self(self, v + 1);
    for (int w = v + 1; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)] || adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      result = std::max(result, 1 + self(self, v + 1));
      used[static_cast<std::size_t>(w)] = 0;
    }
    used[static_cast<std::size_t>(v)] = 0;
    return result;
  };
  return best(best, 0);
}

CatalogEntry catalog(Family f, const SignedGraph& base, const Limits& limits) {
  const int n = base.order();
  CatalogEntry out;
  switch (f) {
    case Family::Full:
    case Family::FullLoops: {
      out.graph = with_unbalanced_everywhere(base, f == Family::FullLoops);
      IntPolynomial star = chromatic_poly_delcon(base, true);
      out.chi = star.substitute(1, -1);
      out.chi_star = star;
      return out;
    }
    case Family::PlusMinusKn:
    case Family::PlusMinusKnFull:
      return catalog(f, n);
    default:
      break;
  }

  require_simple(base);
  const IntPolynomial chi_base = unsigned_chromatic(base);
  switch (f) {
    case Family::AllPositive:
      out.graph = signed_copy(base, Sign::Plus);
      out.chi = out.chi_star = chi_base;
      break;
    case Family::AllPositiveFull:
      out.graph = with_unbalanced_everywhere(signed_copy(base, Sign::Plus), false);
      out.chi = chi_base.substitute(1, -1);
      out.chi_star = chi_base;
      break;
    case Family::AllNegative:
      out.graph = signed_copy(base, Sign::Minus);
      out.chi_star = negative_flat_sum(base, true, limits);
      break;
    case Family::SignedExpansion: {
      out.graph = signed_expansion(base);
      out.chi_star = chi_base.substitute(1, 0, 2, pow2(n));
      IntPolynomial chi;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<VertexId> w;
        for (int v = 0; v < n; ++v)
          if (mask >> v & 1u) w.push_back(v);
        if (!is_stable(base, w)) continue;
        SignedGraph rest = delete_vertices(base, w);
        chi += unsigned_chromatic(rest).substitute(1, -1, 2, pow2(rest.order()));
      }
      out.chi = chi;
      break;
    }
    case Family::SignedExpansionFull:
      out.graph = with_unbalanced_everywhere(signed_expansion(base), false);
      out.chi = chi_base.substitute(1, -1, 2, pow2(n));
      out.chi_star = chi_base.substitute(1, 0, 2, pow2(n));
      break;
    default:
      break;
  }
  return out;
}

CatalogEntry catalog(Family f, int n) {
  if (f != Family::PlusMinusKn && f != Family::PlusMinusKnFull) throw InvalidArgument("family needs a base graph");
  if (n < 0) throw InvalidArgument("n must be non-negative");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      edges.push_back(Edge::link("p" + vid(i) + "_" + vid(j), i, j, Sign::Plus));
      edges.push_back(Edge::link("n" + vid(i) + "_" + vid(j), i, j, Sign::Minus));
    }
  CatalogEntry out;
  std::vector<long long> odd, even;
  for (int i = 1; i <= n; ++i) odd.push_back(2LL * i - 1);
  for (int i = 0; i < n; ++i) even.push_back(2LL * i);
  out.chi_star = IntPolynomial::from_roots(even);
  if (f == Family::PlusMinusKnFull) {
    for (int i = 0; i < n; ++i) edges.push_back(Edge::half("h" + vid(i), i));
    out.chi = IntPolynomial::from_roots(odd);
  } else {
    std::vector<long long> roots(odd.begin(), odd.end() - (n > 0 ? 1 : 0));
    if (n > 0) roots.push_back(n - 1);
    out.chi = IntPolynomial::from_roots(roots);
  }
  out.graph = SignedGraph(n, std::move(edges));
  return out;
}

}  // namespace sgraph
