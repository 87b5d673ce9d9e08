#include "sgraph/coloring.hpp"

#include <map>
#include <sstream>
#include <thread>

#include "sgraph/balance.hpp"
#include "sgraph/minors.hpp"

namespace sgraph {

bool is_proper(const SignedGraph& g, const Coloration& gamma) {
  if (static_cast<int>(gamma.size()) != g.order()) throw InvalidArgument("coloration has wrong length");
  for (const auto& e : g.edges()) {
    switch (e.kind) {
      case EdgeKind::Loose:
        return false;
      case EdgeKind::Half:
        if (gamma[static_cast<std::size_t>(e.u)] == 0) return false;
        break;
      case EdgeKind::Link:
      case EdgeKind::Loop:
        if (gamma[static_cast<std::size_t>(e.v)] == to_int(e.sign) * gamma[static_cast<std::size_t>(e.u)]) return false;
        break;
    }
  }
  return true;
}

namespace {

// Backtracking over vertices in index order; an edge is checked as soon as
// its last endpoint is colored.
struct Counter {
  const SignedGraph& g;
  std::vector<int> palette;
  std::vector<std::vector<int>> closing;  // edges whose highest endpoint is v
  Coloration gamma;

  long long count(int v) {
    if (v == g.order()) return 1;
    long long total = 0;
    for (int c : palette) {
      gamma[static_cast<std::size_t>(v)] = c;
      if (ok(v)) total += count(v + 1);
    }
    return total;
  }

  bool ok(int v) const {
    for (int i : closing[static_cast<std::size_t>(v)]) {
      const Edge& e = g.edge(i);
      if (e.kind == EdgeKind::Half) {
        if (gamma[static_cast<std::size_t>(e.u)] == 0) return false;
      } else if (gamma[static_cast<std::size_t>(e.v)] == to_int(e.sign) * gamma[static_cast<std::size_t>(e.u)]) {
        return false;
      }
    }
    return true;
  }
};

}  // namespace

long long count_proper(const SignedGraph& g, int k, bool zero_free, const Limits& limits, int threads) {
  if (k < 0) throw InvalidArgument("color bound k must be non-negative");
  if (!g.edges_of_kind(EdgeKind::Loose).empty()) return 0;
  const long long colors = zero_free ? 2LL * k : 2LL * k + 1;
  BigInt space = 1;
  for (int v = 0; v < g.order(); ++v) space *= colors;
  if (space > BigInt(limits.coloring_space))
    throw CapExceeded("coloring space " + space.str() + " exceeds cap " + std::to_string(limits.coloring_space));

  std::vector<int> palette;
  for (int c = -k; c <= k; ++c)
    if (c != 0 || !zero_free) palette.push_back(c);
  std::vector<std::vector<int>> closing(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edge(i);
    closing[static_cast<std::size_t>(std::max(e.u, e.v))].push_back(i);
  }
  if (g.order() == 0) return 1;

  // Split on the color of vertex 0.
  threads = std::max(1, threads);
  std::vector<long long> partial(static_cast<std::size_t>(threads), 0);
  auto work = [&](int t) {
    Counter c{g, palette, closing, Coloration(static_cast<std::size_t>(g.order()), 0)};
    for (std::size_t p = static_cast<std::size_t>(t); p < palette.size(); p += static_cast<std::size_t>(threads)) {
      c.gamma[0] = palette[p];
      if (c.ok(0)) partial[static_cast<std::size_t>(t)] += c.count(1);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  long long total = 0;
  for (long long p : partial) total = checked_add(total, p);
  return total;
}

namespace {

std::string memo_key(const SignedGraph& g) {
  std::vector<std::string> parts;
  for (const auto& e : g.edges()) {
    std::ostringstream os;
    os << static_cast<int>(e.kind) << ':' << std::min(e.u, e.v) << ':' << std::max(e.u, e.v) << ':' << to_int(e.sign);
    parts.push_back(os.str());
  }
  std::sort(parts.begin(), parts.end());
  std::string key = std::to_string(g.order());
  for (const auto& p : parts) key += ' ' + p;
  return key;
}

class DelCon {
 public:
  explicit DelCon(bool zero_free) : zero_free_(zero_free) {}

  IntPolynomial operator()(const SignedGraph& g) {
    auto key = memo_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    IntPolynomial p = compute(g);
    memo_.emplace(std::move(key), p);
    return p;
  }

 private:
  IntPolynomial compute(const SignedGraph& g) {
    for (const auto& e : g.edges())
      if (e.kind == EdgeKind::Loose || (e.kind == EdgeKind::Loop && e.sign == Sign::Plus)) return IntPolynomial();
    for (int i = 0; i < g.size(); ++i)
      if (g.edge(i).kind == EdgeKind::Link)
        return (*this)(delete_edges(g, EdgeSet(g.size(), {i}))) - (*this)(contract_edge(g, i).first);

    // Only unbalanced edges remain.
    std::vector<char> marked(static_cast<std::size_t>(g.order()), 0);
    for (const auto& e : g.edges()) marked[static_cast<std::size_t>(e.u)] = 1;
    IntPolynomial p = IntPolynomial::constant(1);
    for (char m : marked) p *= (m && !zero_free_) ? IntPolynomial({-1, 1}) : IntPolynomial::lambda();
    return p;
  }

  bool zero_free_;
  std::map<std::string, IntPolynomial> memo_;
};

}  // namespace

IntPolynomial chromatic_poly_delcon(const SignedGraph& g, bool zero_free) { return DelCon(zero_free)(g); }

IntPolynomial chromatic_poly_subset(const SignedGraph& g, bool zero_free, const Limits& limits, int threads) {
  require_cap(g.size(), limits.subset_edges, "subset expansion edge count");
  const int m = g.size();
  const int n = g.order();
  const std::uint64_t total = std::uint64_t{1} << m;
  threads = std::max(1, threads);
  std::vector<std::vector<long long>> partial(static_cast<std::size_t>(threads),
                                              std::vector<long long>(static_cast<std::size_t>(n + 1), 0));
  auto work = [&](int t) {
    auto& coeff = partial[static_cast<std::size_t>(t)];
    for (std::uint64_t mask = static_cast<std::uint64_t>(t); mask < total; mask += static_cast<std::uint64_t>(threads)) {
      EdgeSet s = EdgeSet::from_mask(m, mask);
      auto scan = scan_components(g, s);
      int b = 0;
      bool balanced = true;
      for (char c : scan.balanced) {
        b += c;
        balanced = balanced && c;
      }
      if (zero_free && !balanced) continue;
      coeff[static_cast<std::size_t>(b)] += (std::popcount(mask) % 2) ? -1 : 1;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  IntPolynomial p;
  for (auto& c : partial) p += IntPolynomial(std::move(c));
  return p;
}

bool is_stable(const SignedGraph& g, const std::vector<VertexId>& w) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (VertexId v : w) in[static_cast<std::size_t>(v)] = 1;
  for (const auto& e : g.edges()) {
    if (e.kind == EdgeKind::Loose) continue;
    bool u_in = in[static_cast<std::size_t>(e.u)];
    if (e.kind == EdgeKind::Link) {
      if (u_in && in[static_cast<std::size_t>(e.v)]) return false;
    } else if (u_in) {
      return false;
    }
  }
  return true;
}

IntPolynomial chromatic_via_expansion(const SignedGraph& g, const Limits& limits) {
  require_cap(g.order(), limits.stable_set_order, "stable set enumeration order");
  const int n = g.order();
  IntPolynomial p;
  DelCon zero_free(true);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<VertexId> w;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) w.push_back(v);
    if (!is_stable(g, w)) continue;
    p += zero_free(delete_vertices(g, w)).substitute(1, -1);
  }
  return p;
}

ChromaticNumbers chromatic_numbers(const SignedGraph& g) {
  ChromaticNumbers out;
  const IntPolynomial chi = chromatic_poly_delcon(g, false);
  const IntPolynomial chi_star = chromatic_poly_delcon(g, true);
  // With k >= n every vertex can take its own absolute value, so the
  // search below ends whenever the polynomial is nonzero.
  for (int k = 0; !chi.is_zero() && k <= g.order(); ++k)
    if (chi(2LL * k + 1) != 0) {
      out.chi = k;
      break;
    }
  for (int k = 0; !chi_star.is_zero() && k <= g.order(); ++k)
    if (chi_star(2LL * k) != 0) {
      out.chi_star = k;
      break;
    }
  return out;
}

}  // namespace sgraph
