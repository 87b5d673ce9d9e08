#include "sgraph/orientation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "sgraph/exact.hpp"
#include "sgraph/frame.hpp"
#include "sgraph/matrices.hpp"

namespace sgraph {

BidirectedGraph::BidirectedGraph(SignedGraph g, std::vector<std::array<Sign, 2>> tau)
    : g_(std::move(g)), tau_(std::move(tau)) {
  if (static_cast<int>(tau_.size()) != g_.size()) throw InvalidArgument("orientation has wrong number of edges");
  for (int i = 0; i < g_.size(); ++i) {
    const Edge& e = g_.edge(i);
    if (!e.is_ordinary()) continue;
    if (-(tau_[static_cast<std::size_t>(i)][0] * tau_[static_cast<std::size_t>(i)][1]) != e.sign)
      throw InvalidArgument("orientation of edge '" + e.id + "' contradicts its sign");
  }
}

int BidirectedGraph::eta(VertexId v, int edge_index) const {
  const Edge& e = g_.edge(edge_index);
  const auto& t = tau_.at(static_cast<std::size_t>(edge_index));
  switch (e.kind) {
    case EdgeKind::Link:
      return e.u == v ? to_int(t[0]) : e.v == v ? to_int(t[1]) : 0;
    case EdgeKind::Loop:
      return e.u == v ? to_int(t[0]) + to_int(t[1]) : 0;
    case EdgeKind::Half:
      return e.u == v ? to_int(t[0]) : 0;
    case EdgeKind::Loose:
      return 0;
  }
  return 0;
}

BidirectedGraph BidirectedGraph::reversed() const {
  auto t = tau_;
  for (auto& ends : t) ends = {-ends[0], -ends[1]};
  return BidirectedGraph(g_, std::move(t));
}

BidirectedGraph orient(const SignedGraph& g) {
  std::vector<std::array<Sign, 2>> tau;
  for (const auto& e : g.edges()) {
    switch (e.kind) {
      case EdgeKind::Link:
        tau.push_back(e.u < e.v ? std::array{Sign::Plus, -e.sign} : std::array{-e.sign, Sign::Plus});
        break;
      case EdgeKind::Loop:
        tau.push_back({Sign::Plus, -e.sign});
        break;
      case EdgeKind::Half:
      case EdgeKind::Loose:
        tau.push_back({Sign::Plus, Sign::Plus});
        break;
    }
  }
  return BidirectedGraph(g, std::move(tau));
}

namespace {

struct End {
  int edge;
  int slot;
};

// Ends of each frame circuit grouped by vertex; nullopt marks a loose edge.
using CircuitEnds = std::optional<std::vector<std::vector<End>>>;

std::vector<CircuitEnds> circuit_ends(const SignedGraph& g, const Limits& limits) {
  std::vector<CircuitEnds> out;
  for (const auto& fc : enumerate_frame_circuits(g, limits)) {
    if (fc.kind == CircuitKind::LooseEdge) {
      out.emplace_back(std::nullopt);
      continue;
    }
    std::vector<std::vector<End>> by_vertex(static_cast<std::size_t>(g.order()));
    fc.edges.for_each([&](int i) {
      const Edge& e = g.edge(i);
      by_vertex[static_cast<std::size_t>(e.u)].push_back({i, 0});
      if (e.kind == EdgeKind::Link || e.kind == EdgeKind::Loop) by_vertex[static_cast<std::size_t>(e.v)].push_back({i, 1});
    });
    std::erase_if(by_vertex, [](const auto& ends) { return ends.empty(); });
    out.emplace_back(std::move(by_vertex));
  }
  return out;
}

template <class TauOf>
bool acyclic_with(const std::vector<CircuitEnds>& circuits, TauOf tau_of) {
  for (const auto& c : circuits) {
    if (!c) return false;
    bool found = false;
    for (const auto& ends : *c) {
      Sign first = tau_of(ends.front());
      if (std::all_of(ends.begin(), ends.end(), [&](const End& x) { return tau_of(x) == first; })) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Edges that carry a free orientation bit; bit set means τ at slot 0 is +.
std::vector<int> choice_edges(const SignedGraph& g) {
  std::vector<int> out;
  for (int i = 0; i < g.size(); ++i)
    if (g.edge(i).kind != EdgeKind::Loose) out.push_back(i);
  return out;
}

Sign tau_from_bit(const Edge& e, bool bit, int slot) {
  Sign t0 = bit ? Sign::Plus : Sign::Minus;
  return slot == 0 ? t0 : -e.sign * t0;
}

std::vector<std::uint64_t> acyclic_masks(const SignedGraph& g, const Limits& limits, int threads) {
  const auto choices = choice_edges(g);
  require_cap(static_cast<long long>(choices.size()), limits.acyclic_ends, "acyclic orientation choices");
  const auto circuits = circuit_ends(g, limits);
  std::vector<int> bit_of(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t k = 0; k < choices.size(); ++k) bit_of[static_cast<std::size_t>(choices[k])] = static_cast<int>(k);

  const std::uint64_t total = std::uint64_t{1} << choices.size();
  threads = std::max(1, threads);
  std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(threads));
  auto work = [&](int t) {
    for (std::uint64_t mask = static_cast<std::uint64_t>(t); mask < total; mask += static_cast<std::uint64_t>(threads)) {
      auto tau_of = [&](const End& x) {
        bool bit = mask >> bit_of[static_cast<std::size_t>(x.edge)] & 1u;
        return tau_from_bit(g.edge(x.edge), bit, x.slot);
      };
      if (acyclic_with(circuits, tau_of)) found[static_cast<std::size_t>(t)].push_back(mask);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  std::vector<std::uint64_t> all;
  for (auto& f : found) all.insert(all.end(), f.begin(), f.end());
  std::sort(all.begin(), all.end());
  return all;
}

// Row echelon form over the integers with rows kept primitive and sorted by pivot.
class IntEchelon {
 public:
  bool add(std::vector<long long> v) {
    for (const auto& row : rows_) {
      auto p = pivot(row);
      if (v[p] == 0) continue;
      long long a = row[p], b = v[p];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = checked_add(checked_mul(a, v[j]), checked_mul(-b, row[j]));
      normalize(v);
    }
    auto it = std::find_if(v.begin(), v.end(), [](long long x) { return x != 0; });
    if (it == v.end()) return false;
    auto p = static_cast<std::size_t>(it - v.begin());
    auto pos = std::find_if(rows_.begin(), rows_.end(), [&](const auto& row) { return pivot(row) > p; });
    rows_.insert(pos, std::move(v));
    return true;
  }
  int rank() const noexcept { return static_cast<int>(rows_.size()); }

 private:
  static std::size_t pivot(const std::vector<long long>& row) {
    return static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](long long x) { return x != 0; }) - row.begin());
  }
  static void normalize(std::vector<long long>& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x);
    if (g > 1)
      for (auto& x : v) x /= g;
  }
  std::vector<std::vector<long long>> rows_;
};

void charpoly_rec(const std::vector<std::vector<long long>>& normals, std::size_t k, const IntEchelon& ech,
                  bool odd, int n, std::vector<long long>& coeff) {
  if (k == normals.size()) {
    auto& c = coeff[static_cast<std::size_t>(n - ech.rank())];
    c = checked_add(c, odd ? -1 : 1);
    return;
  }
  charpoly_rec(normals, k + 1, ech, odd, n, coeff);
  IntEchelon with = ech;
  with.add(normals[k]);
  charpoly_rec(normals, k + 1, with, !odd, n, coeff);
}

}  // namespace

bool is_acyclic(const BidirectedGraph& b, const Limits& limits) {
  const auto circuits = circuit_ends(b.graph(), limits);
  return acyclic_with(circuits, [&](const End& x) { return b.tau(x.edge, x.slot); });
}

long long enumerate_acyclic(const SignedGraph& g, const Limits& limits, int threads) {
  return static_cast<long long>(acyclic_masks(g, limits, threads).size());
}

std::string Hyperplane::format() const {
  std::ostringstream os;
  switch (kind) {
    case HyperplaneKind::Difference:
      os << 'x' << j + 1 << " = " << (sign == Sign::Plus ? "" : "-") << 'x' << i + 1;
      break;
    case HyperplaneKind::Coordinate:
      os << 'x' << i + 1 << " = 0";
      break;
    case HyperplaneKind::Degenerate:
      os << "0 = 0";
      break;
  }
  return os.str();
}

std::vector<Hyperplane> arrangement(const SignedGraph& g) {
  std::vector<Hyperplane> out;
  for (int k = 0; k < g.size(); ++k) {
    const Edge& e = g.edge(k);
    Hyperplane h;
    h.normal = edge_vector(g, k);
    switch (e.kind) {
      case EdgeKind::Link:
        h.kind = HyperplaneKind::Difference;
        h.i = std::min(e.u, e.v);
        h.j = std::max(e.u, e.v);
        h.sign = e.sign;
        break;
      case EdgeKind::Loop:
        if (e.sign == Sign::Minus) {
          h.kind = HyperplaneKind::Coordinate;
          h.i = e.u;
        }
        break;
      case EdgeKind::Half:
        h.kind = HyperplaneKind::Coordinate;
        h.i = e.u;
        break;
      case EdgeKind::Loose:
        break;
    }
    out.push_back(std::move(h));
  }
  return out;
}

IntPolynomial characteristic_polynomial(const SignedGraph& g, const Limits& limits) {
  require_cap(g.size(), limits.subset_edges, "characteristic polynomial edge count");
  std::vector<std::vector<long long>> normals;
  for (const auto& h : arrangement(g)) {
    if (h.kind == HyperplaneKind::Degenerate) return IntPolynomial();
    normals.push_back(h.normal);
  }
  const int n = g.order();
  std::vector<long long> coeff(static_cast<std::size_t>(n + 1), 0);
  charpoly_rec(normals, 0, IntEchelon(), false, n, coeff);
  return IntPolynomial(std::move(coeff));
}

RegionReport region_count(const SignedGraph& g, bool oracle, const Limits& limits, int threads) {
  RegionReport r;
  const auto hs = arrangement(g);
  r.degenerate = std::any_of(hs.begin(), hs.end(), [](const Hyperplane& h) { return h.kind == HyperplaneKind::Degenerate; });
  r.char_poly = characteristic_polynomial(g, limits);
  const int n = g.order();
  BigInt at = r.char_poly(BigInt(-1));
  r.region_count = r.degenerate ? 0 : to_int64(n % 2 ? -at : at);
  if (!oracle) return r;

  auto masks = acyclic_masks(g, limits, threads);
  r.acyclic_count = static_cast<long long>(masks.size());
  if (r.degenerate) return r;
  require_cap(n, limits.region_oracle_order, "region oracle order");

  // Each signed permutation point off every hyperplane lies in one region;
  // the region is named by its sign vector, which here doubles as the τ mask
  // whose R(τ) contains the point.
  const auto choices = choice_edges(g);
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  threads = std::max(1, threads);
  std::vector<std::unordered_set<std::uint64_t>> seen(static_cast<std::size_t>(threads));
  auto work = [&](int t) {
    std::vector<long long> x(static_cast<std::size_t>(n));
    for (std::size_t k = static_cast<std::size_t>(t); k < perms.size(); k += static_cast<std::size_t>(threads)) {
      for (std::uint32_t signs = 0; signs < (1u << n); ++signs) {
        for (int i = 0; i < n; ++i)
          x[static_cast<std::size_t>(i)] = (signs >> i & 1u ? -1 : 1) * perms[k][static_cast<std::size_t>(i)];
        std::uint64_t mask = 0;
        bool on_plane = false;
        for (std::size_t c = 0; c < choices.size(); ++c) {
          // With bit set, τ at slot 0 is + and the R(τ) inequality is η·x > 0.
          const Edge& e = g.edge(choices[c]);
          long long dot = 0;
          switch (e.kind) {
            case EdgeKind::Link: dot = x[static_cast<std::size_t>(e.u)] - to_int(e.sign) * x[static_cast<std::size_t>(e.v)]; break;
            case EdgeKind::Loop: dot = e.sign == Sign::Minus ? x[static_cast<std::size_t>(e.u)] : 0; break;
            case EdgeKind::Half: dot = x[static_cast<std::size_t>(e.u)]; break;
            case EdgeKind::Loose: break;
          }
          if (dot == 0) {
            on_plane = true;
            break;
          }
          if (dot > 0) mask |= std::uint64_t{1} << c;
        }
        if (!on_plane) seen[static_cast<std::size_t>(t)].insert(mask);
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  std::set<std::uint64_t> regions;
  for (auto& s : seen) regions.insert(s.begin(), s.end());
  r.sign_vector_regions = static_cast<long long>(regions.size());
  r.witnesses_found = std::all_of(masks.begin(), masks.end(), [&](std::uint64_t m) { return regions.count(m) > 0; });
  return r;
}

long long intersection_lattice_size(const SignedGraph& g) {
  std::vector<RationalMatrix> normals;
  const int n = g.order();
  for (const auto& h : arrangement(g)) {
    if (h.kind == HyperplaneKind::Degenerate) continue;
    RationalMatrix row(1, n);
    for (int i = 0; i < n; ++i) row(0, i) = Rational(h.normal[static_cast<std::size_t>(i)]);
    normals.push_back(std::move(row));
  }
  auto key = [&](const RationalMatrix& m) {
    std::vector<Rational> k;
    k.emplace_back(m.rows());
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) k.push_back(m(r, c));
    return k;
  };
  std::set<std::vector<Rational>> seen;
  std::vector<RationalMatrix> frontier{RationalMatrix(0, n)};
  seen.insert(key(frontier.front()));
  while (!frontier.empty()) {
    std::vector<RationalMatrix> next;
    for (const auto& span : frontier) {
      for (const auto& h : normals) {
        RationalMatrix stacked(span.rows() + 1, n);
        for (int r = 0; r < span.rows(); ++r)
          for (int c = 0; c < n; ++c) stacked(r, c) = span(r, c);
        for (int c = 0; c < n; ++c) stacked(span.rows(), c) = h(0, c);
        auto reduced = rref(stacked);
        if (reduced.rows() == span.rows()) continue;
        if (seen.insert(key(reduced)).second) next.push_back(std::move(reduced));
      }
    }
    frontier = std::move(next);
  }
  return static_cast<long long>(seen.size());
}

}  // namespace sgraph
