#include "sgraph/angle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include <Eigen/Eigenvalues>

#include "sgraph/catalog.hpp"
#include "sgraph/matrices.hpp"

namespace sgraph {

namespace {

RationalVector unit(int n, int i, Rational scale = 1) {
  RationalVector v(static_cast<std::size_t>(n), Rational(0));
  v[static_cast<std::size_t>(i)] = scale;
  return v;
}

RationalVector combo(int n, int i, int si, int j, int sj) {
  RationalVector v(static_cast<std::size_t>(n), Rational(0));
  v[static_cast<std::size_t>(i)] = si;
  v[static_cast<std::size_t>(j)] = sj;
  return v;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InvalidArgument("vectors of different dimension");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int sign_of(const Rational& x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

}  // namespace

bool RootSystem::contains(const RationalVector& v) const { return std::binary_search(vectors.begin(), vectors.end(), v); }

RootSystem root_system(const std::string& family, int n) {
  if (n < 1) throw InvalidArgument("root system dimension must be positive");
  RootSystem rs;
  rs.dimension = n;
  auto& out = rs.vectors;
  auto add_d = [&] {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) out.push_back(combo(n, i, si, j, sj));
  };
  if (family == "A") {
    rs.name = "A" + std::to_string(n - 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) out.push_back(combo(n, j, 1, i, -1));
  } else if (family == "B" || family == "C" || family == "D") {
    rs.name = family + std::to_string(n);
    if (family == "D" && n < 2) throw InvalidArgument("D needs n >= 2");
    add_d();
    if (family != "D")
      for (int i = 0; i < n; ++i)
        for (int s : {1, -1}) out.push_back(unit(n, i, family == "B" ? s : 2 * s));
  } else if (family == "E") {
    if (n != 8) throw InvalidArgument("E is only defined here for n = 8");
    rs.name = "E8";
    add_d();
    for (int mask = 0; mask < 256; ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) % 2) continue;
      RationalVector v;
      for (int i = 0; i < 8; ++i) v.push_back(Rational(mask >> i & 1 ? -1 : 1, 2));
      out.push_back(std::move(v));
    }
  } else {
    throw InvalidArgument("unknown root system family '" + family + "'");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return rs;
}

bool verify_representation(const SignedGraph& g, const AngleRepresentation& rep) {
  if (!is_simple_link_graph(g)) throw InvalidArgument("angle representations need a simple graph");
  if (static_cast<int>(rep.rho.size()) != g.order()) throw InvalidArgument("representation has wrong number of vectors");
  if (rep.nu <= 0) return false;
  const IntMatrix a = adjacency_matrix(g);
  const int flip = rep.mode == RepresentationMode::AntiGramian ? -1 : 1;
  for (int v = 0; v < g.order(); ++v) {
    const Rational nv = dot(rep.rho[static_cast<std::size_t>(v)], rep.rho[static_cast<std::size_t>(v)]);
    if (nv == 0) return false;
    for (int w = v + 1; w < g.order(); ++w) {
      const Rational d = dot(rep.rho[static_cast<std::size_t>(v)], rep.rho[static_cast<std::size_t>(w)]);
      const Rational nw = dot(rep.rho[static_cast<std::size_t>(w)], rep.rho[static_cast<std::size_t>(w)]);
      const long long target = flip * a(v, w);
      // ρ̂v·ρ̂w = target/ν, squared to stay rational, plus a sign check.
      if (sign_of(d) != (target > 0) - (target < 0)) return false;
      if (d * d * rep.nu * rep.nu != Rational(target * target) * nv * nw) return false;
      if (rep.mode != RepresentationMode::AngleOnly && d != target) return false;
    }
  }
  return true;
}

AngleRepresentation edge_vector_representation(const SignedGraph& g) {
  if (!g.is_link_graph()) throw InvalidArgument("edge vector representation needs a link graph");
  AngleRepresentation rep;
  rep.nu = 2;
  rep.mode = RepresentationMode::AntiGramian;
  for (int i = 0; i < g.size(); ++i) {
    RationalVector v;
    for (long long x : edge_vector(g, i)) v.emplace_back(x);
    rep.rho.push_back(std::move(v));
  }
  return rep;
}

bool membership_in_root_system(const std::vector<RationalVector>& vectors, const RootSystem& rs) {
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != rs.dimension) throw InvalidArgument("vector dimension differs from root system");
    if (!rs.contains(v)) return false;
  }
  return true;
}

std::optional<NumericRepresentation> construct_gramian(const SignedGraph& g, double nu, bool anti, double tol) {
  if (!is_simple_link_graph(g)) throw InvalidArgument("angle representations need a simple graph");
  const int n = g.order();
  const IntMatrix a = adjacency_matrix(g);
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = (anti ? -1.0 : 1.0) * static_cast<double>(a(i, j)) + (i == j ? nu : 0.0);
  NumericRepresentation rep;
  rep.nu = nu;
  rep.anti = anti;
  if (n == 0) return rep;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  const auto& values = solver.eigenvalues();
  if (values(0) < -tol) return std::nullopt;
  std::vector<int> kept;
  for (int k = 0; k < n; ++k)
    if (values(k) > tol) kept.push_back(k);
  rep.rho.assign(static_cast<std::size_t>(n), std::vector<double>(kept.size(), 0.0));
  for (int v = 0; v < n; ++v)
    for (std::size_t c = 0; c < kept.size(); ++c)
      rep.rho[static_cast<std::size_t>(v)][c] = std::sqrt(values(kept[c])) * solver.eigenvectors()(v, kept[c]);
  return rep;
}

double gram_error(const SignedGraph& g, const NumericRepresentation& rep) {
  const IntMatrix a = adjacency_matrix(g);
  double worst = 0;
  for (int v = 0; v < g.order(); ++v)
    for (int w = 0; w < g.order(); ++w) {
      double d = 0;
      const auto& x = rep.rho.at(static_cast<std::size_t>(v));
      const auto& y = rep.rho.at(static_cast<std::size_t>(w));
      for (std::size_t k = 0; k < x.size(); ++k) d += x[k] * y[k];
      double target = (rep.anti ? -1.0 : 1.0) * static_cast<double>(a(v, w)) + (v == w ? rep.nu : 0.0);
      worst = std::max(worst, std::abs(d - target));
    }
  return worst;
}

NumericRepresentation normalize(const SignedGraph& g, NumericRepresentation rep, double tol) {
  const int n = g.order();
  if (static_cast<int>(rep.rho.size()) != n) throw InvalidArgument("representation has wrong number of vectors");
  auto length = [&](int v) {
    double s = 0;
    for (double x : rep.rho[static_cast<std::size_t>(v)]) s += x * x;
    return std::sqrt(s);
  };
  const double target = std::sqrt(rep.nu);
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (side[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<int> members{root};
    side[static_cast<std::size_t>(root)] = 0;
    bool bipartite = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int i : g.incident(x)) {
        const Edge& e = g.edge(i);
        int y = e.other(x);
        if (std::abs(length(x) * length(y) - rep.nu) > tol * std::max(1.0, rep.nu))
          throw InvalidArgument("representation is not Gramian-scaled on edge '" + e.id + "'");
        if (side[static_cast<std::size_t>(y)] < 0) {
          side[static_cast<std::size_t>(y)] = 1 - side[static_cast<std::size_t>(x)];
          members.push_back(y);
          queue.push_back(y);
        } else if (side[static_cast<std::size_t>(y)] == side[static_cast<std::size_t>(x)]) {
          bipartite = false;
        }
      }
    }
    if (!bipartite)
      for (int v : members)
        if (std::abs(length(v) - target) > tol * std::max(1.0, target))
          throw Error("non-bipartite component has a vector of length other than sqrt(nu)");
    for (int v : members) {
      double len = length(v);
      if (len == 0) throw InvalidArgument("zero vector in representation");
      for (double& x : rep.rho[static_cast<std::size_t>(v)]) x *= target / len;
    }
  }
  return rep;
}

}  // namespace sgraph
