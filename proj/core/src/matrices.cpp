#include "sgraph/matrices.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include <Eigen/Eigenvalues>

#include "sgraph/circles.hpp"
#include "sgraph/frame.hpp"

namespace sgraph {

std::vector<long long> edge_vector(const SignedGraph& g, int edge_index) {
  const Edge& e = g.edge(edge_index);
  std::vector<long long> x(static_cast<std::size_t>(g.order()), 0);
  switch (e.kind) {
    case EdgeKind::Link: {
      auto lo = static_cast<std::size_t>(std::min(e.u, e.v));
      auto hi = static_cast<std::size_t>(std::max(e.u, e.v));
      x[lo] = 1;
      x[hi] = -to_int(e.sign);
      break;
    }
    case EdgeKind::Loop:
      if (e.sign == Sign::Minus) x[static_cast<std::size_t>(e.u)] = 2;
      break;
    case EdgeKind::Half:
      x[static_cast<std::size_t>(e.u)] = 1;
      break;
    case EdgeKind::Loose:
      break;
  }
  return x;
}

std::vector<long long> edge_vector(const SignedGraph& g, std::string_view id) {
  return edge_vector(g, g.edge_index(id));
}

IntMatrix incidence_matrix(const SignedGraph& g, const EdgeSet& s) {
  auto cols = s.indices();
  IntMatrix h(g.order(), static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto x = edge_vector(g, cols[c]);
    for (int r = 0; r < g.order(); ++r) h(r, static_cast<int>(c)) = x[static_cast<std::size_t>(r)];
  }
  return h;
}

IntMatrix incidence_matrix(const SignedGraph& g) { return incidence_matrix(g, g.all_edges()); }

IntMatrix adjacency_matrix(const SignedGraph& g) {
  IntMatrix a(g.order(), g.order());
  for (const auto& e : g.edges()) {
    switch (e.kind) {
      case EdgeKind::Link:
        a(e.u, e.v) += to_int(e.sign);
        a(e.v, e.u) += to_int(e.sign);
        break;
      case EdgeKind::Loop:
        a(e.u, e.u) += 2 * to_int(e.sign);
        break;
      case EdgeKind::Half:
        a(e.u, e.u) += 1;
        break;
      case EdgeKind::Loose:
        break;
    }
  }
  return a;
}

SignedGraph reduce(const SignedGraph& g) {
  std::vector<char> drop(static_cast<std::size_t>(g.size()), 0);
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edge(i);
    if (e.kind == EdgeKind::Loose || (e.kind == EdgeKind::Loop && e.sign == Sign::Plus)) drop[static_cast<std::size_t>(i)] = 1;
  }
  for (int i = 0; i < g.size(); ++i) {
    const Edge& e = g.edge(i);
    if (e.kind != EdgeKind::Link || drop[static_cast<std::size_t>(i)]) continue;
    for (int j = i + 1; j < g.size(); ++j) {
      const Edge& f = g.edge(j);
      if (f.kind != EdgeKind::Link || drop[static_cast<std::size_t>(j)] || f.sign == e.sign) continue;
      if (std::minmax(e.u, e.v) != std::minmax(f.u, f.v)) continue;
      drop[static_cast<std::size_t>(i)] = drop[static_cast<std::size_t>(j)] = 1;
      break;
    }
  }
  std::vector<Edge> kept;
  for (int i = 0; i < g.size(); ++i)
    if (!drop[static_cast<std::size_t>(i)]) kept.push_back(g.edge(i));
  return SignedGraph(g.order(), std::move(kept));
}

IntMatrix laplacian(const SignedGraph& g) {
  IntMatrix l = IntMatrix(g.order(), g.order()) - adjacency_matrix(g);
  for (VertexId v = 0; v < g.order(); ++v) l(v, v) += degree(g, v);
  return l;
}

MatrixTreeReport matrix_tree(const SignedGraph& g, const Limits& limits, int threads) {
  require_cap(g.order(), limits.matrix_tree_order, "matrix_tree order");
  const int n = g.order();
  const int m = g.size();
  MatrixTreeReport report;
  report.det_laplacian = determinant(laplacian(g));
  report.b.assign(static_cast<std::size_t>(n + 1), 0);
  if (n == 0) {
    report.b[0] = 1;
    report.weighted_sum = 1;
    return report;
  }
  if (m < n) {
    report.weighted_sum = 0;
    return report;
  }

  // All n-subsets in lexicographic order; worker t takes every threads-th one.
  std::vector<std::vector<int>> subsets;
  std::vector<int> pick(static_cast<std::size_t>(n));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    subsets.push_back(pick);
    int j = n - 1;
    while (j >= 0 && pick[static_cast<std::size_t>(j)] == m - n + j) --j;
    if (j < 0) break;
    ++pick[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < n; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
  }

  threads = std::max(1, threads);
  std::vector<std::vector<long long>> partial(static_cast<std::size_t>(threads),
                                              std::vector<long long>(static_cast<std::size_t>(n + 1), 0));
  Limits unbounded = limits;
  unbounded.circle_edges = std::max(unbounded.circle_edges, n);
  auto work = [&](int t) {
    for (std::size_t k = static_cast<std::size_t>(t); k < subsets.size(); k += static_cast<std::size_t>(threads)) {
      EdgeSet s = EdgeSet::from_indices(m, subsets[k]);
      if (!is_independent(g, s)) continue;
      auto circles = enumerate_circles(g, s, unbounded).size();
      ++partial[static_cast<std::size_t>(t)][circles];
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  for (const auto& p : partial)
    for (std::size_t i = 0; i < p.size(); ++i) report.b[i] += p[i];
  BigInt power = 1;
  for (long long bi : report.b) {
    report.weighted_sum += power * bi;
    power *= 4;
  }
  return report;
}

std::vector<double> spectrum(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("spectrum of a non-square matrix");
  const int n = m.rows();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (m(i, j) != m(j, i)) throw InvalidArgument("spectrum of a non-symmetric matrix");
      a(i, j) = static_cast<double>(m(i, j));
    }
  if (n == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
  return out;
}

}  // namespace sgraph
