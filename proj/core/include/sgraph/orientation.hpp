#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sgraph/graph.hpp"
#include "sgraph/limits.hpp"
#include "sgraph/polynomial.hpp"

namespace sgraph {

/// A signed graph with a direction on every edge end. tau[i][0] belongs to
/// the end at edges()[i].u, tau[i][1] to the end at .v (a loop has both ends
/// at u, a half edge only slot 0, a loose edge none). τ(v, e) = + means the
/// end at v points into v.
class BidirectedGraph {
 public:
  /// Signs are derived from τ: σ(e) = -τ(v,e)τ(w,e). Throws when `tau`
  /// contradicts the signs already stored in `g`.
  BidirectedGraph(SignedGraph g, std::vector<std::array<Sign, 2>> tau);

  const SignedGraph& graph() const noexcept { return g_; }
  const std::vector<std::array<Sign, 2>>& tau() const noexcept { return tau_; }
  Sign tau(int edge_index, int slot) const { return tau_.at(static_cast<std::size_t>(edge_index))[static_cast<std::size_t>(slot)]; }

  /// η(v, e): sum of τ over the ends of e at v.
  int eta(VertexId v, int edge_index) const;

  /// Every edge reversed.
  BidirectedGraph reversed() const;

 private:
  SignedGraph g_;
  std::vector<std::array<Sign, 2>> tau_;
};

/// Orientation whose η reproduces edge_vector(); a positive loop gets (+, -).
BidirectedGraph orient(const SignedGraph& g);

/// Every frame circuit has a vertex whose circuit ends all carry one sign.
bool is_acyclic(const BidirectedGraph& b, const Limits& limits = {});

/// Number of acyclic orientations of g among all τ consistent with σ.
long long enumerate_acyclic(const SignedGraph& g, const Limits& limits = {}, int threads = 1);

enum class HyperplaneKind { Difference, Coordinate, Degenerate };

/// Difference: x_j = sign * x_i with i < j (i == j for nothing: loops are
/// Coordinate or Degenerate). Coordinate: x_i = 0.
struct Hyperplane {
  HyperplaneKind kind = HyperplaneKind::Degenerate;
  VertexId i = -1;
  VertexId j = -1;
  Sign sign = Sign::Plus;
  std::vector<long long> normal;  // edge vector; zero for Degenerate

  std::string format() const;
};

std::vector<Hyperplane> arrangement(const SignedGraph& g);

/// Σ over S ⊆ E of (-1)^|S| λ^(n - rank of the normals of S), with ranks
/// computed by exact elimination.
IntPolynomial characteristic_polynomial(const SignedGraph& g, const Limits& limits = {});

struct RegionReport {
  long long region_count = 0;  // (-1)^n p(-1), or 0 with a degenerate hyperplane
  IntPolynomial char_poly;
  bool degenerate = false;
  std::optional<long long> acyclic_count;
  std::optional<long long> sign_vector_regions;
  std::optional<bool> witnesses_found;  // every acyclic τ has a point in R(τ)
};

/// With `oracle`, also counts acyclic orientations, distinct sign vectors
/// of signed-permutation points, and interior witnesses for each R(τ).
RegionReport region_count(const SignedGraph& g, bool oracle = false, const Limits& limits = {}, int threads = 1);

/// Number of distinct subspaces spanned by subsets of hyperplane normals.
long long intersection_lattice_size(const SignedGraph& g);

}  // namespace sgraph
