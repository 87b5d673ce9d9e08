#pragma once

#include <map>
#include <vector>

#include "sgraph/graph.hpp"
#include "sgraph/limits.hpp"

namespace sgraph {

/// Edge set of a connected 2-regular subgraph (a loop is a circle of length
/// one, a pair of parallel links a circle of length two).
class Circle {
 public:
  /// Throws InvalidArgument unless `edges` forms a circle in `g`.
  Circle(const SignedGraph& g, EdgeSet edges);

  const EdgeSet& edges() const noexcept { return edges_; }
  int length() const noexcept { return edges_.count(); }
  std::vector<VertexId> vertices(const SignedGraph& g) const;

  friend bool operator==(const Circle&, const Circle&) = default;
  friend bool operator<(const Circle& a, const Circle& b) { return a.edges_ < b.edges_; }

 private:
  EdgeSet edges_;
};

bool is_circle(const SignedGraph& g, const EdgeSet& s);

/// Number of edge ends at `v`: a loop counts twice, a half edge once.
int degree(const SignedGraph& g, VertexId v);

/// Product of the signs of the edges of `s`. Throws on half or loose edges.
Sign edge_set_sign(const SignedGraph& g, const EdgeSet& s);

/// Vertices touched by edges of `s`, ascending.
std::vector<VertexId> vertices_of(const SignedGraph& g, const EdgeSet& s);

/// Component label of each vertex in (V, s); loose edges join nothing.
/// Labels are assigned in order of the lowest vertex of each component.
std::vector<int> component_labels(const SignedGraph& g, const EdgeSet& s, int* count = nullptr);

/// Every circle with edges inside `s`, each once, sorted by edge index list.
std::vector<Circle> enumerate_circles(const SignedGraph& g, const EdgeSet& s, const Limits& limits = {});

/// Maximal forest of links inside `s`: edges are scanned in index order and
/// kept whenever they join two different trees.
EdgeSet spanning_forest(const SignedGraph& g, const EdgeSet& s);

/// For every ordinary edge outside the maximal forest `t`, the unique
/// circle in t + e. Throws if `t` is not a maximal forest of g.
std::map<int, Circle> fundamental_system(const SignedGraph& g, const EdgeSet& t);

/// Edges of the unique path in forest `t` between `a` and `b` (empty when
/// a == b); nullopt when they lie in different trees.
std::optional<EdgeSet> forest_path(const SignedGraph& g, const EdgeSet& t, VertexId a, VertexId b);

}  // namespace sgraph
