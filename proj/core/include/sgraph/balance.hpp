#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sgraph/graph.hpp"
#include "sgraph/limits.hpp"

namespace sgraph {

/// A map V -> {+,-}. Switching by z and by -z give the same signed graph.
class SwitchingFunction {
 public:
  SwitchingFunction() = default;
  explicit SwitchingFunction(std::vector<Sign> values) : values_(std::move(values)) {}

  static SwitchingFunction identity(int order) { return SwitchingFunction(std::vector<Sign>(static_cast<std::size_t>(order), Sign::Plus)); }
  /// Minus exactly on `minus`.
  static SwitchingFunction from_set(int order, const std::vector<VertexId>& minus);

  int order() const noexcept { return static_cast<int>(values_.size()); }
  Sign operator()(VertexId v) const { return values_.at(static_cast<std::size_t>(v)); }
  const std::vector<Sign>& values() const noexcept { return values_; }
  std::vector<VertexId> minus_set() const;
  SwitchingFunction negated() const;

  friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;

 private:
  std::vector<Sign> values_;
};

/// Balanced components of (V, s) and the vertices of the unbalanced ones.
struct BalancePartition {
  std::vector<std::vector<VertexId>> pib;  // sorted by lowest vertex
  std::vector<VertexId> v0;
  int b = 0;

  friend bool operator==(const BalancePartition&, const BalancePartition&) = default;
};

/// Per-component result of the spanning-tree switching scan on (V, s).
struct ComponentScan {
  std::vector<int> component;       // label per vertex, ordered by lowest vertex
  std::vector<char> balanced;       // per label
  SwitchingFunction zeta;           // root of each component is +, tree edges switch to +
  int components = 0;
};

/// Runs the balance algorithm: per component of (V, s) grow a BFS tree from
/// the lowest vertex, switch by the tree path signs, and look for negative
/// non-tree edges or half edges.
ComponentScan scan_components(const SignedGraph& g, const EdgeSet& s);

BalancePartition balance_partition(const SignedGraph& g, const EdgeSet& s);
inline BalancePartition balance_partition(const SignedGraph& g) { return balance_partition(g, g.all_edges()); }

/// b(S): number of balanced components of (V, S), isolated vertices included.
int balanced_components(const SignedGraph& g, const EdgeSet& s);

bool is_balanced(const SignedGraph& g, const EdgeSet& s);
inline bool is_balanced(const SignedGraph& g) { return is_balanced(g, g.all_edges()); }

/// {V1, V2} with E^- = E(V1, V2); V1 holds vertex 0. nullopt when unbalanced.
std::optional<std::pair<std::vector<VertexId>, std::vector<VertexId>>> harary_bipartition(const SignedGraph& g);

SignedGraph switch_graph(const SignedGraph& g, const SwitchingFunction& z);

/// A witness z with g1^z = g2, or nullopt. Throws when the underlying graphs differ.
std::optional<SwitchingFunction> switching_equivalent(const SignedGraph& g1, const SignedGraph& g2);

enum class BalancingEdge { None, Partial, Total };

std::vector<BalancingEdge> classify_balancing_edges(const SignedGraph& g);
std::vector<VertexId> balancing_vertices(const SignedGraph& g);

/// Minimum total balancing set by exhaustive search over sizes 0, 1, ...;
/// ties go to the lexicographically first set of edge ids.
EdgeSet min_balancing_set(const SignedGraph& g, const Limits& limits = {});

/// Half edges and negative loops count as negative circles.
bool has_two_disjoint_negative_circles(const SignedGraph& g, const Limits& limits = {});

/// The vertex-deleted subgraph's edge set: every edge with an end in `removed` dropped.
EdgeSet edges_avoiding(const SignedGraph& g, const std::vector<VertexId>& removed);

}  // namespace sgraph
