#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sgraph/exact.hpp"
#include "sgraph/limits.hpp"
#include "sgraph/orientation.hpp"

namespace sgraph {

struct LineEdgeSource {
  int e = -1;  // source edge indices, e < f
  int f = -1;
  VertexId shared = -1;
};

/// Line graph of a bidirected link graph. Vertex i of `line` is source edge
/// i; each pair of ends at a common vertex v gives one line edge with
/// τ_Λ = τ(v, ·) at its two ends, so σ_Λ = -τ(v,e)τ(v,f).
struct LineGraphResult {
  BidirectedGraph line;
  std::vector<LineEdgeSource> provenance;  // per line edge
};

LineGraphResult line_graph(const BidirectedGraph& b);

/// Signed graph of line_graph(orient(g)): the canonical member of Λ[Σ].
SignedGraph line_graph_class(const SignedGraph& g);

SignedGraph reduced_line_graph(const SignedGraph& g);

/// A(Λ(Σ)) from the line graph and 2I - ΗᵀΗ from the incidence matrix,
/// both for the canonical orientation.
std::pair<IntMatrix, IntMatrix> line_adjacency_identity(const SignedGraph& g);

struct GeneralizedLineGraph {
  SignedGraph source;        // -Γ(m): -Γ with m_i negative digons hung at v_i
  SignedGraph expected;      // -Λ(Γ; m)
  SignedGraph reduced_line;  // reduced line graph of `source`
  bool isomorphic = false;   // reduced_line ≅ expected up to switching
};

GeneralizedLineGraph generalized_line_graph(const SignedGraph& base, const std::vector<int>& m,
                                            const Limits& limits = {});

/// The line digraph of a digraph. Both are encoded as all-positive link
/// graphs in which edge (u, v) is the arc u -> v. Computed as the positive
/// part of the bidirected line graph of +D; e -> f when the head of e is the
/// tail of f.
SignedGraph harary_norman(const SignedGraph& digraph);

/// Vertex bijection p and switching s with A2[p(i)][p(j)] = s_i s_j A1[i][j]
/// for all i, j, by backtracking; nullopt when none exists.
std::optional<std::pair<std::vector<VertexId>, std::vector<Sign>>> switching_isomorphism(
    const SignedGraph& g1, const SignedGraph& g2, const Limits& limits = {});

}  // namespace sgraph
