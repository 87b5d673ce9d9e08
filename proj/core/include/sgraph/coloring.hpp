#pragma once

#include <optional>
#include <vector>

#include "sgraph/graph.hpp"
#include "sgraph/limits.hpp"
#include "sgraph/polynomial.hpp"

namespace sgraph {

/// Colors in {-k..k}; zero-free colorations avoid 0.
using Coloration = std::vector<int>;

/// γ(w) != σ(e) γ(v) on links and loops, γ != 0 at half edges, and no
/// loose edges.
bool is_proper(const SignedGraph& g, const Coloration& gamma);

/// Brute-force count of proper colorations with colors in Λ_k (zero_free:
/// Λ_k without 0).
long long count_proper(const SignedGraph& g, int k, bool zero_free, const Limits& limits = {}, int threads = 1);

/// Deletion-contraction on links. Unbalanced edges: for χ, each vertex
/// carrying one is colored from the 2k nonzero colors; for χ* they impose
/// nothing and are dropped.
IntPolynomial chromatic_poly_delcon(const SignedGraph& g, bool zero_free);

/// Σ (-1)^|S| λ^b(S) over all S ⊆ E, or over balanced S for χ*.
IntPolynomial chromatic_poly_subset(const SignedGraph& g, bool zero_free, const Limits& limits = {}, int threads = 1);

/// Σ over stable W ⊆ V of χ*_{Σ∖W}(λ - 1).
IntPolynomial chromatic_via_expansion(const SignedGraph& g, const Limits& limits = {});

/// W carries no loop or half edge and spans no link.
bool is_stable(const SignedGraph& g, const std::vector<VertexId>& w);

struct ChromaticNumbers {
  std::optional<int> chi;       // min k with χ(2k+1) != 0
  std::optional<int> chi_star;  // min k with χ*(2k) != 0
};

ChromaticNumbers chromatic_numbers(const SignedGraph& g);

}  // namespace sgraph
