#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sgraph/graph.hpp"
#include "sgraph/limits.hpp"
#include "sgraph/polynomial.hpp"

namespace sgraph {

enum class Family {
  Full,                 // Σ‖: a half edge at every vertex without an unbalanced edge
  FullLoops,            // Σ°: a negative loop there instead
  AllPositive,          // +Γ
  AllPositiveFull,      // +Γ‖
  AllNegative,          // -Γ
  SignedExpansion,      // ±Γ
  SignedExpansionFull,  // ±Γ‖
  PlusMinusKn,          // ±K_n
  PlusMinusKnFull,      // ±K_n‖
};

/// Short names used on the command line: full, fullloops, pos, posfull,
/// neg, pm, pmfull, pmkn, pmknfull.
std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view name);
bool needs_base(Family f) noexcept;

struct CatalogEntry {
  SignedGraph graph;
  std::optional<IntPolynomial> chi;       // closed form, when one is known
  std::optional<IntPolynomial> chi_star;
};

/// Families built on a base graph. For every family except Full and
/// FullLoops the base is read as an unsigned simple graph (signs ignored).
CatalogEntry catalog(Family f, const SignedGraph& base, const Limits& limits = {});
/// ±K_n and ±K_n‖.
CatalogEntry catalog(Family f, int n);

/// Underlying unsigned simple graph helpers.
bool is_simple_link_graph(const SignedGraph& g);
IntPolynomial unsigned_chromatic(const SignedGraph& base);
/// Closed edge sets of the graphic matroid of the base.
std::vector<EdgeSet> unsigned_flats(const SignedGraph& base, const Limits& limits = {});
/// Σ over flats F of w(F) χ_{Γ/F}(λ/2) with w(F) = 2^c(F) when `weighted`;
/// c(F) counts the components of (V, F). Without weights the plain sum is
/// not integral, so it comes back multiplied by 2^n.
IntPolynomial negative_flat_sum(const SignedGraph& base, bool weighted, const Limits& limits = {});
/// Size of a maximum matching in the complement of the base (brute force).
int complement_max_matching(const SignedGraph& base);

SignedGraph complete_graph(int n);
SignedGraph path_graph(int vertices);
SignedGraph cycle_graph(int n);

}  // namespace sgraph
