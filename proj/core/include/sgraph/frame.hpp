#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "sgraph/graph.hpp"
#include "sgraph/limits.hpp"

namespace sgraph {

enum class CircuitKind { PositiveCircle, LooseEdge, TightHandcuff, LooseHandcuff };

std::string_view to_string(CircuitKind kind) noexcept;

/// A minimal dependent edge set of the frame matroid. Half edges play the
/// role of negative loops.
struct FrameCircuit {
  CircuitKind kind = CircuitKind::PositiveCircle;
  EdgeSet edges;
  std::vector<EdgeSet> circles;  // one for a positive circle, two for handcuffs
  EdgeSet path;                  // connecting path of a loose handcuff

  friend bool operator==(const FrameCircuit&, const FrameCircuit&) = default;
};

/// All frame circuits, ordered by edge set.
std::vector<FrameCircuit> enumerate_frame_circuits(const SignedGraph& g, const Limits& limits = {});

/// Structural classification of `s`; nullopt when it is not a frame circuit.
std::optional<FrameCircuit> is_frame_circuit(const SignedGraph& g, const EdgeSet& s);

EdgeSet balance_closure(const SignedGraph& g, const EdgeSet& s);

/// (E:V0(S)) ∪ bcl of each balanced component ∪ loose edges.
EdgeSet closure(const SignedGraph& g, const EdgeSet& s);

/// S plus every e lying in a frame circuit inside S + e. Exponential; used
/// as a cross-check of closure().
EdgeSet closure_by_circuits(const SignedGraph& g, const EdgeSet& s, const Limits& limits = {});

struct ClosedSetLattice {
  std::vector<EdgeSet> elements;  // sorted by size, then by edge index list
  bool leq(std::size_t a, std::size_t b) const { return elements.at(a).subset_of(elements.at(b)); }
  std::size_t size() const noexcept { return elements.size(); }
};

ClosedSetLattice closed_sets(const SignedGraph& g, const Limits& limits = {}, int threads = 1);

/// n - b(S).
int rank(const SignedGraph& g, const EdgeSet& s);
bool is_independent(const SignedGraph& g, const EdgeSet& s);

}  // namespace sgraph
