#pragma once

#include <cstdint>
#include <string>

#include "sgraph/graph.hpp"

namespace sgraph {

/// Size caps for the exhaustive operations. The library is a desk-scale
/// reference tool; every enumeration refuses inputs beyond these bounds.
struct Limits {
  int circle_edges = 20;        // enumerate_circles, disjoint negative circles
  int balancing_edges = 20;     // min_balancing_set
  int frame_vertices = 10;      // enumerate_frame_circuits
  int frame_edges = 20;
  int lattice_edges = 16;       // closed_sets
  int matrix_tree_order = 8;
  int acyclic_ends = 24;        // enumerate_acyclic
  int subset_edges = 20;        // subset expansions
  int region_oracle_order = 6;
  std::uint64_t coloring_space = 50'000'000;  // (2k+1)^n for count_proper
  int stable_set_order = 20;
  int isomorphism_order = 12;

  /// Raises every edge-count cap to at least `edges`.
  Limits with_max_edges(int edges) const {
    Limits l = *this;
    l.circle_edges = l.balancing_edges = l.frame_edges = l.subset_edges = edges;
    l.lattice_edges = edges;
    return l;
  }
};

inline void require_cap(long long value, long long cap, const char* what) {
  if (value > cap)
    throw CapExceeded(std::string(what) + ": " + std::to_string(value) + " exceeds cap " + std::to_string(cap));
}

}  // namespace sgraph
