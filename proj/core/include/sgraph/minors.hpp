#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sgraph/graph.hpp"

namespace sgraph {

/// Where the edges and vertices of a source graph went in a minor.
struct MinorTrace {
  int source_order = 0;
  EdgeSet deleted;
  EdgeSet contracted;
  /// New vertex for each old vertex; nullopt when absorbed into V0.
  std::vector<std::optional<VertexId>> image;
};

SignedGraph delete_edges(const SignedGraph& g, const EdgeSet& s);

/// Removes the vertices and every edge with an end at one of them; the
/// remaining vertices keep their relative order.
SignedGraph delete_vertices(const SignedGraph& g, const std::vector<VertexId>& vertices);

/// Σ/S. Each balanced component of S is switched all-positive along a BFS
/// tree rooted at its lowest vertex and collapsed to one vertex; vertices of
/// unbalanced components disappear and edges lose those ends.
std::pair<SignedGraph, MinorTrace> contract_set(const SignedGraph& g, const EdgeSet& s);

std::pair<SignedGraph, MinorTrace> contract_edge(const SignedGraph& g, int edge_index);
std::pair<SignedGraph, MinorTrace> contract_edge(const SignedGraph& g, std::string_view id);

}  // namespace sgraph
