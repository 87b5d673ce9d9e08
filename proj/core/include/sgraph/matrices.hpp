#pragma once

#include <string_view>
#include <vector>

#include "sgraph/exact.hpp"
#include "sgraph/graph.hpp"
#include "sgraph/limits.hpp"

namespace sgraph {

/// Column of the incidence matrix. A link v_i v_j with i < j has +1 at i
/// and -σ at j; a half edge +1; a negative loop +2; positive loops and
/// loose edges are zero.
std::vector<long long> edge_vector(const SignedGraph& g, int edge_index);
std::vector<long long> edge_vector(const SignedGraph& g, std::string_view id);

/// n x m, columns in edge order.
IntMatrix incidence_matrix(const SignedGraph& g);

/// Columns of the incidence matrix restricted to `s`, in edge order.
IntMatrix incidence_matrix(const SignedGraph& g, const EdgeSet& s);

/// Off the diagonal: positive minus negative links. Diagonal: half edges
/// plus twice positive loops minus twice negative loops.
IntMatrix adjacency_matrix(const SignedGraph& g);

/// Drops positive loops and loose edges and cancels +/- parallel link
/// pairs (earliest positive with earliest negative) until none remain.
SignedGraph reduce(const SignedGraph& g);

/// D(|Σ|) - A(Σ), degrees counting a loop twice and a half edge once.
IntMatrix laplacian(const SignedGraph& g);

struct MatrixTreeReport {
  BigInt det_laplacian;
  std::vector<long long> b;  // b[i]: independent n-edge sets with i circles
  BigInt weighted_sum;       // Σ 4^i b[i]
  bool holds() const { return det_laplacian == weighted_sum; }
};

MatrixTreeReport matrix_tree(const SignedGraph& g, const Limits& limits = {}, int threads = 1);

/// Eigenvalues of a symmetric matrix, ascending. Throws on asymmetric input.
std::vector<double> spectrum(const IntMatrix& m);

}  // namespace sgraph
