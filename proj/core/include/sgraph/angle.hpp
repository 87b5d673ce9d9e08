#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgraph/exact.hpp"
#include "sgraph/graph.hpp"

namespace sgraph {

using RationalVector = std::vector<Rational>;

struct RootSystem {
  std::string name;  // "A3", "B4", "D4", "E8", ...
  int dimension = 0;
  std::vector<RationalVector> vectors;  // sorted, no duplicates

  bool contains(const RationalVector& v) const;
};

/// `family` is one of A, B, C, D, E and n the ambient dimension: "A" gives
/// A_{n-1} = {ε_j - ε_i}, "E" requires n = 8.
RootSystem root_system(const std::string& family, int n);

enum class RepresentationMode { AngleOnly, Gramian, AntiGramian };

struct AngleRepresentation {
  std::vector<RationalVector> rho;  // one vector per vertex
  Rational nu;
  RepresentationMode mode = RepresentationMode::AngleOnly;
};

/// Exact check of ρ̂(v)·ρ̂(w) = ±a_vw/ν (sign - for anti-Gramian) and, for
/// the Gramian modes, ρ(v)·ρ(w) = ±a_vw off the diagonal. g must be simple.
bool verify_representation(const SignedGraph& g, const AngleRepresentation& rep);

/// Canonical edge vectors as an anti-Gramian ν = 2 representation of the
/// reduced line graph of a link graph.
AngleRepresentation edge_vector_representation(const SignedGraph& g);

/// True iff every vector of `vectors` is a root of `rs`.
bool membership_in_root_system(const std::vector<RationalVector>& vectors, const RootSystem& rs);

struct NumericRepresentation {
  std::vector<std::vector<double>> rho;
  double nu = 0;
  bool anti = false;
};

inline constexpr double kGramTolerance = 1e-8;

/// Factor ±A + νI = MᵀM from its eigendecomposition and return the columns
/// of M; nullopt when an eigenvalue is below -tol.
std::optional<NumericRepresentation> construct_gramian(const SignedGraph& g, double nu, bool anti = false,
                                                        double tol = kGramTolerance);

/// max |ρ(v)·ρ(w) - (±A + νI)_vw|.
double gram_error(const SignedGraph& g, const NumericRepresentation& rep);

/// Rescales every vector to length √ν. Each component must already satisfy
/// |ρ(v)||ρ(w)| = ν on its edges; a non-bipartite component must already
/// have all lengths √ν. Works component by component.
NumericRepresentation normalize(const SignedGraph& g, NumericRepresentation rep, double tol = kGramTolerance);

}  // namespace sgraph
