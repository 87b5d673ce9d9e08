#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sgraph/sgraph.hpp"

namespace sgtool {

using json = nlohmann::json;

std::string vertex_set(const std::vector<sgraph::VertexId>& vs);
std::string edge_list(const sgraph::SignedGraph& g, const sgraph::EdgeSet& s);
json edge_ids(const sgraph::SignedGraph& g, const sgraph::EdgeSet& s);
json vertex_numbers(const std::vector<sgraph::VertexId>& vs);
json graph_summary(const sgraph::SignedGraph& g);
json graph_json(const sgraph::SignedGraph& g);
json polynomial_json(const sgraph::IntPolynomial& p);
json matrix_json(const sgraph::IntMatrix& m);
std::string matrix_tsv(const sgraph::IntMatrix& m, const std::vector<std::string>& row_labels,
                       const std::vector<std::string>& col_labels);
std::string big(const sgraph::BigInt& x);

/// 12 significant digits, no negative zero.
double rounded(double x);
std::string real(double x);
json reals(const std::vector<double>& xs);

std::vector<int> parse_int_list(const std::string& text, const char* what);

}  // namespace sgtool
