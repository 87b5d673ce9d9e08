#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sgraph/graph.hpp"

namespace sgraph {

// `sg 1` text format:
//
//   sg 1
//   n <order>
//   edge <id> <u> <v> <+|->    link if u != v, loop if u == v
//   half <id> <v>
//   loose <id>
//
// Vertices are 1-based on disk, `#` starts a comment, fields are separated
// by whitespace. Unknown directives are errors.

SignedGraph parse(std::string_view text);
std::string serialize(const SignedGraph& g);

SignedGraph read_graph_file(const std::filesystem::path& path);

}  // namespace sgraph
