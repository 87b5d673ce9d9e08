#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "format.hpp"

namespace CLI {
class App;
}

namespace sgtool {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A domain precondition such as "graph must be balanced" failed.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  int threads = 1;
  std::optional<int> max_edges;
  std::optional<int> max_order;

  std::string file;
  std::string other_file;
  std::string edges;
  std::string vertices;
  std::string set;
  std::string which;
  std::string algorithm = "delcon";
  std::string family;
  std::string name;
  std::string multiplicities;
  std::string coloring;
  std::string kinds = "all";
  int n = -1;
  int k = -1;
  int order = 5;
  int size = 8;
  double nu = 2.0;
  unsigned long long seed = 1;
  std::string stable;
  bool zero_free = false;
  bool reduced = false;
  bool oracle = false;
  bool hyperplanes = false;
  bool numbers = false;
  bool balance = false;
  bool circuits = false;
  bool lattice = false;
  bool anti = false;
  bool identity = false;
  bool harary_norman = false;
  bool to_positive = false;
  bool bipartition = false;
  bool forest = false;
  bool normalize = false;
  bool edge_vectors = false;
  bool print_graph = false;
  bool list = false;
};

struct Context {
  const Options& opt;
  sgraph::Limits limits;
};

struct Report {
  json result = json::object();
  std::string text;
  std::optional<sgraph::SignedGraph> graph;  // summarised in JSON output
};

struct Verb {
  std::string name;
  std::string help;
  std::function<void(CLI::App&, Options&)> setup;
  std::function<Report(const Context&)> run;
};

const std::vector<Verb>& verb_table();

}  // namespace sgtool
