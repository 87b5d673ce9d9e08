#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sgraph/edge_set.hpp"

namespace sgraph {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed `sg 1` input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An enumeration-based operation was asked to exceed its size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments does not hold (unknown edge, bad vertex, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

using VertexId = int;

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
constexpr Sign operator-(Sign a) noexcept { return a * Sign::Minus; }
constexpr Sign& operator*=(Sign& a, Sign b) noexcept { return a = a * b; }
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr char to_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

enum class EdgeKind : std::uint8_t { Link, Loop, Half, Loose };

std::string_view to_string(EdgeKind kind) noexcept;

/// One edge. `u`/`v` are 0-based; unused endpoints hold -1. Only links and
/// loops carry a meaningful sign.
struct Edge {
  std::string id;
  EdgeKind kind = EdgeKind::Link;
  VertexId u = -1;
  VertexId v = -1;
  Sign sign = Sign::Plus;

  static Edge link(std::string id, VertexId u, VertexId v, Sign s);
  static Edge loop(std::string id, VertexId u, Sign s);
  static Edge half(std::string id, VertexId u);
  static Edge loose(std::string id);

  bool is_ordinary() const noexcept { return kind == EdgeKind::Link || kind == EdgeKind::Loop; }
  /// Half edges and negative loops.
  bool is_unbalanced() const noexcept {
    return kind == EdgeKind::Half || (kind == EdgeKind::Loop && sign == Sign::Minus);
  }
  /// The other end of a link, or `w` itself for a loop.
  VertexId other(VertexId w) const noexcept { return w == u ? v : u; }
  bool touches(VertexId w) const noexcept { return w >= 0 && (u == w || v == w); }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A graph with links, loops, half edges and loose edges; links and loops
/// are signed. Immutable once built.
class SignedGraph {
 public:
  SignedGraph() = default;
  SignedGraph(int order, std::vector<Edge> edges);

  int order() const noexcept { return order_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int index) const { return edges_.at(static_cast<std::size_t>(index)); }

  /// Edge indices with at least one end at `v`, ascending. A loop appears once.
  const std::vector<int>& incident(VertexId v) const { return incidence_.at(static_cast<std::size_t>(v)); }

  std::optional<int> find_edge(std::string_view id) const;
  /// Like find_edge but throws InvalidArgument naming the id.
  int edge_index(std::string_view id) const;

  EdgeSet all_edges() const { return EdgeSet::full(size()); }
  EdgeSet no_edges() const { return EdgeSet(size()); }
  EdgeSet edges_of_kind(EdgeKind kind) const;
  /// Parses a comma-separated id list into an EdgeSet.
  EdgeSet edge_set(std::string_view comma_ids) const;
  std::vector<std::string> ids(const EdgeSet& s) const;

  void check_vertex(VertexId v) const;

  /// Same underlying graph, signs taken from `signs` (indexed by edge).
  SignedGraph with_signs(const std::vector<Sign>& signs) const;
  /// Every ordinary edge negated.
  SignedGraph negated() const;
  bool has_kind(EdgeKind kind) const;
  bool is_link_graph() const;
  bool same_underlying(const SignedGraph& other) const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

/// Incremental construction with automatic edge ids (`e1`, `e2`, ... unless given).
class GraphBuilder {
 public:
  explicit GraphBuilder(int order) : order_(order) {}

  GraphBuilder& link(VertexId u, VertexId v, Sign s, std::string id = {});
  GraphBuilder& loop(VertexId u, Sign s, std::string id = {});
  GraphBuilder& half(VertexId u, std::string id = {});
  GraphBuilder& loose(std::string id = {});
  GraphBuilder& add(Edge e);

  int order() const noexcept { return order_; }
  SignedGraph build() const { return SignedGraph(order_, edges_); }

 private:
  std::string next_id(std::string id);

  int order_;
  std::vector<Edge> edges_;
};

}  // namespace sgraph
