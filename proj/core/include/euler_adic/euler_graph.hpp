#pragma once

// The Euler Bratteli diagram and its reverse.
//
// Vertex (n,k), 0 <= k <= n. In the standard orientation (n,k) is joined to
// (n+1,k) by k+1 parallel "left turn" edges and to (n+1,k+1) by n-k+1
// parallel "right turn" edges. The reverse orientation swaps the two bundle
// sizes. Either way every vertex at level n has n+2 outgoing edges.
//
// Edges terminating at a vertex are totally ordered: the right-turn bundle
// arriving from the upper-left parent (n-1,k-1) comes first, then the
// left-turn bundle from (n-1,k); inside a bundle, by parallel index.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "euler_adic/combinatorics.hpp"

namespace euler_adic {

enum class Turn : std::uint8_t { Left, Right };
enum class Orientation : std::uint8_t { Standard, Reverse };

struct Vertex {
  unsigned level = 0;
  unsigned column = 0;

  auto operator<=>(const Vertex&) const = default;
};

/// Throws std::invalid_argument unless column <= level.
Vertex make_vertex(unsigned level, unsigned column);

/// Number of parallel edges leaving `v` with the given turn.
unsigned bundle_size(Vertex v, Turn turn, Orientation orientation = Orientation::Standard);

struct Edge {
  Vertex source;
  Turn turn = Turn::Left;
  unsigned index = 1;  // 1-based position inside its bundle

  Vertex target() const {
    return {source.level + 1, source.column + (turn == Turn::Right ? 1u : 0u)};
  }

  auto operator<=>(const Edge&) const = default;
};

/// Position (0-based) of `e` among the edges terminating at e.target().
unsigned incoming_rank(const Edge& e, Orientation orientation = Orientation::Standard);

/// Number of edges terminating at `v` (0 for the root).
unsigned incoming_count(Vertex v, Orientation orientation = Orientation::Standard);

/// Left bundle then right bundle, each in parallel-index order.
std::vector<Edge> outgoing_edges(Vertex v, Orientation orientation = Orientation::Standard);

/// Edges into `v` in the total incoming order. Requires v.level >= 1.
std::vector<Edge> incoming_edges(Vertex v, Orientation orientation = Orientation::Standard);

/// Inverse of incoming_rank.
Edge incoming_edge_at(Vertex v, unsigned rank, Orientation orientation = Orientation::Standard);

/// A finite path from the root (0,0): the cylinder set it determines.
class Cylinder {
 public:
  explicit Cylinder(Orientation orientation = Orientation::Standard) : orientation_(orientation) {}

  /// Builds from (turn, index) steps, validating every parallel index.
  static Cylinder from_steps(const std::vector<std::pair<Turn, unsigned>>& steps,
                             Orientation orientation = Orientation::Standard);

  /// Appends the next edge out of terminal(); throws std::invalid_argument on
  /// an out-of-range parallel index.
  void push_back(Turn turn, unsigned index);
  void pop_back();

  /// Keeps the first `length` edges.
  void truncate(std::size_t length);

  std::size_t length() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& operator[](std::size_t i) const { return edges_[i]; }
  Orientation orientation() const { return orientation_; }

  Vertex terminal() const { return edges_.empty() ? Vertex{} : edges_.back().target(); }
  unsigned right_turns() const { return terminal().column; }

  bool operator==(const Cylinder&) const = default;

 private:
  Orientation orientation_;
  std::vector<Edge> edges_;
};

/// "L1,R1,R1" style text: one token per edge, turn letter then parallel
/// index. The empty cylinder is the empty string (the CLI also accepts "-").
std::string format_cylinder(const Cylinder& c);
Cylinder parse_cylinder(std::string_view text, Orientation orientation = Orientation::Standard);

/// Multiplicity-weighted path count from `from` to `to`; 0 if unreachable.
BigNat count_paths_between(Vertex from, Vertex to, Orientation orientation = Orientation::Standard);

/// Number of root paths into `v`, by dynamic programming over the graph.
BigNat dim_vertex(Vertex v, Orientation orientation = Orientation::Standard);

/// Path counts from `from` to every vertex of level `to_level`, indexed by
/// column. Entries outside the reachable cone are 0.
std::vector<BigNat> path_counts_to_level(Vertex from, unsigned to_level,
                                         Orientation orientation = Orientation::Standard);

class EnumerationLimitExceeded : public std::runtime_error {
 public:
  EnumerationLimitExceeded(Vertex v, BigNat count);
  const BigNat& count() const { return count_; }
  Vertex vertex() const { return vertex_; }

 private:
  Vertex vertex_;
  BigNat count_;
};

/// All root paths into `v`, in increasing adic order. Throws
/// EnumerationLimitExceeded (carrying dim_vertex(v)) when there are more
/// than `limit` of them.
std::vector<Cylinder> enumerate_paths_to(Vertex v, std::uint64_t limit,
                                         Orientation orientation = Orientation::Standard);

/// Every root path of the given length, all terminal columns, in
/// lexicographic edge order. Throws EnumerationLimitExceeded above `limit`.
std::vector<Cylinder> enumerate_cylinders(unsigned length, std::uint64_t limit,
                                          Orientation orientation = Orientation::Standard);

}  // namespace euler_adic
