#pragma once

// Vershik order and the adic successor on finite paths into a fixed vertex.
//
// Two paths into the same vertex compare by their highest-level edge where
// they differ, using the incoming-edge order of euler_graph.hpp.

#include <compare>
#include <optional>
#include <stdexcept>

#include "euler_adic/euler_graph.hpp"

namespace euler_adic {

class IncomparablePaths : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws IncomparablePaths unless both paths have the same orientation,
/// length and terminal vertex.
std::strong_ordering compare(const Cylinder& x, const Cylinder& y);

/// Next path into the same terminal vertex, or nullopt at the maximal path.
std::optional<Cylinder> successor(const Cylinder& x);

/// Previous path into the same terminal vertex, or nullopt at the minimal path.
std::optional<Cylinder> predecessor(const Cylinder& x);

Cylinder minimal_path_into(Vertex v, Orientation orientation = Orientation::Standard);
Cylinder maximal_path_into(Vertex v, Orientation orientation = Orientation::Standard);

/// Every edge of `x` is minimal (maximal) among the edges into its target.
bool is_minimal(const Cylinder& x);
bool is_maximal(const Cylinder& x);

/// Truncation to `depth` edges of the maximal infinite path that runs
/// straight to (k,k) and then keeps taking the last left-turn edge.
/// Requires depth >= k.
Cylinder x_max(unsigned k, unsigned depth);

/// Truncation to `depth` edges of the minimal infinite path that runs to
/// (k,0) and then keeps taking the first right-turn edge, so that level minus
/// column stays at k. Requires depth >= k.
Cylinder x_min(unsigned k, unsigned depth);

}  // namespace euler_adic
