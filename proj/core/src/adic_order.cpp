#include "euler_adic/adic_order.hpp"

#include <algorithm>

namespace euler_adic {

namespace {

void require_comparable(const Cylinder& x, const Cylinder& y) {
  if (x.orientation() != y.orientation() || x.length() != y.length() ||
      x.terminal() != y.terminal())
    throw IncomparablePaths("paths end at different vertices and are not comparable");
}

// Extremal path into v, built by walking down from v to the root.
Cylinder extremal_path_into(Vertex v, Orientation orientation, bool maximal) {
  std::vector<Edge> reversed;
  while (v.level > 0) {
    const unsigned rank = maximal ? incoming_count(v, orientation) - 1 : 0;
    const Edge e = incoming_edge_at(v, rank, orientation);
    reversed.push_back(e);
    v = e.source;
  }
  Cylinder path(orientation);
  for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) path.push_back(it->turn, it->index);
  return path;
}

// Shared body of successor/predecessor: step = +1 or -1 in incoming rank.
std::optional<Cylinder> adjacent(const Cylinder& x, int step) {
  const Orientation o = x.orientation();
  for (std::size_t level = 0; level < x.length(); ++level) {
    const Edge& e = x[level];
    const Vertex target = e.target();
    const unsigned rank = incoming_rank(e, o);
    const bool can_move = step > 0 ? rank + 1 < incoming_count(target, o) : rank > 0;
    if (!can_move) continue;

    const Edge moved = incoming_edge_at(target, step > 0 ? rank + 1 : rank - 1, o);
    Cylinder out = extremal_path_into(moved.source, o, /*maximal=*/step < 0);
    out.push_back(moved.turn, moved.index);
    for (std::size_t j = level + 1; j < x.length(); ++j) out.push_back(x[j].turn, x[j].index);
    return out;
  }
  return std::nullopt;
}

bool all_edges_extremal(const Cylinder& x, bool maximal) {
  return std::all_of(x.edges().begin(), x.edges().end(), [&](const Edge& e) {
    const unsigned rank = incoming_rank(e, x.orientation());
    return maximal ? rank + 1 == incoming_count(e.target(), x.orientation()) : rank == 0;
  });
}

}  // namespace

std::strong_ordering compare(const Cylinder& x, const Cylinder& y) {
  require_comparable(x, y);
  for (std::size_t level = x.length(); level-- > 0;) {
    if (x[level] == y[level]) continue;
    return incoming_rank(x[level], x.orientation()) <=> incoming_rank(y[level], y.orientation());
  }
  return std::strong_ordering::equal;
}

std::optional<Cylinder> successor(const Cylinder& x) { return adjacent(x, +1); }
std::optional<Cylinder> predecessor(const Cylinder& x) { return adjacent(x, -1); }

Cylinder minimal_path_into(Vertex v, Orientation orientation) {
  return extremal_path_into(v, orientation, false);
}

Cylinder maximal_path_into(Vertex v, Orientation orientation) {
  return extremal_path_into(v, orientation, true);
}

bool is_minimal(const Cylinder& x) { return all_edges_extremal(x, false); }
bool is_maximal(const Cylinder& x) { return all_edges_extremal(x, true); }

Cylinder x_max(unsigned k, unsigned depth) {
  if (depth < k) throw std::invalid_argument("x_max(k) truncation needs depth >= k");
  Cylinder path;
  for (unsigned n = 0; n < k; ++n) path.push_back(Turn::Right, 1);
  for (unsigned n = k; n < depth; ++n)
    path.push_back(Turn::Left, bundle_size(path.terminal(), Turn::Left));
  return path;
}

Cylinder x_min(unsigned k, unsigned depth) {
  if (depth < k) throw std::invalid_argument("x_min(k) truncation needs depth >= k");
  Cylinder path;
  for (unsigned n = 0; n < k; ++n) path.push_back(Turn::Left, 1);
  for (unsigned n = k; n < depth; ++n) path.push_back(Turn::Right, 1);
  return path;
}

}  // namespace euler_adic
