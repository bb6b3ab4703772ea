#include "euler_adic/euler_graph.hpp"

#include <charconv>
#include <sstream>

namespace euler_adic {

Vertex make_vertex(unsigned level, unsigned column) {
  if (column > level)
    throw std::invalid_argument("vertex (" + std::to_string(level) + "," + std::to_string(column) +
                                ") has column beyond level");
  return {level, column};
}

unsigned bundle_size(Vertex v, Turn turn, Orientation orientation) {
  const unsigned stay = v.column + 1;            // (n,k) -> (n+1,k), standard
  const unsigned climb = v.level - v.column + 1;  // (n,k) -> (n+1,k+1), standard
  const bool left = turn == Turn::Left;
  if (orientation == Orientation::Standard) return left ? stay : climb;
  return left ? climb : stay;
}

unsigned incoming_rank(const Edge& e, Orientation orientation) {
  if (e.turn == Turn::Right) return e.index - 1;
  const Vertex t = e.target();
  if (t.column == 0) return e.index - 1;
  return bundle_size({e.source.level, t.column - 1}, Turn::Right, orientation) + e.index - 1;
}

unsigned incoming_count(Vertex v, Orientation orientation) {
  if (v.level == 0) return 0;
  unsigned total = 0;
  if (v.column >= 1) total += bundle_size({v.level - 1, v.column - 1}, Turn::Right, orientation);
  if (v.column + 1 <= v.level) total += bundle_size({v.level - 1, v.column}, Turn::Left, orientation);
  return total;
}

std::vector<Edge> outgoing_edges(Vertex v, Orientation orientation) {
  std::vector<Edge> out;
  out.reserve(v.level + 2);
  for (Turn turn : {Turn::Left, Turn::Right})
    for (unsigned i = 1; i <= bundle_size(v, turn, orientation); ++i) out.push_back({v, turn, i});
  return out;
}

std::vector<Edge> incoming_edges(Vertex v, Orientation orientation) {
  if (v.level == 0) throw std::invalid_argument("the root has no incoming edges");
  std::vector<Edge> in;
  if (v.column >= 1) {
    const Vertex parent{v.level - 1, v.column - 1};
    for (unsigned i = 1; i <= bundle_size(parent, Turn::Right, orientation); ++i)
      in.push_back({parent, Turn::Right, i});
  }
  if (v.column + 1 <= v.level) {
    const Vertex parent{v.level - 1, v.column};
    for (unsigned i = 1; i <= bundle_size(parent, Turn::Left, orientation); ++i)
      in.push_back({parent, Turn::Left, i});
  }
  return in;
}

Edge incoming_edge_at(Vertex v, unsigned rank, Orientation orientation) {
  if (v.level == 0) throw std::invalid_argument("the root has no incoming edges");
  unsigned right = 0;
  if (v.column >= 1) {
    const Vertex parent{v.level - 1, v.column - 1};
    right = bundle_size(parent, Turn::Right, orientation);
    if (rank < right) return {parent, Turn::Right, rank + 1};
  }
  if (v.column + 1 <= v.level) {
    const Vertex parent{v.level - 1, v.column};
    if (rank - right < bundle_size(parent, Turn::Left, orientation))
      return {parent, Turn::Left, rank - right + 1};
  }
  throw std::out_of_range("incoming edge rank out of range");
}

Cylinder Cylinder::from_steps(const std::vector<std::pair<Turn, unsigned>>& steps,
                              Orientation orientation) {
  Cylinder c(orientation);
  for (auto [turn, index] : steps) c.push_back(turn, index);
  return c;
}

void Cylinder::push_back(Turn turn, unsigned index) {
  const Vertex v = terminal();
  const unsigned size = bundle_size(v, turn, orientation_);
  if (index < 1 || index > size) {
    std::ostringstream msg;
    msg << "edge " << (turn == Turn::Left ? 'L' : 'R') << index << " out of range at vertex ("
        << v.level << "," << v.column << "): bundle has " << size << " edges";
    throw std::invalid_argument(msg.str());
  }
  edges_.push_back({v, turn, index});
}

void Cylinder::pop_back() {
  if (edges_.empty()) throw std::logic_error("pop_back on the empty cylinder");
  edges_.pop_back();
}

void Cylinder::truncate(std::size_t length) {
  if (length < edges_.size()) edges_.resize(length);
}

std::string format_cylinder(const Cylinder& c) {
  std::string out;
  for (const Edge& e : c.edges()) {
    if (!out.empty()) out += ',';
    out += e.turn == Turn::Left ? 'L' : 'R';
    out += std::to_string(e.index);
  }
  return out;
}

Cylinder parse_cylinder(std::string_view text, Orientation orientation) {
  Cylinder c(orientation);
  if (text.empty() || text == "-") return c;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.size() < 2 || (token[0] != 'L' && token[0] != 'R'))
      throw std::invalid_argument("bad cylinder token '" + std::string(token) + "'");
    unsigned index = 0;
    auto [end, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), index);
    if (ec != std::errc{} || end != token.data() + token.size())
      throw std::invalid_argument("bad parallel index in token '" + std::string(token) + "'");
    c.push_back(token[0] == 'L' ? Turn::Left : Turn::Right, index);
    pos = comma + 1;
  }
  return c;
}

std::vector<BigNat> path_counts_to_level(Vertex from, unsigned to_level, Orientation orientation) {
  if (to_level < from.level) return std::vector<BigNat>(to_level + 1);
  // counts[c] = paths from `from` to (level, c)
  std::vector<BigNat> counts(from.level + 1);
  counts[from.column] = 1;
  for (unsigned n = from.level; n < to_level; ++n) {
    std::vector<BigNat> next(n + 2);
    for (unsigned k = 0; k <= n; ++k) {
      if (counts[k] == 0) continue;
      next[k] += bundle_size({n, k}, Turn::Left, orientation) * counts[k];
      next[k + 1] += bundle_size({n, k}, Turn::Right, orientation) * counts[k];
    }
    counts = std::move(next);
  }
  return counts;
}

BigNat count_paths_between(Vertex from, Vertex to, Orientation orientation) {
  if (to.level < from.level) return 0;
  if (to.column < from.column || to.column - from.column > to.level - from.level) return 0;
  return path_counts_to_level(from, to.level, orientation)[to.column];
}

BigNat dim_vertex(Vertex v, Orientation orientation) {
  return count_paths_between({0, 0}, v, orientation);
}

namespace {

std::string vertex_message(Vertex v, const BigNat& count) {
  return "enumeration into (" + std::to_string(v.level) + "," + std::to_string(v.column) +
         ") refused: " + count.get_str() + " paths exceed the limit";
}

void paths_into(Vertex v, Orientation orientation, std::vector<Cylinder>& out) {
  if (v.level == 0) {
    out.emplace_back(orientation);
    return;
  }
  std::optional<Vertex> source;
  std::vector<Cylinder> prefixes;
  for (const Edge& e : incoming_edges(v, orientation)) {
    if (source != e.source) {
      source = e.source;
      prefixes.clear();
      paths_into(e.source, orientation, prefixes);
    }
    for (const Cylinder& p : prefixes) {
      out.push_back(p);
      out.back().push_back(e.turn, e.index);
    }
  }
}

void extend_all(Cylinder& prefix, unsigned length, std::vector<Cylinder>& out) {
  if (prefix.length() == length) {
    out.push_back(prefix);
    return;
  }
  for (const Edge& e : outgoing_edges(prefix.terminal(), prefix.orientation())) {
    prefix.push_back(e.turn, e.index);
    extend_all(prefix, length, out);
    prefix.pop_back();
  }
}

}  // namespace

EnumerationLimitExceeded::EnumerationLimitExceeded(Vertex v, BigNat count)
    : std::runtime_error(vertex_message(v, count)), vertex_(v), count_(std::move(count)) {}

std::vector<Cylinder> enumerate_paths_to(Vertex v, std::uint64_t limit, Orientation orientation) {
  const BigNat count = dim_vertex(v, orientation);
  if (count > BigNat(std::to_string(limit))) throw EnumerationLimitExceeded(v, count);
  std::vector<Cylinder> out;
  out.reserve(count.get_ui());
  paths_into(v, orientation, out);
  return out;
}

std::vector<Cylinder> enumerate_cylinders(unsigned length, std::uint64_t limit,
                                          Orientation orientation) {
  const BigNat count = factorial(length + 1);
  if (count > BigNat(std::to_string(limit)))
    throw EnumerationLimitExceeded({length, 0}, count);
  std::vector<Cylinder> out;
  out.reserve(count.get_ui());
  Cylinder prefix(orientation);
  extend_all(prefix, length, out);
  return out;
}

}  // namespace euler_adic
