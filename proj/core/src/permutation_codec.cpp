#include "euler_adic/permutation_codec.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace euler_adic {

Permutation::Permutation(std::vector<unsigned> entries) : entries_(std::move(entries)) {
  std::vector<unsigned> sorted = entries_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("permutation has repeated entries");
  if (!sorted.empty() && sorted.front() == 0)
    throw std::invalid_argument("permutation entries start at 1");
}

Permutation Permutation::identity(unsigned m) {
  std::vector<unsigned> e(m);
  for (unsigned i = 0; i < m; ++i) e[i] = i + 1;
  return Permutation(std::move(e));
}

bool Permutation::is_standard() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [&](unsigned x) { return x >= 1 && x <= entries_.size(); });
}

unsigned Permutation::rises() const { return euler_adic::rises(entries_); }
unsigned Permutation::falls() const { return euler_adic::falls(entries_); }

std::string format_permutation(const Permutation& p) {
  const bool digits = std::all_of(p.entries().begin(), p.entries().end(),
                                  [](unsigned x) { return x <= 9; });
  std::string out;
  for (unsigned x : p.entries()) {
    if (!digits && !out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<unsigned> entries;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw std::invalid_argument("bad permutation digit");
      entries.push_back(static_cast<unsigned>(ch - '0'));
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view token = text.substr(pos, comma - pos);
      unsigned value = 0;
      auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || end != token.data() + token.size())
        throw std::invalid_argument("bad permutation entry '" + std::string(token) + "'");
      entries.push_back(value);
      pos = comma + 1;
    }
  }
  if (entries.empty()) throw std::invalid_argument("empty permutation");
  return Permutation(std::move(entries));
}

namespace {

// A gap g in 0..size() is rise-adding iff it sits at the back or inside a
// fall; every other gap is fall-adding.
bool rise_adding(const std::vector<unsigned>& w, std::size_t gap) {
  if (gap == w.size()) return true;
  if (gap == 0) return false;
  return w[gap - 1] > w[gap];
}

std::size_t nth_gap(const std::vector<unsigned>& w, Turn turn, unsigned index) {
  const bool want_rise = turn == Turn::Right;
  unsigned seen = 0;
  for (std::size_t gap = 0; gap <= w.size(); ++gap) {
    if (rise_adding(w, gap) == want_rise && ++seen == index) return gap;
  }
  throw std::logic_error("insertion gap index out of range");
}

}  // namespace

Permutation path_to_perm(const Cylinder& f) {
  if (f.orientation() != Orientation::Standard)
    throw std::invalid_argument("the permutation codec is defined on the standard Euler graph");
  std::vector<unsigned> w{1};
  for (const Edge& e : f.edges()) {
    const std::size_t gap = nth_gap(w, e.turn, e.index);
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(gap), static_cast<unsigned>(w.size() + 1));
  }
  return Permutation(std::move(w));
}

Cylinder perm_to_path(const Permutation& p) {
  if (p.empty() || !p.is_standard())
    throw std::invalid_argument("perm_to_path needs a permutation of {1,...,m}");
  std::vector<unsigned> w(p.entries().begin(), p.entries().end());
  std::vector<std::pair<Turn, unsigned>> steps;
  while (w.size() > 1) {
    const auto top = std::find(w.begin(), w.end(), static_cast<unsigned>(w.size()));
    const auto gap = static_cast<std::size_t>(top - w.begin());
    w.erase(top);
    const bool rise = rise_adding(w, gap);
    unsigned index = 0;
    for (std::size_t g = 0; g <= gap; ++g) index += rise_adding(w, g) == rise;
    steps.emplace_back(rise ? Turn::Right : Turn::Left, index);
  }
  std::reverse(steps.begin(), steps.end());
  return Cylinder::from_steps(steps);
}

Permutation project(const Permutation& p) {
  if (p.size() < 2 || !p.is_standard())
    throw std::invalid_argument("project needs a permutation of {1,...,m}, m >= 2");
  std::vector<unsigned> w;
  w.reserve(p.size() - 1);
  for (unsigned x : p.entries())
    if (x != p.size()) w.push_back(x);
  return Permutation(std::move(w));
}

unsigned OrderedPartition::rises() const {
  unsigned total = 0;
  for (const auto& c : clusters) total += c.rises();
  return total;
}

ClusterDecomposition clusters(const Permutation& sigma, unsigned small_max) {
  if (!sigma.is_standard()) throw std::invalid_argument("clusters needs a permutation of {1,...,n+1}");
  if (small_max == 0) throw std::invalid_argument("clusters needs at least one small symbol");
  if (small_max >= sigma.size())
    throw std::invalid_argument("clusters needs a non-empty remainder of large symbols");

  ClusterDecomposition d;
  std::vector<unsigned> rest;
  std::vector<unsigned> run;
  auto close_run = [&] {
    if (run.empty()) return;
    d.partition.clusters.emplace_back(std::move(run));
    d.gaps.push_back(static_cast<unsigned>(rest.size()));
    run.clear();
  };
  for (unsigned x : sigma.entries()) {
    if (x <= small_max) {
      run.push_back(x);
    } else {
      close_run();
      rest.push_back(x);
    }
  }
  close_run();
  d.remainder = Permutation(std::move(rest));
  return d;
}

Permutation reassemble(const ClusterDecomposition& d) {
  std::vector<unsigned> out;
  std::size_t next_cluster = 0;
  auto flush = [&](std::size_t gap) {
    while (next_cluster < d.gaps.size() && d.gaps[next_cluster] == gap) {
      const auto& c = d.partition.clusters[next_cluster++].entries();
      out.insert(out.end(), c.begin(), c.end());
    }
  };
  for (std::size_t i = 0; i < d.remainder.size(); ++i) {
    flush(i);
    out.push_back(d.remainder[i]);
  }
  flush(d.remainder.size());
  return Permutation(std::move(out));
}

namespace {

void compose(const Permutation& pattern, unsigned parts, std::size_t start,
             std::vector<std::size_t>& cuts, std::vector<OrderedPartition>& out) {
  const std::size_t len = pattern.size();
  if (cuts.size() + 1 == parts) {
    OrderedPartition m;
    std::size_t from = 0;
    for (std::size_t i = 0; i <= cuts.size(); ++i) {
      const std::size_t to = i < cuts.size() ? cuts[i] : len;
      m.clusters.emplace_back(std::vector<unsigned>(pattern.entries().begin() + from,
                                                    pattern.entries().begin() + to));
      from = to;
    }
    out.push_back(std::move(m));
    return;
  }
  const std::size_t remaining = parts - 1 - cuts.size();
  // cut positions lie in 1..len-1; leave room for the remaining cuts
  for (std::size_t cut = start; cut + remaining <= len; ++cut) {
    cuts.push_back(cut);
    compose(pattern, parts, cut + 1, cuts, out);
    cuts.pop_back();
  }
}

}  // namespace

std::vector<OrderedPartition> ordered_partitions(const Permutation& pattern, unsigned parts) {
  std::vector<OrderedPartition> out;
  if (parts == 0 || parts > pattern.size()) return out;
  std::vector<std::size_t> cuts;
  compose(pattern, parts, 1, cuts, out);
  return out;
}

}  // namespace euler_adic
