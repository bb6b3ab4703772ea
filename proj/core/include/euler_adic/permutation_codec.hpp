#pragma once

// Correspondence between root paths of length n and permutations of
// {1,...,n+1}, plus the cluster decomposition used to count paths through a
// cylinder.
//
// Extending a path by one edge inserts the new maximum n+2 into the current
// permutation. The m+1 insertion gaps of a length-m permutation split into
// fall-adding gaps (the front and every rise) and rise-adding gaps (every fall
// and the back). Left-turn edge i picks the i-th fall-adding gap from the
// left; right-turn edge i picks the i-th rise-adding gap.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "euler_adic/euler_graph.hpp"

namespace euler_adic {

/// A sequence of pairwise distinct positive integers.
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument on repeated entries or a zero entry.
  explicit Permutation(std::vector<unsigned> entries);

  /// The identity 1 2 ... m.
  static Permutation identity(unsigned m);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const unsigned> entries() const { return entries_; }
  unsigned operator[](std::size_t i) const { return entries_[i]; }

  /// True when the entries are exactly {1,...,size()}.
  bool is_standard() const;

  unsigned rises() const;
  unsigned falls() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<unsigned> entries_;
};

/// Digits when every entry is a single digit (m <= 9), comma-separated
/// otherwise.
std::string format_permutation(const Permutation& p);
Permutation parse_permutation(std::string_view text);

/// Standard orientation only. The empty cylinder maps to the permutation 1.
Permutation path_to_perm(const Cylinder& f);

/// Inverse of path_to_perm. Requires a permutation of {1,...,m}, m >= 1.
Cylinder perm_to_path(const Permutation& p);

/// Deletes the largest symbol m from a permutation of {1,...,m}, m >= 2.
Permutation project(const Permutation& p);

/// Composition of a pattern into consecutive non-empty blocks.
struct OrderedPartition {
  std::vector<Permutation> clusters;

  std::size_t size() const { return clusters.size(); }
  /// Sum of the rises inside each cluster.
  unsigned rises() const;
};

struct ClusterDecomposition {
  OrderedPartition partition;  // maximal runs of small symbols, left to right
  Permutation remainder;       // sigma with the small symbols deleted
  std::vector<unsigned> gaps;  // gap of `remainder` (0..|remainder|) holding each cluster
};

/// Splits sigma (a permutation of {1,...,n+1}) around its small symbols
/// {1,...,small_max}. Throws std::invalid_argument when sigma is not
/// standard, when small_max >= |sigma| (the remainder would be empty), or
/// when small_max == 0.
ClusterDecomposition clusters(const Permutation& sigma, unsigned small_max);

/// Inverse of clusters(): reinserts each cluster at its recorded gap.
Permutation reassemble(const ClusterDecomposition& d);

/// All compositions of `pattern` into `parts` consecutive blocks, ordered by
/// their cut positions. Empty when parts is 0 or exceeds |pattern|.
std::vector<OrderedPartition> ordered_partitions(const Permutation& pattern, unsigned parts);

}  // namespace euler_adic
