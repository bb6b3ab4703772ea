#pragma once

// Counting root paths through a cylinder F that reach a vertex (n,k).
//
// dim(F,(n,k)) counts permutations sigma of {1,...,n+1} with k rises whose
// small symbols {1,...,n0+1} appear in the order pi(F). Deleting the small
// symbols leaves rho, a permutation of the n-n0 large symbols with r rises;
// the small symbols sit in rho's gaps as an ordered partition M of pi(F)
// into |M| = m clusters. Placing a cluster at the front of rho or inside a
// fall adds one rise on top of the cluster's own; placing it inside a rise
// or at the back does not. With j = k - r - r(M) clusters in the n-n0-r
// rise-adding gaps and m-j in the r+1 others,
//
//   dim(F,(n,k)) = sum_r beta(F,r) A(n-n0-1, r),
//   beta(F,r)    = sum_m alpha(F,r,m),
//   alpha(F,r,m) = sum_{M in P_m(F)} C(n-n0-r, j) C(r+1, m-j).
//
// The term m = n0+1 (all singletons) does not depend on pi(F), which is what
// drives dim(F,(n,k)) / dim(F',(n,k)) towards 1 on the diagonal.

#include <cstdint>
#include <optional>
#include <vector>

#include "euler_adic/permutation_codec.hpp"

namespace euler_adic {

enum class FormulaVariant {
  SlotCorrected,  // binomials over the actual rise-adding / other gap counts
  Literal,        // C(n-n0-(k-k0)+1, j) C(k-k0+1, m-j), kept for comparison
};

/// A cylinder F of length n0 >= 1 (standard orientation) and a target vertex
/// (n,k) with n >= n0.
class DimQuery {
 public:
  /// Throws std::invalid_argument on an empty or reverse-orientation
  /// cylinder, or a target level below the cylinder's length.
  DimQuery(Cylinder cylinder, Vertex target);

  const Cylinder& cylinder() const { return cylinder_; }
  Vertex target() const { return target_; }
  const Permutation& pattern() const { return pattern_; }
  unsigned n0() const { return static_cast<unsigned>(cylinder_.length()); }
  unsigned k0() const { return cylinder_.right_turns(); }

 private:
  Cylinder cylinder_;
  Vertex target_;
  Permutation pattern_;
};

/// Ways to drop the clusters of `m` into a rho with r rises so that the
/// result has exactly k rises.
BigNat placement_count(const OrderedPartition& m, unsigned r, const DimQuery& q,
                       FormulaVariant variant = FormulaVariant::SlotCorrected);

BigNat alpha(const DimQuery& q, unsigned r, unsigned parts,
             FormulaVariant variant = FormulaVariant::SlotCorrected);

BigNat beta(const DimQuery& q, unsigned r, FormulaVariant variant = FormulaVariant::SlotCorrected);

/// The regrouped cluster sum over r.
BigNat dim_formula(const DimQuery& q, FormulaVariant variant = FormulaVariant::SlotCorrected);

/// Paths from the cylinder's terminal vertex to the target (graph DP).
BigNat dim_graph_oracle(const DimQuery& q);

/// Counts of permutations of {1,...,n+1} by number of rises and by the
/// relative order of the symbols 1..pattern_length, from one exhaustive pass.
class PatternRiseCensus {
 public:
  static constexpr unsigned kMaxLevel = 11;
  static constexpr unsigned kMaxPatternLength = 5;

  /// Throws std::invalid_argument when n > kMaxLevel or the pattern length
  /// exceeds kMaxPatternLength or n+1.
  PatternRiseCensus(unsigned n, unsigned pattern_length);

  unsigned level() const { return n_; }
  unsigned pattern_length() const { return pattern_length_; }

  /// Permutations with k rises whose symbols 1..|pattern| appear in the
  /// order `pattern`. Any pattern length up to pattern_length() is allowed.
  std::uint64_t count(const Permutation& pattern, unsigned k) const;

 private:
  unsigned n_;
  unsigned pattern_length_;
  std::vector<std::uint64_t> counts_;  // [code][k]
};

/// Exhaustive permutation count; throws std::invalid_argument when the
/// target level exceeds PatternRiseCensus::kMaxLevel.
BigNat dim_permutation_oracle(const DimQuery& q);

struct OracleReport {
  std::optional<BigNat> permutation;  // absent above the enumeration guard
  BigNat graph;

  bool consistent() const { return !permutation || *permutation == graph; }
};

OracleReport dim_bruteforce(const DimQuery& q);

struct RatioRow {
  unsigned n = 0;
  unsigned k = 0;
  BigNat dim_a;
  BigNat dim_b;
  std::optional<BigRational> ratio;          // absent when dim_b == 0
  std::optional<BigRational> abs_deviation;  // |ratio - 1|
};

/// (n, floor(n/2)) for each n.
std::vector<Vertex> diagonal_schedule(const std::vector<unsigned>& levels);

/// Exact ratios dim(a,(n,k)) / dim(b,(n,k)) along `schedule`. Rows are
/// computed concurrently and returned in schedule order. Schedule points
/// below the cylinders' length throw std::invalid_argument.
std::vector<RatioRow> ratio_table(const Cylinder& a, const Cylinder& b,
                                  const std::vector<Vertex>& schedule,
                                  FormulaVariant variant = FormulaVariant::SlotCorrected);

}  // namespace euler_adic
