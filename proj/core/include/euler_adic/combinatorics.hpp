#pragma once

// Eulerian numbers, binomials, factorials and rise/fall statistics.
//
// All counts are arbitrary precision (GMP). The Eulerian triangle is kept in a
// process-wide table that grows on demand and is then read-only; every module
// that needs A(n,k) goes through `eulerian()` or an `EulerianTable`.

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace euler_adic {

using BigNat = mpz_class;
using BigRational = mpq_class;

/// Triangular table of Eulerian numbers A(n,k), 0 <= k <= n <= max_level.
///
/// Built bottom-up from A(0,0) = 1 with
///   A(n,k) = (n-k+1) A(n-1,k-1) + (k+1) A(n-1,k).
class EulerianTable {
 public:
  explicit EulerianTable(unsigned max_level);

  unsigned max_level() const { return static_cast<unsigned>(rows_.size()) - 1; }

  /// A(n,k), zero outside 0 <= k <= n. Requires n <= max_level().
  const BigNat& at(unsigned n, std::int64_t k) const;

  std::span<const BigNat> row(unsigned n) const { return rows_.at(n); }

 private:
  std::vector<std::vector<BigNat>> rows_;
};

/// A(n,k) from the shared table; 0 when k < 0 or k > n.
BigNat eulerian(unsigned n, std::int64_t k);

/// Shared read-only table covering at least `max_level`.
const EulerianTable& shared_eulerian_table(unsigned max_level);

/// C(n,m); 0 when m < 0 or m > n.
BigNat binomial(std::uint64_t n, std::int64_t m);

/// C(n,m) with a signed top; 0 whenever n < 0. Used where formula arguments
/// can run negative.
BigNat binomial_signed(std::int64_t n, std::int64_t m);

BigNat factorial(std::uint64_t n);

/// Number of ascents w[j] < w[j+1]. Throws std::invalid_argument on an empty
/// sequence or repeated entries.
unsigned rises(std::span<const unsigned> w);

/// Number of descents w[j] > w[j+1]. Same preconditions as rises().
unsigned falls(std::span<const unsigned> w);

}  // namespace euler_adic
