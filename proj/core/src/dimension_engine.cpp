#include "euler_adic/dimension_engine.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <stdexcept>

namespace euler_adic {

DimQuery::DimQuery(Cylinder cylinder, Vertex target)
    : cylinder_(std::move(cylinder)), target_(make_vertex(target.level, target.column)) {
  if (cylinder_.empty()) throw std::invalid_argument("dimension queries need a cylinder of length >= 1");
  if (cylinder_.orientation() != Orientation::Standard)
    throw std::invalid_argument("dimension queries are defined on the standard Euler graph");
  if (target_.level < cylinder_.length())
    throw std::invalid_argument("target level is below the cylinder's terminal vertex");
  pattern_ = path_to_perm(cylinder_);
}

namespace {

using i64 = std::int64_t;

BigNat placement(unsigned parts, unsigned cluster_rises, unsigned r, const DimQuery& q,
                 FormulaVariant variant) {
  const i64 n = q.target().level, k = q.target().column;
  const i64 n0 = q.n0(), k0 = q.k0();
  const i64 m = parts;
  const i64 j = k - static_cast<i64>(r) - cluster_rises;
  if (variant == FormulaVariant::SlotCorrected) {
    const i64 rise_adding = n - n0 - r;  // front plus the falls of rho
    const i64 others = static_cast<i64>(r) + 1;  // the rises of rho plus the back
    return binomial_signed(rise_adding, j) * binomial_signed(others, m - j);
  }
  return binomial_signed(n - n0 - (k - k0) + 1, j) * binomial_signed(k - k0 + 1, m - j);
}

// Cluster-rise counts r(M) for every M in P_m(F), grouped by m.
std::vector<std::vector<unsigned>> partition_rises(const Permutation& pattern) {
  std::vector<std::vector<unsigned>> by_parts(pattern.size() + 1);
  for (unsigned m = 1; m <= pattern.size(); ++m)
    for (const auto& part : ordered_partitions(pattern, m)) by_parts[m].push_back(part.rises());
  return by_parts;
}

BigNat beta_from(const std::vector<std::vector<unsigned>>& by_parts, unsigned r, const DimQuery& q,
                 FormulaVariant variant) {
  BigNat total = 0;
  for (unsigned m = 1; m < by_parts.size(); ++m)
    for (unsigned rm : by_parts[m]) total += placement(m, rm, r, q, variant);
  return total;
}

}  // namespace

BigNat placement_count(const OrderedPartition& m, unsigned r, const DimQuery& q,
                       FormulaVariant variant) {
  return placement(static_cast<unsigned>(m.size()), m.rises(), r, q, variant);
}

BigNat alpha(const DimQuery& q, unsigned r, unsigned parts, FormulaVariant variant) {
  BigNat total = 0;
  for (const auto& m : ordered_partitions(q.pattern(), parts))
    total += placement_count(m, r, q, variant);
  return total;
}

BigNat beta(const DimQuery& q, unsigned r, FormulaVariant variant) {
  return beta_from(partition_rises(q.pattern()), r, q, variant);
}

BigNat dim_formula(const DimQuery& q, FormulaVariant variant) {
  const unsigned n = q.target().level, k = q.target().column;
  const unsigned n0 = q.n0();
  if (n == n0) return k == q.k0() ? 1 : 0;

  const unsigned large = n - n0;  // |rho|
  const unsigned r_lo = k > n0 + 1 ? k - (n0 + 1) : 0;
  const unsigned r_hi = std::min(k, large - 1);
  const auto by_parts = partition_rises(q.pattern());
  const EulerianTable& table = shared_eulerian_table(large - 1);

  BigNat total = 0;
  for (unsigned r = r_lo; r <= r_hi; ++r) {
    const BigNat& rhos = table.at(large - 1, r);
    if (rhos == 0) continue;
    total += beta_from(by_parts, r, q, variant) * rhos;
  }
  return total;
}

BigNat dim_graph_oracle(const DimQuery& q) {
  return count_paths_between(q.cylinder().terminal(), q.target());
}

namespace {

constexpr unsigned kCodeBase = 8;

unsigned pattern_code(std::span<const unsigned> pattern) {
  unsigned code = 0, weight = 1;
  for (unsigned v : pattern) {
    code += v * weight;
    weight *= kCodeBase;
  }
  return code;
}

unsigned power(unsigned base, unsigned exp) {
  unsigned out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

}  // namespace

PatternRiseCensus::PatternRiseCensus(unsigned n, unsigned pattern_length)
    : n_(n), pattern_length_(pattern_length) {
  if (n > kMaxLevel) throw std::invalid_argument("permutation census limited to level " +
                                                 std::to_string(kMaxLevel));
  if (pattern_length == 0 || pattern_length > kMaxPatternLength || pattern_length > n + 1)
    throw std::invalid_argument("census pattern length out of range");

  const unsigned codes = power(kCodeBase, pattern_length);
  const unsigned width = n + 1;  // rises 0..n
  counts_.assign(static_cast<std::size_t>(codes) * width, 0);

  std::vector<unsigned> sigma(n + 1);
  std::iota(sigma.begin(), sigma.end(), 1u);
  do {
    unsigned r = 0, code = 0, weight = 1;
    for (unsigned i = 0; i <= n; ++i) {
      if (sigma[i] <= pattern_length) {
        code += sigma[i] * weight;
        weight *= kCodeBase;
      }
      if (i > 0 && sigma[i - 1] < sigma[i]) ++r;
    }
    ++counts_[static_cast<std::size_t>(code) * width + r];
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

std::uint64_t PatternRiseCensus::count(const Permutation& pattern, unsigned k) const {
  if (pattern.empty() || !pattern.is_standard() || pattern.size() > pattern_length_)
    throw std::invalid_argument("pattern must be a permutation of 1..q with q <= census length");
  if (k > n_) return 0;
  const unsigned width = n_ + 1;

  // Sum over the stored full-length patterns that restrict to `pattern`.
  std::vector<unsigned> full(pattern_length_);
  std::iota(full.begin(), full.end(), 1u);
  std::uint64_t total = 0;
  std::vector<unsigned> restricted;
  do {
    restricted.clear();
    for (unsigned v : full)
      if (v <= pattern.size()) restricted.push_back(v);
    if (std::equal(restricted.begin(), restricted.end(), pattern.entries().begin()))
      total += counts_[static_cast<std::size_t>(pattern_code(full)) * width + k];
  } while (std::next_permutation(full.begin(), full.end()));
  return total;
}

BigNat dim_permutation_oracle(const DimQuery& q) {
  const PatternRiseCensus census(q.target().level, static_cast<unsigned>(q.pattern().size()));
  return BigNat(std::to_string(census.count(q.pattern(), q.target().column)));
}

OracleReport dim_bruteforce(const DimQuery& q) {
  OracleReport report{std::nullopt, dim_graph_oracle(q)};
  if (q.target().level <= PatternRiseCensus::kMaxLevel &&
      q.pattern().size() <= PatternRiseCensus::kMaxPatternLength)
    report.permutation = dim_permutation_oracle(q);
  return report;
}

std::vector<Vertex> diagonal_schedule(const std::vector<unsigned>& levels) {
  std::vector<Vertex> out;
  out.reserve(levels.size());
  for (unsigned n : levels) out.push_back({n, n / 2});
  return out;
}

std::vector<RatioRow> ratio_table(const Cylinder& a, const Cylinder& b,
                                  const std::vector<Vertex>& schedule, FormulaVariant variant) {
  if (a.length() != b.length()) throw std::invalid_argument("ratio_table needs cylinders of equal length");
  std::vector<std::future<RatioRow>> pending;
  pending.reserve(schedule.size());
  for (Vertex v : schedule) {
    const DimQuery qa(a, v), qb(b, v);  // validate eagerly, on the caller's thread
    pending.push_back(std::async(std::launch::async, [qa, qb, v, variant] {
      RatioRow row;
      row.n = v.level;
      row.k = v.column;
      row.dim_a = dim_formula(qa, variant);
      row.dim_b = dim_formula(qb, variant);
      if (row.dim_b != 0) {
        BigRational ratio(row.dim_a, row.dim_b);
        ratio.canonicalize();
        row.ratio = ratio;
        row.abs_deviation = abs(BigRational(ratio - 1));
      }
      return row;
    }));
  }
  std::vector<RatioRow> rows;
  rows.reserve(pending.size());
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

}  // namespace euler_adic
