#include "euler_adic/combinatorics.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace euler_adic {

EulerianTable::EulerianTable(unsigned max_level) {
  rows_.reserve(max_level + 1);
  rows_.push_back({BigNat(1)});
  for (unsigned n = 1; n <= max_level; ++n) {
    const auto& prev = rows_.back();
    std::vector<BigNat> row(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
      if (k >= 1) row[k] += (n - k + 1) * prev[k - 1];
      if (k <= n - 1) row[k] += (k + 1) * prev[k];
    }
    rows_.push_back(std::move(row));
  }
}

const BigNat& EulerianTable::at(unsigned n, std::int64_t k) const {
  static const BigNat zero(0);
  if (n > max_level()) throw std::out_of_range("EulerianTable: level beyond table");
  if (k < 0 || k > static_cast<std::int64_t>(n)) return zero;
  return rows_[n][static_cast<std::size_t>(k)];
}

namespace {

struct SharedTable {
  std::shared_mutex mutex;
  std::shared_ptr<const EulerianTable> table = std::make_shared<EulerianTable>(64);
  // Superseded tables stay alive so references handed out earlier remain valid.
  std::vector<std::shared_ptr<const EulerianTable>> retired;
};

SharedTable& shared_state() {
  static SharedTable state;
  return state;
}

}  // namespace

const EulerianTable& shared_eulerian_table(unsigned max_level) {
  auto& state = shared_state();
  {
    std::shared_lock lock(state.mutex);
    if (state.table->max_level() >= max_level) return *state.table;
  }
  std::unique_lock lock(state.mutex);
  if (state.table->max_level() < max_level) {
    unsigned target = std::max(max_level, 2 * state.table->max_level());
    state.retired.push_back(state.table);
    state.table = std::make_shared<EulerianTable>(target);
  }
  return *state.table;
}

BigNat eulerian(unsigned n, std::int64_t k) {
  if (k < 0 || k > static_cast<std::int64_t>(n)) return 0;
  return shared_eulerian_table(n).at(n, k);
}

BigNat binomial(std::uint64_t n, std::int64_t m) {
  if (m < 0 || static_cast<std::uint64_t>(m) > n) return 0;
  BigNat out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<unsigned long>(m));
  return out;
}

BigNat binomial_signed(std::int64_t n, std::int64_t m) {
  if (n < 0) return 0;
  return binomial(static_cast<std::uint64_t>(n), m);
}

BigNat factorial(std::uint64_t n) {
  BigNat out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

namespace {

void require_distinct(std::span<const unsigned> w) {
  if (w.empty()) throw std::invalid_argument("rise/fall statistics need a non-empty sequence");
  std::vector<unsigned> sorted(w.begin(), w.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("rise/fall statistics need pairwise distinct entries");
}

}  // namespace

unsigned rises(std::span<const unsigned> w) {
  require_distinct(w);
  unsigned count = 0;
  for (std::size_t j = 0; j + 1 < w.size(); ++j) count += w[j] < w[j + 1];
  return count;
}

unsigned falls(std::span<const unsigned> w) {
  require_distinct(w);
  return static_cast<unsigned>(w.size()) - 1 - rises(w);
}

}  // namespace euler_adic
