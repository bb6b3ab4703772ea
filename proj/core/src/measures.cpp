#include "euler_adic/measures.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <boost/math/distributions/chi_squared.hpp>

namespace euler_adic {

namespace {

BigRational ratio(long num, long den) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational symmetric_weight(const Edge& e) { return ratio(1, static_cast<long>(e.source.level) + 2); }

}  // namespace

EdgeWeighting EdgeWeighting::from_function(Orientation orientation, unsigned depth,
                                           const WeightFn& fn) {
  EdgeWeighting w(orientation);
  w.table_.resize(depth);
  for (unsigned n = 0; n < depth; ++n) {
    w.table_[n].resize(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
      BigRational total = 0;
      for (const Edge& e : outgoing_edges({n, k}, orientation)) {
        BigRational x = fn(e);
        x.canonicalize();
        if (x < 0 || x > 1)
          throw std::invalid_argument("edge weight " + x.get_str() + " outside [0,1]");
        total += x;
        w.table_[n][k].push_back(std::move(x));
      }
      if (total != 1)
        throw std::invalid_argument("outgoing weights at (" + std::to_string(n) + "," +
                                    std::to_string(k) + ") sum to " + total.get_str() + ", not 1");
    }
  }
  return w;
}

const BigRational& EdgeWeighting::weight(const Edge& e) const {
  if (e.source.level >= table_.size()) throw std::out_of_range("edge beyond the weighting's depth");
  const auto& row = table_[e.source.level][e.source.column];
  const unsigned left = bundle_size(e.source, Turn::Left, orientation_);
  const unsigned pos = e.turn == Turn::Left ? e.index - 1 : left + e.index - 1;
  return row.at(pos);
}

FiniteRankMeasure::FiniteRankMeasure(std::vector<BigRational> alphas) : alphas_(std::move(alphas)) {
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    alphas_[i].canonicalize();
    const BigRational scaled = BigRational(static_cast<long>(i + 1)) * alphas_[i];
    if (scaled <= 0 || scaled >= 1)
      throw std::invalid_argument("finite-rank weight a_" + std::to_string(i + 1) +
                                  " must satisfy 0 < " + std::to_string(i + 1) + " a < 1");
  }
}

FiniteRankMeasure FiniteRankMeasure::from_recursion(const BigRational& alpha1, unsigned count) {
  std::vector<BigRational> a;
  if (count == 0) return FiniteRankMeasure(a);
  a.push_back(alpha1);
  for (unsigned n = 1; n < count; ++n) {
    BigRational next = a.back() / (2 - 2 * BigRational(static_cast<long>(n)) * a.back());
    next.canonicalize();
    a.push_back(std::move(next));
  }
  return FiniteRankMeasure(std::move(a));
}

FiniteRankMeasure FiniteRankMeasure::canonical(unsigned count) {
  std::vector<BigRational> a;
  for (unsigned n = 1; n <= count; ++n) a.push_back(ratio(1, 2 * (static_cast<long>(n) + 1)));
  return FiniteRankMeasure(std::move(a));
}

std::optional<unsigned> FiniteRankMeasure::recursion_violation() const {
  for (unsigned n = 1; n < alphas_.size(); ++n) {
    BigRational expected = alpha(n) / (2 - 2 * BigRational(static_cast<long>(n)) * alpha(n));
    expected.canonicalize();
    if (alpha(n + 1) != expected) return n;
  }
  return std::nullopt;
}

BigRational FiniteRankMeasure::weight(const Edge& e) const {
  const Vertex v = e.source;
  if (v.level >= depth()) throw std::out_of_range("edge beyond the finite-rank measure's depth");
  if (v.column == 0) {
    const BigRational& a = alpha(v.level + 1);
    if (e.turn == Turn::Right) return a;
    return 1 - BigRational(static_cast<long>(v.level) + 1) * a;
  }
  if (v.column == 1) return e.turn == Turn::Left ? ratio(1, 2) : BigRational(0);
  return symmetric_weight(e);
}

std::string spec_name(const MeasureSpec& spec) {
  struct {
    std::string operator()(const SymmetricMeasure& s) const {
      return s.orientation == Orientation::Standard ? "symmetric" : "symmetric-reverse";
    }
    std::string operator()(const FiniteRankMeasure&) const { return "finite-rank"; }
    std::string operator()(const EdgeWeighting&) const { return "custom"; }
  } visitor;
  return std::visit(visitor, spec);
}

Orientation spec_orientation(const MeasureSpec& spec) {
  if (const auto* s = std::get_if<SymmetricMeasure>(&spec)) return s->orientation;
  if (const auto* w = std::get_if<EdgeWeighting>(&spec)) return w->orientation();
  return Orientation::Standard;
}

std::optional<unsigned> spec_depth(const MeasureSpec& spec) {
  if (const auto* f = std::get_if<FiniteRankMeasure>(&spec)) return f->depth();
  if (const auto* w = std::get_if<EdgeWeighting>(&spec)) return w->depth();
  return std::nullopt;
}

BigRational edge_weight(const MeasureSpec& spec, const Edge& e) {
  if (std::holds_alternative<SymmetricMeasure>(spec)) return symmetric_weight(e);
  if (const auto* f = std::get_if<FiniteRankMeasure>(&spec)) return f->weight(e);
  return std::get<EdgeWeighting>(spec).weight(e);
}

BigRational cylinder_measure(const MeasureSpec& spec, const Cylinder& f) {
  if (f.orientation() != spec_orientation(spec))
    throw std::invalid_argument("cylinder and measure use different graph orientations");
  BigRational product = 1;
  for (const Edge& e : f.edges()) {
    product *= edge_weight(spec, e);
    if (product == 0) break;
  }
  return product;
}

namespace {

void require_depth(const MeasureSpec& spec, unsigned depth) {
  if (auto limit = spec_depth(spec); limit && depth > *limit)
    throw std::out_of_range("check depth " + std::to_string(depth) + " exceeds the spec's depth " +
                            std::to_string(*limit));
}

// Enough distinct values to witness a violation; see check_invariance.
constexpr std::size_t kWitnessCap = 4;

}  // namespace

CheckReport check_invariance(const MeasureSpec& spec, unsigned depth) {
  require_depth(spec, depth);
  const Orientation o = spec_orientation(spec);
  CheckReport report{spec_name(spec), "invariance", depth, {}};

  // values[k]: distinct measures of cylinders into (n,k), capped at
  // kWitnessCap. Multiplying by a nonzero weight keeps values distinct, so a
  // vertex has two or more values in the capped set iff it has in truth.
  std::vector<std::set<BigRational>> values{{BigRational(1)}};
  for (unsigned n = 0; n < depth; ++n) {
    std::vector<std::set<BigRational>> next(n + 2);
    for (unsigned k = 0; k <= n; ++k) {
      for (const Edge& e : outgoing_edges({n, k}, o)) {
        const BigRational w = edge_weight(spec, e);
        auto& bucket = next[e.target().column];
        for (const BigRational& m : values[k]) {
          if (bucket.size() >= kWitnessCap) break;
          bucket.insert(m * w);
        }
      }
    }
    for (unsigned k = 0; k <= n + 1; ++k)
      if (next[k].size() > 1)
        report.violations.push_back({n + 1, k, {next[k].begin(), next[k].end()}});
    values = std::move(next);
  }
  return report;
}

CheckReport check_consistency(const MeasureSpec& spec, unsigned depth) {
  require_depth(spec, depth);
  const Orientation o = spec_orientation(spec);
  CheckReport report{spec_name(spec), "consistency", depth, {}};

  std::vector<BigRational> mass{BigRational(1)};
  for (unsigned n = 0; n < depth; ++n) {
    std::vector<BigRational> next(n + 2);
    for (unsigned k = 0; k <= n; ++k) {
      BigRational out = 0;
      for (const Edge& e : outgoing_edges({n, k}, o)) {
        const BigRational w = edge_weight(spec, e);
        out += w;
        next[e.target().column] += mass[k] * w;
      }
      if (out != 1) report.violations.push_back({n, k, {out}});
    }
    BigRational total = 0;
    for (const auto& m : next) total += m;
    if (total != 1) report.violations.push_back({n + 1, std::nullopt, {total}});
    mass = std::move(next);
  }
  return report;
}

PathSampler::PathSampler(MeasureSpec spec, std::uint64_t seed)
    : spec_(std::move(spec)), engine_(seed) {}

std::discrete_distribution<unsigned>& PathSampler::distribution_at(Vertex v) {
  auto it = cache_.find(v);
  if (it != cache_.end()) return it->second;
  std::vector<double> weights;
  for (const Edge& e : outgoing_edges(v, spec_orientation(spec_)))
    weights.push_back(edge_weight(spec_, e).get_d());
  return cache_.emplace(v, std::discrete_distribution<unsigned>(weights.begin(), weights.end()))
      .first->second;
}

Cylinder PathSampler::next_path(unsigned length) {
  if (auto limit = spec_depth(spec_); limit && length > *limit)
    throw std::out_of_range("sample length exceeds the spec's depth");
  const Orientation o = spec_orientation(spec_);
  Cylinder path(o);
  for (unsigned step = 0; step < length; ++step) {
    const Vertex v = path.terminal();
    const unsigned pick = distribution_at(v)(engine_);
    const unsigned left = bundle_size(v, Turn::Left, o);
    if (pick < left)
      path.push_back(Turn::Left, pick + 1);
    else
      path.push_back(Turn::Right, pick - left + 1);
  }
  return path;
}

Permutation PathSampler::next_permutation(unsigned m) {
  if (m == 0) throw std::invalid_argument("permutations need m >= 1");
  return path_to_perm(next_path(m - 1));
}

Cylinder sample_path(const MeasureSpec& spec, unsigned length, std::uint64_t seed) {
  return PathSampler(spec, seed).next_path(length);
}

Permutation sample_permutation(const MeasureSpec& spec, unsigned m, std::uint64_t seed) {
  return PathSampler(spec, seed).next_permutation(m);
}

ChiSquareResult chi_square(std::span<const std::uint64_t> observed,
                           std::span<const double> probabilities) {
  if (observed.size() != probabilities.size() || observed.size() < 2)
    throw std::invalid_argument("chi-square needs matching observed/expected with >= 2 cells");
  double total = 0;
  for (auto c : observed) total += static_cast<double>(c);
  ChiSquareResult out;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = total * probabilities[i];
    if (expected <= 0) throw std::invalid_argument("chi-square expected count must be positive");
    const double diff = static_cast<double>(observed[i]) - expected;
    out.statistic += diff * diff / expected;
  }
  out.degrees_of_freedom = static_cast<unsigned>(observed.size() - 1);
  boost::math::chi_squared dist(out.degrees_of_freedom);
  out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
  return out;
}

BigRational loop_a_probability(Vertex v, Reinforcement mode) {
  const Orientation o = mode == Reinforcement::Negative ? Orientation::Standard : Orientation::Reverse;
  return ratio(bundle_size(v, Turn::Right, o), static_cast<long>(v.level) + 2);
}

double WalkResult::final_fraction() const {
  if (trajectory.empty()) return 0;
  return static_cast<double>(trajectory.back().k) / trajectory.back().step;
}

WalkResult reinforced_walk(unsigned steps, Reinforcement mode, std::uint64_t seed) {
  if (steps == 0) throw std::invalid_argument("a walk needs at least one step");
  const Orientation o = mode == Reinforcement::Negative ? Orientation::Standard : Orientation::Reverse;
  std::mt19937_64 engine(seed);
  WalkResult result{mode, seed, {}};
  result.trajectory.reserve(steps);
  Vertex v{0, 0};
  for (unsigned step = 1; step <= steps; ++step) {
    // uniform over the n+2 outgoing edges; the right bundle means loop A
    std::uniform_int_distribution<unsigned> edge(0, v.level + 1);
    const bool loop_a = edge(engine) < bundle_size(v, Turn::Right, o);
    v = {v.level + 1, v.column + (loop_a ? 1u : 0u)};
    result.trajectory.push_back({step, loop_a ? 'A' : 'B', v.column});
  }
  return result;
}

}  // namespace euler_adic
