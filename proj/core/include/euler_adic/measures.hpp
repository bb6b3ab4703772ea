#pragma once

// Edge-weight measures on cylinder sets, with exact rational arithmetic.
//
// A measure is given by weights on edges such that the edges leaving every
// vertex carry total weight 1; a cylinder's measure is the product of the
// weights along it. It is invariant under the adic map iff all cylinders
// into the same vertex have equal measure.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "euler_adic/permutation_codec.hpp"

namespace euler_adic {

/// Explicit per-edge weights for every edge leaving levels 0..depth-1.
class EdgeWeighting {
 public:
  using WeightFn = std::function<BigRational(const Edge&)>;

  /// Tabulates `fn` and rejects (std::invalid_argument) any weight outside
  /// [0,1] or any vertex whose outgoing weights do not sum to exactly 1.
  static EdgeWeighting from_function(Orientation orientation, unsigned depth, const WeightFn& fn);

  Orientation orientation() const { return orientation_; }
  unsigned depth() const { return static_cast<unsigned>(table_.size()); }

  /// Throws std::out_of_range for edges leaving level >= depth().
  const BigRational& weight(const Edge& e) const;

 private:
  EdgeWeighting(Orientation orientation) : orientation_(orientation) {}

  Orientation orientation_;
  // [level][column][position in outgoing_edges order]
  std::vector<std::vector<std::vector<BigRational>>> table_;
};

/// Weight 1/(n+2) on every edge leaving level n.
struct SymmetricMeasure {
  Orientation orientation = Orientation::Standard;
};

/// Measures carried by the subgraph of columns 0 and 1 (standard
/// orientation). Out of (n,0): the left edge weighs 1-(n+1)a_{n+1} and each
/// of the n+1 right edges a_{n+1}. Out of (n,1): both left edges weigh 1/2,
/// right edges 0. Vertices in columns >= 2 carry no mass; their edges get
/// the symmetric weights so every vertex still sums to 1.
class FiniteRankMeasure {
 public:
  /// alphas[i] is a_{i+1}. Throws std::invalid_argument unless
  /// 0 < (n+1) a_{n+1} < 1 for each entry. The recursion linking successive
  /// entries is not enforced here; see recursion_violation().
  explicit FiniteRankMeasure(std::vector<BigRational> alphas);

  /// a_1 given, a_{n+1} = a_n / (2 - 2n a_n) for the rest.
  static FiniteRankMeasure from_recursion(const BigRational& alpha1, unsigned count);

  /// a_n = 1/(2(n+1)).
  static FiniteRankMeasure canonical(unsigned count);

  /// a_n for 1 <= n <= depth().
  const BigRational& alpha(unsigned n) const { return alphas_.at(n - 1); }
  std::span<const BigRational> alphas() const { return alphas_; }

  /// Cylinders up to this length can be measured.
  unsigned depth() const { return static_cast<unsigned>(alphas_.size()); }

  /// Smallest n with a_{n+1} != a_n / (2 - 2n a_n), if any.
  std::optional<unsigned> recursion_violation() const;

  BigRational weight(const Edge& e) const;

 private:
  std::vector<BigRational> alphas_;
};

using MeasureSpec = std::variant<SymmetricMeasure, FiniteRankMeasure, EdgeWeighting>;

std::string spec_name(const MeasureSpec& spec);
Orientation spec_orientation(const MeasureSpec& spec);
/// Maximum measurable cylinder length, or nullopt when unbounded.
std::optional<unsigned> spec_depth(const MeasureSpec& spec);

/// Throws std::out_of_range beyond spec_depth().
BigRational edge_weight(const MeasureSpec& spec, const Edge& e);

/// Product of the edge weights along `f` (1 for the empty cylinder).
BigRational cylinder_measure(const MeasureSpec& spec, const Cylinder& f);

struct Violation {
  unsigned level = 0;
  std::optional<unsigned> column;    // nullopt for a whole-level failure
  std::vector<BigRational> measures;  // distinct witnessing values
};

struct CheckReport {
  std::string spec;
  std::string check;
  unsigned depth = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

/// For every vertex at levels 1..depth, all cylinders into it have exactly
/// the same measure. Runs level by level on the set of distinct cylinder
/// measures per vertex, so no path enumeration is needed.
CheckReport check_invariance(const MeasureSpec& spec, unsigned depth);

/// Kolmogorov additivity: every vertex below `depth` sends out total weight 1
/// (so each cylinder equals the sum of its one-edge extensions), and the
/// total mass of every level up to `depth` is 1.
CheckReport check_consistency(const MeasureSpec& spec, unsigned depth);

/// Draws paths edge by edge according to the spec's weights. Deterministic
/// given (spec, seed) and the sequence of calls. Not thread-safe; use one
/// sampler per task.
class PathSampler {
 public:
  PathSampler(MeasureSpec spec, std::uint64_t seed);

  Cylinder next_path(unsigned length);
  /// path_to_perm of a path of length m-1; standard orientation only.
  Permutation next_permutation(unsigned m);

 private:
  std::discrete_distribution<unsigned>& distribution_at(Vertex v);

  MeasureSpec spec_;
  std::mt19937_64 engine_;
  std::map<Vertex, std::discrete_distribution<unsigned>> cache_;
};

Cylinder sample_path(const MeasureSpec& spec, unsigned length, std::uint64_t seed);
Permutation sample_permutation(const MeasureSpec& spec, unsigned m, std::uint64_t seed);

struct ChiSquareResult {
  double statistic = 0;
  unsigned degrees_of_freedom = 0;
  double p_value = 1;
};

/// Pearson goodness of fit of `observed` counts against `probabilities`.
ChiSquareResult chi_square(std::span<const std::uint64_t> observed,
                           std::span<const double> probabilities);

// Two-loop reinforced walks. Loop A is a right turn (k grows), loop B a left
// turn. On the standard graph at (n,k), P(A) = (n-k+1)/(n+2): the more often A
// has been taken, the less likely it becomes (negative reinforcement). The
// reverse graph gives P(A) = (k+1)/(n+2), a Polya urn (positive).
enum class Reinforcement { Negative, Positive };

/// Exact probability of choosing loop A at vertex v.
BigRational loop_a_probability(Vertex v, Reinforcement mode);

struct WalkStep {
  unsigned step = 0;
  char choice = 'A';
  unsigned k = 0;  // times loop A was chosen in the first `step` steps
};

struct WalkResult {
  Reinforcement mode = Reinforcement::Negative;
  std::uint64_t seed = 0;
  std::vector<WalkStep> trajectory;

  unsigned final_k() const { return trajectory.empty() ? 0 : trajectory.back().k; }
  double final_fraction() const;
};

/// Throws std::invalid_argument when steps == 0.
WalkResult reinforced_walk(unsigned steps, Reinforcement mode, std::uint64_t seed);

}  // namespace euler_adic
