#include "euler_adic/measures.hpp"

#include <map>

#include "gtest/gtest.h"

namespace euler_adic {
namespace {

BigRational q(long num, long den) {
  BigRational x(num, den);
  x.canonicalize();
  return x;
}

TEST(Measures, SymmetricCylinders) {
  const MeasureSpec spec = SymmetricMeasure{};
  EXPECT_EQ(cylinder_measure(spec, Cylinder{}), 1);
  EXPECT_EQ(cylinder_measure(spec, parse_cylinder("L1,R1,R1")), q(1, 24));
  for (unsigned n = 0; n <= 7; ++n) {
    const BigRational expected = BigRational(1) / BigRational(factorial(n + 1));
    for (const Cylinder& f : enumerate_cylinders(n, 100'000)) ASSERT_EQ(cylinder_measure(spec, f), expected);
  }
}

TEST(Measures, SymmetricReverseCylinders) {
  const MeasureSpec spec = SymmetricMeasure{Orientation::Reverse};
  EXPECT_EQ(cylinder_measure(spec, parse_cylinder("L1,L2", Orientation::Reverse)), q(1, 6));
  EXPECT_THROW(cylinder_measure(spec, parse_cylinder("L1")), std::invalid_argument);
}

TEST(Measures, SymmetricChecksPass) {
  for (auto o : {Orientation::Standard, Orientation::Reverse}) {
    EXPECT_TRUE(check_invariance(SymmetricMeasure{o}, 7).passed());
    EXPECT_TRUE(check_consistency(SymmetricMeasure{o}, 6).passed());
  }
  EXPECT_EQ(spec_name(SymmetricMeasure{}), "symmetric");
  EXPECT_EQ(spec_name(SymmetricMeasure{Orientation::Reverse}), "symmetric-reverse");
  EXPECT_FALSE(spec_depth(SymmetricMeasure{}).has_value());
}

TEST(Measures, FiniteRankWitnessAtTwoOne) {
  const MeasureSpec spec = FiniteRankMeasure::canonical(10);
  // (1 - a_1) a_2 = (3/4)(1/6) and a_1 / 2 = (1/4)(1/2)
  EXPECT_EQ(cylinder_measure(spec, parse_cylinder("L1,R1")), q(1, 8));
  EXPECT_EQ(cylinder_measure(spec, parse_cylinder("L1,R2")), q(1, 8));
  EXPECT_EQ(cylinder_measure(spec, parse_cylinder("R1,L1")), q(1, 8));
  EXPECT_EQ(cylinder_measure(spec, parse_cylinder("R1,L2")), q(1, 8));
  EXPECT_EQ(cylinder_measure(spec, parse_cylinder("R1,R1")), 0);
  EXPECT_EQ(spec_name(spec), "finite-rank");
  EXPECT_EQ(spec_depth(spec), 10u);
}

TEST(Measures, CanonicalAlphasSatisfyTheRecursion) {
  const FiniteRankMeasure canonical = FiniteRankMeasure::canonical(51);
  EXPECT_FALSE(canonical.recursion_violation().has_value());
  for (unsigned n = 1; n <= 50; ++n) {
    const BigRational& a = canonical.alpha(n);
    BigRational next = a / (2 - 2 * BigRational(static_cast<long>(n)) * a);
    next.canonicalize();
    ASSERT_EQ(canonical.alpha(n + 1), next) << n;
    ASSERT_EQ(canonical.alpha(n + 1), q(1, 2 * (static_cast<long>(n) + 2)));
  }
  const FiniteRankMeasure derived = FiniteRankMeasure::from_recursion(q(1, 4), 51);
  for (unsigned n = 1; n <= 51; ++n) EXPECT_EQ(derived.alpha(n), canonical.alpha(n));
}

TEST(Measures, FiniteRankChecks) {
  const MeasureSpec spec = FiniteRankMeasure::canonical(10);
  EXPECT_TRUE(check_invariance(spec, 10).passed());
  EXPECT_TRUE(check_consistency(spec, 10).passed());
  EXPECT_THROW(check_invariance(spec, 11), std::out_of_range);

  // 1/a_n = 2(n+1) + c 2^{n-1}; the constraint holds at every level iff c >= 0.
  const MeasureSpec other = FiniteRankMeasure::from_recursion(q(1, 5), 10);
  EXPECT_TRUE(check_invariance(other, 10).passed());
  EXPECT_TRUE(check_consistency(other, 10).passed());
  EXPECT_THROW(FiniteRankMeasure::from_recursion(q(1, 3), 10), std::invalid_argument);
}

TEST(Measures, PerturbedAlphaFailsWithWitness) {
  FiniteRankMeasure canonical = FiniteRankMeasure::canonical(10);
  std::vector<BigRational> alphas(canonical.alphas().begin(), canonical.alphas().end());
  alphas[1] = q(1, 7);
  const FiniteRankMeasure perturbed(alphas);
  EXPECT_EQ(perturbed.recursion_violation(), 1u);

  const CheckReport report = check_invariance(perturbed, 10);
  ASSERT_FALSE(report.passed());
  const Violation& first = report.violations.front();
  EXPECT_EQ(first.level, 2u);
  EXPECT_EQ(first.column, 1u);
  ASSERT_EQ(first.measures.size(), 2u);
  EXPECT_EQ(first.measures[0], q(3, 28));
  EXPECT_EQ(first.measures[1], q(1, 8));
  // Still a probability measure: only invariance breaks.
  EXPECT_TRUE(check_consistency(perturbed, 10).passed());
}

TEST(Measures, FiniteRankRejectsOutOfRangeAlphas) {
  EXPECT_THROW(FiniteRankMeasure({q(1, 1)}), std::invalid_argument);
  EXPECT_THROW(FiniteRankMeasure({q(1, 4), q(1, 2)}), std::invalid_argument);
  EXPECT_THROW(FiniteRankMeasure({q(0, 1)}), std::invalid_argument);
  EXPECT_NO_THROW(FiniteRankMeasure({q(1, 4), q(1, 3)}));
}

TEST(Measures, CustomWeightingValidatesVertexSums) {
  const auto almost = [](const Edge& e) {
    const long size = static_cast<long>(e.source.level) + 2;
    BigRational w(1, size);
    if (e.source == Vertex{1, 0} && e.turn == Turn::Left) w -= q(1, 100);
    return w;
  };
  EXPECT_THROW(EdgeWeighting::from_function(Orientation::Standard, 4, almost), std::invalid_argument);
  EXPECT_THROW(EdgeWeighting::from_function(Orientation::Standard, 2,
                                            [](const Edge& e) { return e.turn == Turn::Left ? q(2, 1) : q(-1, 1); }),
               std::invalid_argument);

  const MeasureSpec custom = EdgeWeighting::from_function(
      Orientation::Standard, 5, [](const Edge& e) { return BigRational(1, e.source.level + 2); });
  EXPECT_EQ(spec_name(custom), "custom");
  EXPECT_TRUE(check_invariance(custom, 5).passed());
  EXPECT_TRUE(check_consistency(custom, 5).passed());
  EXPECT_THROW(cylinder_measure(custom, parse_cylinder("L1,L1,L1,L1,L1,L1")), std::out_of_range);

  // Valid probabilities that are not invariant.
  const MeasureSpec skewed = EdgeWeighting::from_function(Orientation::Standard, 3, [](const Edge& e) {
    if (e.source.level == 0) return e.turn == Turn::Left ? q(1, 3) : q(2, 3);
    return BigRational(1, e.source.level + 2);
  });
  EXPECT_TRUE(check_consistency(skewed, 3).passed());
  const CheckReport report = check_invariance(skewed, 3);
  ASSERT_FALSE(report.passed());
  EXPECT_EQ(report.violations.front().level, 2u);
  EXPECT_EQ(report.violations.front().column, 1u);
}

TEST(Measures, SamplerIsDeterministic) {
  PathSampler a(SymmetricMeasure{}, 42);
  PathSampler b(SymmetricMeasure{}, 42);
  PathSampler c(SymmetricMeasure{}, 43);
  bool differs = false;
  for (int i = 0; i < 200; ++i) {
    const Cylinder x = a.next_path(9);
    EXPECT_EQ(x, b.next_path(9));
    differs |= x != c.next_path(9);
  }
  EXPECT_TRUE(differs);
  EXPECT_EQ(sample_permutation(SymmetricMeasure{}, 6, 7), sample_permutation(SymmetricMeasure{}, 6, 7));
}

TEST(Measures, SymmetricSamplerIsUniformOnS4) {
  PathSampler sampler(SymmetricMeasure{}, 20240601);
  std::map<std::string, std::uint64_t> tally;
  constexpr std::uint64_t kSamples = 120000;
  for (std::uint64_t i = 0; i < kSamples; ++i) ++tally[format_permutation(sampler.next_permutation(4))];
  ASSERT_EQ(tally.size(), 24u);
  std::vector<std::uint64_t> observed;
  for (const auto& [_, c] : tally) observed.push_back(c);
  const std::vector<double> p(24, 1.0 / 24);
  const ChiSquareResult r = chi_square(observed, p);
  EXPECT_EQ(r.degrees_of_freedom, 23u);
  EXPECT_GT(r.p_value, 0.01) << r.statistic;
}

TEST(Measures, ChiSquareDetectsBias) {
  const std::vector<std::uint64_t> observed{600, 400};
  const std::vector<double> p{0.5, 0.5};
  const ChiSquareResult r = chi_square(observed, p);
  EXPECT_DOUBLE_EQ(r.statistic, 40.0);
  EXPECT_LT(r.p_value, 1e-6);
  EXPECT_THROW(chi_square(std::vector<std::uint64_t>{1}, std::vector<double>{1.0}), std::invalid_argument);
}

TEST(Measures, FiniteRankSamplerStaysInColumnsZeroAndOne) {
  PathSampler sampler(FiniteRankMeasure::canonical(12), 5);
  unsigned ones = 0;
  for (int i = 0; i < 2000; ++i) {
    const Cylinder f = sampler.next_path(12);
    for (const Edge& e : f.edges()) ASSERT_LE(e.target().column, 1u);
    ones += f.terminal().column == 1;
  }
  EXPECT_GT(ones, 0u);
  EXPECT_THROW(sampler.next_path(13), std::out_of_range);
}

TEST(Measures, LoopProbabilities) {
  EXPECT_EQ(loop_a_probability({0, 0}, Reinforcement::Negative), q(1, 2));
  EXPECT_EQ(loop_a_probability({4, 1}, Reinforcement::Negative), q(4, 6));
  EXPECT_EQ(loop_a_probability({4, 1}, Reinforcement::Positive), q(2, 6));
  for (unsigned n = 0; n <= 10; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      EXPECT_EQ(loop_a_probability({n, k}, Reinforcement::Negative), q(n - k + 1, n + 2));
      EXPECT_EQ(loop_a_probability({n, k}, Reinforcement::Positive), q(k + 1, n + 2));
    }
}

TEST(Measures, ReinforcedWalks) {
  EXPECT_THROW(reinforced_walk(0, Reinforcement::Negative, 1), std::invalid_argument);

  const WalkResult a = reinforced_walk(10000, Reinforcement::Negative, 2024);
  const WalkResult b = reinforced_walk(10000, Reinforcement::Negative, 2024);
  ASSERT_EQ(a.trajectory.size(), 10000u);
  unsigned k = 0;
  for (std::size_t i = 0; i < a.trajectory.size(); ++i) {
    const WalkStep& s = a.trajectory[i];
    EXPECT_EQ(s.step, i + 1);
    k += s.choice == 'A';
    EXPECT_EQ(s.k, k);
    EXPECT_EQ(s.choice, b.trajectory[i].choice);
  }
  EXPECT_EQ(a.final_k(), k);
  // Negative reinforcement pins k_n/n near 1/2: the deviation is of order n^{-1/2}.
  EXPECT_NEAR(a.final_fraction(), 0.5, 0.02);
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
    EXPECT_NEAR(reinforced_walk(10000, Reinforcement::Negative, seed).final_fraction(), 0.5, 0.02);

  // The urn's limit fraction is uniform on [0,1], so across seeds it spreads out.
  double lo = 1, hi = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const double f = reinforced_walk(2000, Reinforcement::Positive, seed).final_fraction();
    lo = std::min(lo, f);
    hi = std::max(hi, f);
  }
  EXPECT_GT(hi - lo, 0.3);
}

}  // namespace
}  // namespace euler_adic
