#include "gotzmann/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

#include "gotzmann/errors.hpp"
#include "gotzmann/gotzmann.hpp"
#include "test_support.hpp"

namespace gotzmann {
namespace {

using testing::mono;

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

SweepConfig exhaustive(std::size_t n, unsigned d) {
  SweepConfig cfg;
  cfg.n = n;
  cfg.d = d;
  return cfg;
}

TEST(SweepMacaulay, ExhaustiveSmallCases) {
  auto r = sweep_macaulay(exhaustive(3, 2));
  EXPECT_TRUE(r.ok()) << format_report(r);
  EXPECT_EQ(r.subsets_enumerated, 64u);
  EXPECT_EQ(r.instances_checked, 64u);

  r = sweep_macaulay(exhaustive(2, 3));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.subsets_enumerated, 16u);
}

TEST(SweepMacaulay, AllSweepableShapes) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (unsigned d = 0; d <= 6; ++d) {
      const auto bits = universe_size(n, d);
      if (bits > 16) continue;
      auto r = sweep_macaulay(exhaustive(n, d));
      ASSERT_TRUE(r.ok()) << "n=" << n << " d=" << d << "\n" << format_report(r);
      ASSERT_EQ(r.subsets_enumerated, std::uint64_t{1} << bits);
    }
  }
}

TEST(SweepMacaulay, SampledDegreeFour) {
  auto cfg = exhaustive(3, 4);
  cfg.sample = SampleSpec{10000, 42};
  auto r = sweep_macaulay(cfg);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.instances_checked, 10000u);
}

TEST(SweepMacaulay, SizeAndGcdFilters) {
  auto cfg = exhaustive(3, 3);
  cfg.size_filter = 5;
  auto r = sweep_macaulay(cfg);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.instances_checked, binom(10, 5));

  cfg = exhaustive(3, 2);
  cfg.gcd_one_only = true;
  r = sweep_macaulay(cfg);
  const auto all = testing::brute_universe(3, 2);
  std::uint64_t expected = 0;
  for (std::uint64_t mask = 1; mask < 64; ++mask) {
    if (gcd_of(testing::subset_from_bits(3, 2, all, mask)).degree() == 0) ++expected;
  }
  EXPECT_EQ(r.instances_checked, expected);
}

TEST(SweepMacaulay, SerialAndParallelAgree) {
  auto cfg = exhaustive(3, 3);
  cfg.execution = Execution::serial;
  auto s = sweep_macaulay(cfg);
  cfg.execution = Execution::parallel;
  auto p = sweep_macaulay(cfg);
  EXPECT_EQ(s.instances_checked, p.instances_checked);
  EXPECT_EQ(s.violations.size(), p.violations.size());
}

TEST(SweepMacaulay, Guards) {
  EXPECT_THROW(sweep_macaulay(exhaustive(6, 1)), DomainError);
  EXPECT_THROW(sweep_macaulay(exhaustive(3, 6)), DomainError);
  auto cfg = exhaustive(4, 3);
  cfg.budget = 1000;
  EXPECT_THROW(sweep_macaulay(cfg), BudgetExceeded);
}

TEST(SweepUpOperator, UpToFiveVariablesDegreeFour) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (unsigned d = 0; d <= 4; ++d) {
      auto r = sweep_up_operator(n, d);
      ASSERT_TRUE(r.ok()) << "n=" << n << " d=" << d << "\n" << format_report(r);
      ASSERT_EQ(r.instances_checked, universe_size(n, d) + 1);
    }
  }
}

TEST(SweepLexUniqueness, ThreeVariables) {
  auto r = sweep_lex_uniqueness(3, 15);
  EXPECT_TRUE(r.ok()) << format_report(r);
  EXPECT_GT(r.subsets_enumerated, 0u);
}

TEST(SweepLexUniqueness, FourVariables) {
  auto r = sweep_lex_uniqueness(4, 10);
  EXPECT_TRUE(r.ok()) << format_report(r);
}

TEST(LemmaFailures, CleanOnGotzmannSets) {
  EXPECT_TRUE(lemma_failures(lex_segment(3, 4, 11)).empty());
  EXPECT_TRUE(lemma_failures(universe(3, 2)).empty());
  EXPECT_TRUE(lemma_failures(construct_nonlex(3, 8)).empty());
  EXPECT_TRUE(lemma_failures(multiply(Monomial::variable(3, 2), lex_segment(3, 2, 4))).empty());
}

TEST(LemmaFailures, FlagsNonGotzmannSetWithGcd) {
  auto V = multiply(Monomial::variable(3, 1), MonomialSet(3, 2, {mono({2, 0, 0}), mono({0, 0, 2})}));
  auto failed = lemma_failures(V);
  EXPECT_NE(std::find(failed.begin(), failed.end(), "gcd-reduction"), failed.end());
  EXPECT_NE(std::find(failed.begin(), failed.end(), "persistence"), failed.end());
}

TEST(SweepLemmas, SmallCases) {
  for (unsigned d = 0; d <= 3; ++d) {
    auto r = sweep_lemmas(exhaustive(3, d));
    ASSERT_TRUE(r.ok()) << format_report(r);
  }
  for (unsigned d = 0; d <= 4; ++d) {
    auto r = sweep_lemmas(exhaustive(2, d));
    ASSERT_TRUE(r.ok()) << format_report(r);
  }
  for (unsigned d = 0; d <= 2; ++d) {
    auto r = sweep_lemmas(exhaustive(4, d));
    ASSERT_TRUE(r.ok()) << format_report(r);
  }
}

TEST(SweepFixedEmpty, ThreeVariablesExhaustive) {
  for (unsigned d = 0; d <= 3; ++d) {
    auto r = sweep_fixed_empty(exhaustive(3, d));
    ASSERT_TRUE(r.ok()) << format_report(r);
  }
}

TEST(SweepFixedEmpty, SizeElevenDegreeFour) {
  auto cfg = exhaustive(3, 4);
  cfg.size_filter = 11;
  auto r = sweep_fixed_empty(cfg);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.instances_checked, binom(15, 11));
}

TEST(SweepFixedEmpty, NecessityInFourVariables) {
  auto r = sweep_fixed_empty(exhaustive(4, 2));
  EXPECT_TRUE(r.ok()) << format_report(r);
}

TEST(SampleMasks, ReproducibleAndSized) {
  auto a = sample_masks(15, std::nullopt, {100, 42});
  auto b = sample_masks(15, std::nullopt, {100, 42});
  auto c = sample_masks(15, std::nullopt, {100, 43});
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  ASSERT_EQ(a.size(), 100u);
  for (auto m : a) EXPECT_LT(m, Mask{1} << 15);
  for (auto m : sample_masks(15, 11, {200, 1})) EXPECT_EQ(std::popcount(m), 11);
  EXPECT_THROW(sample_masks(65, std::nullopt, {1, 1}), DomainError);
  EXPECT_THROW(sample_masks(10, 11, {1, 1}), DomainError);
}

TEST(Format, ViolationAndReport) {
  Violation v{"macaulay", 0x2a, 3, 5, 6, MonomialSet(3, 1)};
  EXPECT_EQ(format_violation(v), "mask=0x2a size=3 shadow=5 bound=6 property=macaulay");
  SweepReport r;
  r.subsets_enumerated = 64;
  r.instances_checked = 10;
  r.violations.push_back(v);
  auto text = format_report(r);
  EXPECT_EQ(text.rfind("enumerated=64 checked=10 violations=1", 0), 0u);
  EXPECT_NE(text.find("mask=0x2a"), std::string::npos);
}

}  // namespace
}  // namespace gotzmann
