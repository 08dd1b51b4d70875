#include <gtest/gtest.h>

#include <cstdlib>

#include "gocha/errors.hpp"
#include "gocha/oracle.hpp"
#include "gocha/spectrum.hpp"
#include "support.hpp"

using namespace gocha;
using gocha::test::fixture;

namespace {

// Lyndon words by brute force: strictly smaller than every proper rotation.
LyndonTable lyndon_by_rotation(const std::vector<int>& chars, int q, int N) {
  LyndonTable out;
  const int d = static_cast<int>(chars.size());
  for (int n = 1; n <= N; ++n) {
    std::vector<int> w(n, 0);
    while (true) {
      bool lyndon = true;
      for (int r = 1; r < n && lyndon; ++r) {
        std::vector<int> rot(w.begin() + r, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + r);
        if (!(w < rot)) lyndon = false;
      }
      if (lyndon) {
        int c = 0;
        for (int letter : w) c += chars[letter];
        ++out[{n, c % q}];
      }
      int k = n - 1;
      while (k >= 0 && ++w[k] == d) w[k--] = 0;
      if (k < 0) break;
    }
  }
  return out;
}

std::vector<std::int64_t> dims(const GradedQuotient& g) { return g.dims; }

}  // namespace

TEST(Lyndon, MatchesRotationCheck) {
  for (const auto& [chars, q] : std::vector<std::pair<std::vector<int>, int>>{
           {{1, 1}, 2}, {{0, 1}, 2}, {{1, 2, 3}, 5}, {{1, 1, 1}, 2}, {{0, 0, 1, 2}, 3}}) {
    const LyndonTable fast = lyndon_counts(chars, q, 6);
    const LyndonTable slow = lyndon_by_rotation(chars, q, 6);
    for (int n = 1; n <= 6; ++n) {
      for (int i = 0; i < q; ++i) {
        const auto a = fast.count({n, i}) ? fast.at({n, i}) : 0;
        const auto b = slow.count({n, i}) ? slow.at({n, i}) : 0;
        EXPECT_EQ(a, b) << n << " " << i;
      }
    }
  }
}

TEST(Lyndon, FreeExamples) {
  for (long d : {2L, 3L, 5L}) {
    const LyndonTable t = lyndon_counts(std::vector<int>(d, 1), 2, 3);
    EXPECT_EQ(t.at({2, 0}), (d * d - d) / 2);
    EXPECT_EQ(t.at({3, 1}), (d * d * d - d) / 3);
  }
  const LyndonTable single = lyndon_counts({1}, 2, 5);
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(single.count({n, n % 2}) ? single.at({n, n % 2}) : 0, 0);
}

TEST(Lyndon, WittTotalsAndEquivariantNecklace) {
  const std::vector<int> chars = {0, 1, 2, 2};
  const int q = 3;
  const LyndonTable t = lyndon_counts(chars, q, 7);
  EqSeries star = EqSeries::constant(1, GroupRingElt::one(q));
  for (int c : chars) star[1] -= GroupRingElt::basis(q, c);
  for (int n = 1; n <= 7; ++n) {
    std::int64_t total = 0;
    for (int i = 0; i < q; ++i) total += t.count({n, i}) ? t.at({n, i}) : 0;
    EXPECT_EQ(Rational(total), necklace_ranks(test::poly({1, -4}, 1), n, RingMode::zp()));
    if (gcd(n, q) != 1) continue;
    const GroupRingElt eq = equivariant_necklace_ranks(star, n, RingMode::zp());
    for (int i = 0; i < q; ++i) EXPECT_EQ(eq[i], t.count({n, i}) ? t.at({n, i}) : 0);
  }
}

TEST(Quotient, CommutatorQ17Standard) {
  const GradedQuotient g = quotient_ranks(fixture("commutator_q17"), 5, Grading::kStandard);
  EXPECT_EQ(dims(g), (std::vector<std::int64_t>{1, 3, 8, 21, 55, 144}));
  EXPECT_TRUE(g.character_homogeneous);
}

TEST(Quotient, FreeTwoGenerators) {
  const GradedQuotient g = quotient_ranks(fixture("free2_mixed"), 4, Grading::kStandard);
  EXPECT_EQ(dims(g), (std::vector<std::int64_t>{1, 2, 4, 8, 16}));
}

TEST(Quotient, TwoRelationQ5Chi0) {
  const GradedQuotient g = quotient_ranks(fixture("two_relation_q5"), 5, Grading::kChi0);
  EXPECT_EQ(dims(g), (std::vector<std::int64_t>{1, 1, 2, 3, 4, 6}));
}

TEST(Quotient, OrderIndependence) {
  for (const char* name : {"commutator_q17", "two_relation_q5"}) {
    for (Grading grading : {Grading::kStandard, Grading::kChi0}) {
      const GradedQuotient lex = quotient_ranks(fixture(name), 5, grading, 1, MonomialOrder::kLex);
      const GradedQuotient rev =
          quotient_ranks(fixture(name), 5, grading, 1, MonomialOrder::kRevLex);
      EXPECT_EQ(lex.dims, rev.dims) << name;
      EXPECT_EQ(lex.char_dims, rev.char_dims) << name;
    }
  }
}

TEST(Quotient, ResourceGuardReportsCompletedDegree) {
  try {
    quotient_ranks(fixture("commutator_q17"), 6, Grading::kStandard, 1, MonomialOrder::kLex, 100);
    FAIL() << "expected the guard to trip";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.completed_degree(), 4);  // 3^5 = 243 monomials at degree 5
  }
}

TEST(Quotient, EnvironmentOverridesBudget) {
  setenv("GOCHA_MAX_MONOMIALS", "50", 1);
  EXPECT_EQ(monomial_budget(), 50);
  EXPECT_THROW(quotient_ranks(fixture("commutator_q17"), 4, Grading::kStandard), ResourceError);
  unsetenv("GOCHA_MAX_MONOMIALS");
  EXPECT_EQ(monomial_budget(), kDefaultMaxMonomials);
}

TEST(Quotient, DeclaredOnlyRelationsAreRejected) {
  EXPECT_THROW(quotient_ranks(fixture("fab_quadratic_degrees"), 3, Grading::kStandard), UsageError);
}

TEST(Crosscheck, FixturesMatch) {
  for (const auto& [name, N] : std::vector<std::pair<std::string, int>>{
           {"commutator_q17", 5}, {"two_relation_q5", 5}, {"free2_mixed", 8}, {"free_chi0_d3", 5}}) {
    const PresentationSpec s = fixture(name);
    for (const RingMode& mode : {RingMode::zp(s.p), RingMode::fp(s.p)}) {
      const CrosscheckReport r = crosscheck(s, N, mode);
      for (const auto& e : r.entries) {
        EXPECT_TRUE(e.match) << name << " " << e.check << " n=" << e.degree << " char="
                             << e.char_index << " expected " << e.expected << " got " << e.actual;
      }
      EXPECT_FALSE(r.first_mismatch_degree().has_value());
    }
  }
}

TEST(Crosscheck, NegativeControlFlagsFirstDivergence) {
  const CrosscheckReport r = crosscheck(fixture("negative_control"), 5, RingMode::zp());
  EXPECT_FALSE(r.all_match());
  ASSERT_TRUE(r.first_mismatch_degree().has_value());
  EXPECT_EQ(*r.first_mismatch_degree(), 2);
}
