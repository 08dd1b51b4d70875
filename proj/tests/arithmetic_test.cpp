#include <gtest/gtest.h>

#include "gocha/arithmetic.hpp"
#include "gocha/errors.hpp"
#include "support.hpp"

using namespace gocha;
using gocha::test::gre;
using gocha::test::poly;

namespace {

bool is_square_mod(std::int64_t a, std::int64_t prime) {
  a = floor_mod(a, prime);
  for (std::int64_t x = 0; x < prime; ++x) {
    if (x * x % prime == a) return true;
  }
  return false;
}

FabInput input(std::int64_t d, std::vector<std::int64_t> primes) {
  FabInput in;
  in.p = 3;
  in.d = d;
  in.primes = std::move(primes);
  in.assert_mild = true;
  return in;
}

}  // namespace

TEST(Splitting, KnownClassifications) {
  for (std::int64_t prime : {7, 19, 13, 31, 337}) {
    EXPECT_EQ(kronecker_split(163, prime), SplitStatus::kInert) << prime;
  }
  EXPECT_EQ(kronecker_split(163, 43), SplitStatus::kSplit);
  EXPECT_EQ(kronecker_split(1, 229), SplitStatus::kSplit);
  EXPECT_EQ(kronecker_split(1, 241), SplitStatus::kSplit);
  for (std::int64_t prime : {61, 223, 229}) EXPECT_EQ(kronecker_split(5, prime), SplitStatus::kSplit);
  EXPECT_EQ(kronecker_split(5, 5), SplitStatus::kRamified);
  EXPECT_EQ(kronecker_split(1, 2), SplitStatus::kRamified);
}

TEST(Splitting, AgreesWithSquaresModPrime) {
  for (std::int64_t d : {1, 2, 3, 5, 7, 163}) {
    const std::int64_t disc = field_discriminant(d);
    for (std::int64_t prime = 3; prime < 400; prime += 2) {
      if (!is_prime(prime) || disc % prime == 0) continue;
      const SplitStatus expected =
          is_square_mod(disc, prime) ? SplitStatus::kSplit : SplitStatus::kInert;
      EXPECT_EQ(kronecker_split(d, prime), expected) << d << " " << prime;
    }
  }
}

TEST(Splitting, CompositeModulusWarns) {
  std::vector<std::string> warnings;
  kronecker_split(5, 481, &warnings);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(Discriminant, Conventions) {
  EXPECT_EQ(field_discriminant(163), -163);
  EXPECT_EQ(field_discriminant(1), -4);
  EXPECT_EQ(field_discriminant(5), -20);
}

TEST(Tame, Examples) {
  EXPECT_TRUE(tame_check(3, 7, SplitStatus::kInert));
  EXPECT_TRUE(tame_check(3, 43, SplitStatus::kSplit));
  EXPECT_FALSE(tame_check(3, 5, SplitStatus::kSplit));
  for (std::int64_t prime = 5; prime < 500; ++prime) {
    if (is_prime(prime)) EXPECT_TRUE(tame_check(3, prime, SplitStatus::kInert)) << prime;
  }
}

TEST(Linking, ZeroExactlyUnderCriterion) {
  const std::vector<std::int64_t> primes = {7, 19, 13, 31, 337, 43, 61, 223, 229, 241};
  const auto m = linking_matrix(3, primes);
  for (size_t i = 0; i < primes.size(); ++i) {
    EXPECT_EQ(m[i][i], 0);
    for (size_t j = 0; j < primes.size(); ++j) {
      if (i == j) continue;
      std::int64_t power = 1;
      for (std::int64_t k = 0; k < (primes[j] - 1) / 3; ++k) power = power * primes[i] % primes[j];
      EXPECT_EQ(m[i][j] == 0, power == 1) << primes[i] << " " << primes[j];
      EXPECT_GE(m[i][j], 0);
      EXPECT_LT(m[i][j], 3);
    }
  }
  EXPECT_EQ(mod_pow(7, 4, 13), 9);
  EXPECT_NE(linking_matrix(3, {7, 13})[0][1], 0);
  EXPECT_NE(linking_matrix(3, {19, 7})[0][1], 0);
  EXPECT_THROW(linking_matrix(3, {7, 11}), DomainError);
}

TEST(Linking, PrimitiveRoot) {
  EXPECT_EQ(smallest_primitive_root(7), 3);
  EXPECT_EQ(smallest_primitive_root(13), 2);
  EXPECT_EQ(smallest_primitive_root(43), 3);
}

TEST(FabSeries, KnownExamples) {
  const FabSeries intro = fab_series(5, 1, 8);
  EXPECT_EQ(intro.chi_eul_star[1], -gre(2, {6, 1}));
  EXPECT_EQ(intro.chi_eul_star[2], gre(2, {6, 1}));
  EXPECT_EQ(intro.chi_eul_chi0, poly({1, -1, -5, 0, 6}, 4));
  EXPECT_EQ(intro.gocha_chi0, ser_inv(poly({1, -1, -5, 0, 6}, 8)));

  const FabSeries one = fab_series(0, 2, 8);
  EXPECT_EQ(one.chi_eul_star[1], -gre(2, {2, 2}));
  EXPECT_EQ(one.chi_eul_chi0, poly({1, -2, 0, 0, 2}, 4));

  const FabSeries none = fab_series(0, 0, 5);
  EXPECT_EQ(none.gocha_chi0, Series::constant(5, Rational(1)));
  EXPECT_EQ(none.gocha_star, EqSeries::constant(5, GroupRingElt::one(2)));
  EXPECT_THROW(fab_series(-1, 0, 3), DomainError);
}

TEST(FabSeries, AugmentedDenominator) {
  for (int i = 0; i <= 4; ++i) {
    for (int s = 0; s <= 4; ++s) {
      const FabSeries f = fab_series(i, s, 6);
      EXPECT_LE(f.chi_eul_chi0.degree(), 4);
      EXPECT_EQ(augment_series(f.chi_eul_star), poly({1, -(i + 2 * s), i + 2 * s}, 2));
    }
  }
}

TEST(Koch, Counts) {
  const PresentationSpec intro = koch_presentation(3, 163, {7, 19, 13, 31, 337, 43});
  EXPECT_EQ(intro.generators_with_char(0), 6);
  EXPECT_EQ(intro.generators_with_char(1), 1);
  const PresentationSpec inert = koch_presentation(3, 163, {31, 19, 13, 337, 7});
  EXPECT_EQ(inert.generators_with_char(1), 0);
  const GochaSeries g = gocha_from_presentation(inert, 6, RingMode::fp(3));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(g.gocha_star[n][1], 0);
  const PresentationSpec split = koch_presentation(3, 5, {61, 223, 229, 481});
  EXPECT_EQ(split.generators_with_char(0), 4);
  EXPECT_EQ(split.generators_with_char(1), 4);
  EXPECT_THROW(koch_presentation(3, 1, {5}), DomainError);
}

TEST(Fab, PipelinePathsAgree) {
  for (const FabInput& in : {input(163, {7, 19, 13, 31, 337, 43}), input(1, {229, 241}),
                             input(5, {61, 223, 229, 481}), input(163, {31, 19, 13, 337, 7}),
                             input(163, {})}) {
    const FabResult r = run_fab(in, 12);
    EXPECT_TRUE(r.paths_agree);
    EXPECT_EQ(r.series.gocha_star, fab_series(r.inert_count, r.split_count, 12).gocha_star);
  }
  const FabResult intro = run_fab(input(163, {7, 19, 13, 31, 337, 43}), 8);
  EXPECT_EQ(intro.inert_count, 5);
  EXPECT_EQ(intro.split_count, 1);
  EXPECT_TRUE(intro.warnings.empty());
}

TEST(Fab, ReferenceMismatchIsFlagged) {
  FabInput in = input(5, {61, 223, 229, 481});
  in.reference_star = std::vector<std::vector<long>>{{1, 0}, {-4, -4}, {0, 4}};
  const FabResult r = run_fab(in, 8);
  EXPECT_EQ(r.split_count, 4);
  EXPECT_EQ(r.inert_count, 0);
  bool flagged = false;
  for (const auto& w : r.warnings) flagged |= w.find("reference gocha*") != std::string::npos;
  EXPECT_TRUE(flagged);

  in.reference_star = std::vector<std::vector<long>>{{1, 0}, {-4, -4}, {4, 4}};
  in.reference_chi0 = std::vector<long>{1, -4, 0, 0, 4};
  for (const auto& w : run_fab(in, 8).warnings) EXPECT_EQ(w.find("reference"), std::string::npos);
}

TEST(Fab, NonTamePlaceIsDomainError) {
  EXPECT_THROW(run_fab(input(1, {5}), 6), DomainError);
}

TEST(Fab, ParseInput) {
  const FabInput in = parse_fab_input(test::fixture_text("arithmetic/gaussian_composite.json"));
  EXPECT_EQ(in.d, 5);
  EXPECT_EQ(in.primes.size(), 4u);
  ASSERT_TRUE(in.reference_star);
  EXPECT_EQ((*in.reference_star)[2][1], 4);
  EXPECT_THROW(parse_fab_input(R"({"p": 3, "primes": []})"), ParseError);
}
