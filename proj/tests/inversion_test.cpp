#include <gtest/gtest.h>

#include "gocha/errors.hpp"
#include "gocha/inversion.hpp"
#include "roundtrip.hpp"
#include "support.hpp"

using namespace gocha;
using gocha::test::chars;
using gocha::test::poly;

namespace {

// Moebius by trial division.
int mobius_by_factoring(long n) {
  int sign = 1;
  for (long f = 2; f * f <= n; ++f) {
    if (n % f != 0) continue;
    n /= f;
    if (n % f == 0) return 0;
    sign = -sign;
  }
  return n > 1 ? -sign : sign;
}

EqSeries commutator_star(int trunc) {
  EqSeries star = EqSeries::constant(trunc, GroupRingElt::one(17));
  star[1] = -chars(17, {1, 2, 3});
  star[2] = chars(17, {3});
  return star;
}

}  // namespace

TEST(Mobius, Values) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(4), 0);
  EXPECT_EQ(mobius(30), -1);
  for (long n = 1; n <= 500; ++n) EXPECT_EQ(mobius(n), mobius_by_factoring(n)) << n;
  EXPECT_THROW(mobius(0), UsageError);
}

TEST(Inversion, ScalarWFromB) {
  const ScalarBTable b = b_table_from_series(ser_inv(poly({1, -3, 1}, 6)), Flavor::kScalar);
  EXPECT_EQ(w_from_b(b, 1), b.at(1));
  EXPECT_EQ(w_from_b(b, 2), 2);
  EXPECT_EQ(w_from_b(b, 3), 5);
}

TEST(Inversion, EquivariantWFromB) {
  const EqBTable b = b_table_from_series(ser_inv(commutator_star(4)), Flavor::kEquivariant);
  EXPECT_EQ(w_from_b(b, 2), chars(17, {4, 5}));
  EXPECT_EQ(w_from_b(b, 3), chars(17, {5, 6, 7, 7, 8}));
}

TEST(Inversion, EquivariantDegreeSharingFactorWithQIsUnsupported) {
  EqSeries p = EqSeries::constant(6, GroupRingElt::one(2));
  p[1] = -test::gre(2, {1, 1});
  const EqBTable b = b_table_from_series(ser_inv(p), Flavor::kEquivariant);
  EXPECT_THROW(w_from_b(b, 2), UnsupportedDegreeError);
  const EqBTable w = w_table(b);
  EXPECT_TRUE(w.has(3));
  EXPECT_FALSE(w.has(4));
}

TEST(Inversion, AFromWModes) {
  const EqBTable w = w_table(b_table_from_series(ser_inv(commutator_star(4)), Flavor::kEquivariant));
  const RankTable a = a_from_w(w, RingMode::zp(103));
  EXPECT_EQ(a.at(3), chars(17, {5, 6, 7, 7, 8}));
  EXPECT_EQ(a.at(1), chars(17, {1, 2, 3}));

  // Free group of rank 2 over F_3: a_3 = w_1 + w_3.
  const ScalarBTable wf = w_table(b_table_from_series(ser_inv(poly({1, -2}, 9)), Flavor::kScalar));
  const RankTable af = a_from_w(wf, RingMode::fp(3));
  EXPECT_EQ(af.total(3), 2 + 2);
  EXPECT_EQ(af.total(9), 2 + 2 + 56);
  EXPECT_EQ(af.total(2), 1);
}

TEST(Inversion, IntegralityIsEnforced) {
  ScalarBTable w;
  w.entries.emplace(1, make_rational(1, 2));
  EXPECT_THROW(a_from_w(w, RingMode::zp()), IntegralityError);
}

TEST(Inversion, BFromA) {
  RankTable a;
  a.mode = RingMode::zp(5);
  a.q = 2;
  a.set(1, 1, 1);
  const EqBTable b = b_from_a(a, 6);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(b.at(n), GroupRingElt::basis(2, n % 2, make_rational(1, n))) << n;
  }
  RankTable empty;
  empty.q = 3;
  for (const auto& [n, value] : b_from_a(empty, 5).entries) EXPECT_TRUE(value.is_zero()) << n;

  RankTable ex3;
  ex3.mode = RingMode::zp(103);
  ex3.q = 17;
  for (int i : {1, 2, 3}) ex3.set(1, i, 1);
  ex3.set(2, 4, 1);
  ex3.set(2, 5, 1);
  for (int i : {5, 6, 8}) ex3.set(3, i, 1);
  ex3.set(3, 7, 2);
  const EqBTable b3 = b_from_a(ex3, 3);
  EXPECT_EQ(b3.at(3), ser_log(ser_inv(commutator_star(3)))[3]);
}

TEST(Inversion, BFromAInvertsPipelineInFpMode) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const RankTable a = test::random_rank_table(rng, 3, RingMode::fp(2), 5, 2);
    const EqBTable b = b_from_a(a, 10);
    const EqBTable from_series = b_table_from_series(product_formula(a, 10), Flavor::kEquivariant);
    for (int n = 1; n <= 10; ++n) {
      if (gcd(n, 3) == 1) EXPECT_EQ(b.at(n), from_series.at(n)) << n;
    }
    const ScalarBTable bs = b_from_a_scalar(a, 10);
    const ScalarBTable ss = b_table_from_series(product_formula_scalar(a, 10), Flavor::kScalar);
    for (int n = 1; n <= 10; ++n) EXPECT_EQ(bs.at(n), ss.at(n)) << n;
  }
}

TEST(Inversion, Chi0Pipeline) {
  const Chi0Pipeline free3 = chi0_pipeline(ser_inv(poly({1, -3}, 6)), RingMode::zp());
  EXPECT_EQ(free3.b.at(2), make_rational(9, 2));
  EXPECT_EQ(free3.w.at(2), 3);
  EXPECT_EQ(free3.a.total(1), 3);

  const Chi0Pipeline fib = chi0_pipeline(ser_inv(poly({1, -1, -1}, 5)), RingMode::zp());
  const long lucas[] = {0, 1, 3, 4, 7, 11};
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(fib.b.at(n) * n, lucas[n]);
}

TEST(Inversion, Chi0WitnessesFreeWittCount) {
  // Without the factor m inside the sum, d = 2, n = 2 would give 1/2.
  const Chi0Pipeline free2 = chi0_pipeline(ser_inv(poly({1, -2}, 8)), RingMode::zp());
  const long witt[] = {0, 2, 1, 2, 3, 6, 9, 18, 30};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(free2.a.total(n), witt[n]) << n;
}

TEST(Inversion, FpStepIdentity) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const RankTable a0 = test::random_rank_table(rng, 1, RingMode::fp(2), 6, 3);
    const ScalarBTable w =
        w_table(b_table_from_series(product_formula_scalar(a0, 12), Flavor::kScalar));
    const RankTable a = a_from_w(w, RingMode::fp(2));
    for (int n = 2; n <= 12; n += 2) {
      EXPECT_EQ(a.total(n) - a.total(n / 2), w.at(n)) << n;
    }
  }
}

TEST(Inversion, ScalarShadowOfEquivariantTables) {
  std::mt19937 rng(13);
  for (int q : {2, 3, 5}) {
    const RankTable a = test::random_rank_table(rng, q, RingMode::zp(7), 4, 2);
    const EqSeries s = product_formula(a, 9);
    const EqBTable b = b_table_from_series(s, Flavor::kEquivariant);
    const ScalarBTable bs = b_table_from_series(augment_series(s), Flavor::kScalar);
    for (int n = 1; n <= 9; ++n) EXPECT_EQ(gr_augment(b.at(n)), bs.at(n));
    const EqBTable w = w_table(b);
    const ScalarBTable ws = w_table(bs);
    for (const auto& [n, value] : w.entries) EXPECT_EQ(gr_augment(value), ws.at(n)) << n;
  }
}

TEST(Inversion, RoundTripSmall) {
  const test::RoundTripOutcome r = test::round_trip_suite(99, 30);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Eigencheck, FibonacciSeries) {
  const ScalarBTable b = b_table_from_series(ser_inv(poly({1, -1, -1}, 40)), Flavor::kScalar);
  const EigencheckReport r = eigencheck_conditions(b, 17);
  bool saw19 = false;
  for (const auto& c : r.character_checks) {
    if (c.prime == 19) {
      saw19 = true;
      EXPECT_EQ(c.char_index, 2);
      EXPECT_TRUE(c.holds);
    }
  }
  EXPECT_TRUE(saw19);
  for (const auto& c : r.trivial_checks) EXPECT_TRUE(c.holds) << c.prime;
}

TEST(Eigencheck, EmptyTable) {
  const EigencheckReport r = eigencheck_conditions(ScalarBTable{}, 5);
  EXPECT_TRUE(r.character_checks.empty());
  EXPECT_TRUE(r.trivial_checks.empty());
}

TEST(Eigencheck, QuarticFab) {
  const ScalarBTable b = b_table_from_series(ser_inv(poly({1, -4, 0, 0, 4}, 24)), Flavor::kScalar);
  const EigencheckReport r = eigencheck_conditions(b, 2);
  EXPECT_FALSE(r.character_checks.empty());
  for (const auto& c : r.character_checks) {
    EXPECT_EQ(c.char_index, 1);
    EXPECT_EQ(c.holds, b.at(static_cast<int>(c.prime)) > b.at(1));
  }
}
