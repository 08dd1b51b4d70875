#include <gtest/gtest.h>

#include "gocha/errors.hpp"
#include "gocha/presentation.hpp"
#include "support.hpp"

using namespace gocha;
using gocha::test::chars;
using gocha::test::fixture;
using gocha::test::poly;

namespace {

const std::vector<Generator> kXYZ = {{"x", 1}, {"y", 2}, {"z", 3}};

std::string doc(const std::string& relations) {
  return R"({"p": 103, "q": 17, "generators": [{"name": "x", "char": 1},
            {"name": "y", "char": 2}, {"name": "z", "char": 3}], "relations": )" +
         relations + "}";
}

}  // namespace

TEST(Parse, BundledDocuments) {
  const PresentationSpec ex3 = fixture("commutator_q17");
  EXPECT_EQ(ex3.p, 103);
  EXPECT_EQ(ex3.q, 17);
  EXPECT_EQ(ex3.generators.size(), 3u);
  EXPECT_EQ(ex3.relations.size(), 1u);
  EXPECT_TRUE(ex3.warnings.empty());
  EXPECT_TRUE(fixture("free2_mixed").is_free());
  const PresentationSpec intro = fixture("two_relation_q5");
  EXPECT_EQ(intro.relations.size(), 2u);
  EXPECT_EQ(intro.generators_with_char(2), 1);
}

TEST(Parse, Rejections) {
  EXPECT_THROW(parse_presentation("{"), ParseError);
  EXPECT_THROW(parse_presentation(R"({"p": 9, "q": 2, "generators": [], "relations": []})"),
               ParseError);
  EXPECT_THROW(parse_presentation(doc(R"([{"word": "[x,w]"}])")), ParseError);
  EXPECT_THROW(parse_presentation(doc(R"([{"word": "[x,y"}])")), ParseError);
  EXPECT_THROW(parse_presentation(doc(R"([{"char": 1, "deg": 1, "chi0_deg": 1}])")), ParseError);
  EXPECT_THROW(parse_presentation(doc(R"([{"char": 1, "deg": 2}])")), ParseError);
  EXPECT_THROW(parse_presentation(R"({"p": 5, "q": 2, "generators": [{"name": "a", "char": 0},
      {"name": "a", "char": 1}], "relations": []})"),
               ParseError);
  EXPECT_THROW(parse_presentation(R"({"p": 5, "q": 2, "generators": [{"name": "a", "char": 2}],
      "relations": []})"),
               ParseError);
}

TEST(Parse, OrderNotDividingPMinusOneWarns) {
  const PresentationSpec s = parse_presentation(
      R"({"p": 5, "q": 3, "generators": [{"name": "a", "char": 1}], "relations": []})");
  EXPECT_FALSE(s.warnings.empty());
}

TEST(Parse, WordErrorsCarryPosition) {
  try {
    parse_word("[x,y]*[x,", kXYZ);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("column 10"), std::string::npos) << e.what();
  }
}

TEST(Parse, WordGrammar) {
  const CommWord w = parse_word("([x,y]^2 * [x,z])^-1", kXYZ);
  EXPECT_EQ(w.kind, CommWord::Kind::kPower);
  EXPECT_EQ(w.exponent, -1);
  EXPECT_EQ(w.nominal_length(), 4);
  EXPECT_EQ(parse_word("[[x,y],z]", kXYZ).to_string({"x", "y", "z"}), "[[x,y],z]");
}

TEST(Magnus, Commutator) {
  const NCPoly e = magnus_expand(parse_word("[x,y]", kXYZ), 3, 3, RingMode::zp());
  EXPECT_EQ(e.min_degree(), 2);
  EXPECT_EQ(e.terms().at({0, 1}), 1);
  EXPECT_EQ(e.terms().at({1, 0}), -1);
  for (const auto& [word, c] : e.terms()) {
    EXPECT_GE(word.size(), 2u);
    EXPECT_NE(c, 0);
  }
}

TEST(Magnus, PowerInFpMode) {
  const std::vector<Generator> one = {{"x", 1}};
  const NCPoly fp = magnus_expand(parse_word("x^5", one), 1, 7, RingMode::fp(5));
  EXPECT_EQ(fp.min_degree(), 5);
  const NCPoly zp = magnus_expand(parse_word("x^5", one), 1, 7, RingMode::zp());
  EXPECT_EQ(zp.min_degree(), 1);
  EXPECT_EQ(zp.terms().at({0, 0}), 10);
}

TEST(Magnus, ProductOfCommutators) {
  const NCPoly e = magnus_expand(parse_word("[x,y]*[x,z]", kXYZ), 3, 2, RingMode::zp());
  EXPECT_EQ(e.terms().size(), 4u);
  EXPECT_EQ(e.terms().at({0, 2}), 1);
  EXPECT_EQ(e.terms().at({2, 0}), -1);
}

TEST(Magnus, InverseIsGeometricSeries) {
  const std::vector<Generator> one = {{"x", 1}};
  const NCPoly e = magnus_expand(parse_word("x^-1", one), 1, 5, RingMode::zp());
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(e.terms().at(NCPoly::Word(k, 0)), k % 2 ? -1 : 1);
}

TEST(RelationDegrees, FromWords) {
  const PresentationSpec ex3 = fixture("commutator_q17");
  EXPECT_EQ(relation_degrees(ex3.relations[0], ex3, RingMode::zp()), (RelationDegrees{3, 2, 3}));
  const PresentationSpec intro = fixture("two_relation_q5");
  EXPECT_EQ(relation_degrees(intro.relations[0], intro, RingMode::zp()),
            (RelationDegrees{3, 2, 3}));
  EXPECT_EQ(relation_degrees(intro.relations[1], intro, RingMode::zp()),
            (RelationDegrees{4, 2, 4}));

  const PresentationSpec power = parse_presentation(
      R"({"p": 5, "q": 3, "generators": [{"name": "x", "char": 2}],
          "relations": [{"word": "x^5"}]})");
  EXPECT_EQ(relation_degrees(power.relations[0], power, RingMode::fp(5)),
            (RelationDegrees{1, 5, 10}));
}

TEST(RelationDegrees, IndependentOfMode) {
  for (const char* name : {"commutator_q17", "two_relation_q5"}) {
    const PresentationSpec s = fixture(name);
    for (const auto& rel : s.relations) {
      EXPECT_EQ(relation_degrees(rel, s, RingMode::fp(s.p)), relation_degrees(rel, s, RingMode::zp()));
    }
  }
}

TEST(RelationDegrees, CharacterIsProductOfLeaves) {
  const PresentationSpec s = parse_presentation(
      R"({"p": 11, "q": 5, "generators": [{"name": "a", "char": 1}, {"name": "b", "char": 2},
          {"name": "c", "char": 4}],
          "relations": [{"word": "[[a,b],c]"}, {"word": "[[a,c],[b,c]]"}, {"word": "[a,b]^3"}]})");
  EXPECT_EQ(relation_degrees(s.relations[0], s, RingMode::zp()).char_index, (1 + 2 + 4) % 5);
  EXPECT_EQ(relation_degrees(s.relations[1], s, RingMode::zp()).char_index, (1 + 4 + 2 + 4) % 5);
  EXPECT_EQ(relation_degrees(s.relations[2], s, RingMode::zp()).char_index, 3);
  EXPECT_EQ(relation_degrees(s.relations[1], s, RingMode::zp()).deg, 4);
}

TEST(RelationDegrees, HeterogeneousLeadingFormIsRejected) {
  const PresentationSpec s = parse_presentation(doc(R"([{"word": "[x,y]*[x,z]"}])"));
  EXPECT_THROW(relation_degrees(s.relations[0], s, RingMode::zp()), HeterogeneityError);
}

TEST(RelationDegrees, TrivialWordIsInconclusive) {
  const PresentationSpec s = parse_presentation(doc(R"([{"word": "[x,x]"}])"));
  EXPECT_THROW(relation_degrees(s.relations[0], s, RingMode::zp()), InconclusiveError);
}

TEST(EulerPolys, CommutatorQ17) {
  const EulerData e = euler_polys(fixture("commutator_q17"), RingMode::zp());
  EXPECT_EQ(e.chi_eul, poly({1, -3, 1}, 2));
  EXPECT_EQ(e.chi_eul_chi0, poly({1, -1, -1}, 2));
  EXPECT_EQ(e.chi_eul_star[1], -chars(17, {1, 2, 3}));
  EXPECT_EQ(e.chi_eul_star[2], chars(17, {3}));
  EXPECT_EQ(e.deg, 2);
  EXPECT_EQ(e.deg_chi0, 2);
}

TEST(EulerPolys, FreeAndTwoRelationQ5) {
  const PresentationSpec free = parse_presentation(
      R"({"p": 5, "q": 1, "generators": [{"name": "a", "char": 0}, {"name": "b", "char": 0},
          {"name": "c", "char": 0}], "relations": []})");
  EXPECT_EQ(euler_polys(free, RingMode::zp()).chi_eul, poly({1, -3}, 1));
  EXPECT_EQ(euler_polys(fixture("two_relation_q5"), RingMode::zp()).chi_eul_chi0, poly({1, -1, -1, 0, 1}, 4));
}

TEST(GochaSeries, CommutatorQ17) {
  const GochaSeries g = gocha_from_presentation(fixture("commutator_q17"), 10, RingMode::zp());
  EXPECT_EQ(test::as_longs(g.gocha), test::recurrence_inverse({1, -3, 1}, 10));
  EXPECT_EQ(test::as_longs(g.gocha_chi0), test::recurrence_inverse({1, -1, -1}, 10));
  EXPECT_EQ(augment_series(g.gocha_star), g.gocha);
}

TEST(GochaSeries, TrivialGroup) {
  const PresentationSpec s =
      parse_presentation(R"({"p": 3, "q": 2, "generators": [], "relations": []})");
  const GochaSeries g = gocha_from_presentation(s, 6, RingMode::zp());
  EXPECT_EQ(g.gocha, Series::constant(6, Rational(1)));
  EXPECT_EQ(g.gocha_chi0, Series::constant(6, Rational(1)));
  EXPECT_EQ(g.gocha_star, EqSeries::constant(6, GroupRingElt::one(2)));
}

TEST(GochaSeries, FabByDegrees) {
  const GochaSeries g = gocha_from_presentation(fixture("fab_quadratic_degrees"), 8, RingMode::fp(3));
  EqSeries star = EqSeries::constant(8, GroupRingElt::one(2));
  star[1] = -test::gre(2, {6, 1});
  star[2] = test::gre(2, {6, 1});
  EXPECT_EQ(g.gocha_star, ser_inv(star));
  EXPECT_EQ(g.gocha_chi0, ser_inv(poly({1, -1, -5, 0, 6}, 8)));
}

TEST(GochaSeries, NegativeCoefficientIsNonMildEvidence) {
  const PresentationSpec s = parse_presentation(
      R"({"p": 5, "q": 1, "generators": [{"name": "a", "char": 0}],
          "relations": [{"char": 0, "deg": 2, "chi0_deg": 2}, {"char": 0, "deg": 2, "chi0_deg": 2}]})");
  EXPECT_THROW(gocha_from_presentation(s, 4, RingMode::zp()), NonMildEvidenceError);
}

TEST(GochaSeries, ModesAgreeOnFixtures) {
  for (const char* name : {"commutator_q17", "two_relation_q5", "free2_mixed", "free_chi0_d3", "fab_quadratic_degrees"}) {
    const PresentationSpec s = fixture(name);
    const GochaSeries fp = gocha_from_presentation(s, 12, RingMode::fp(s.p));
    const GochaSeries zp = gocha_from_presentation(s, 12, RingMode::zp(s.p));
    EXPECT_EQ(fp.gocha, zp.gocha) << name;
    EXPECT_EQ(fp.gocha_star, zp.gocha_star) << name;
    EXPECT_EQ(fp.gocha_chi0, zp.gocha_chi0) << name;
  }
}

TEST(GochaSeries, Chi0SupportFollowsWeight) {
  for (const char* name : {"commutator_q17", "two_relation_q5", "free2_mixed"}) {
    const PresentationSpec s = fixture(name);
    const EulerData e = euler_polys(s, RingMode::zp());
    // The chi0-weight of a relation fixes its character.
    for (const auto& rel : e.relations) EXPECT_EQ(rel.chi0_deg % s.q, rel.char_index % s.q) << name;
  }
}

TEST(CommFamily, Checks) {
  EXPECT_TRUE(validate_comm_family(fixture("commutator_q17")).all_pass());
  EXPECT_TRUE(validate_comm_family(fixture("two_relation_q5")).all_pass());
  const PresentationSpec bad = parse_presentation(doc(R"([{"word": "x*y"}])"));
  const CommFamilyReport r = validate_comm_family(bad);
  EXPECT_FALSE(r.all_pass());
  EXPECT_FALSE(r.entries.at(0).message.empty());
}
