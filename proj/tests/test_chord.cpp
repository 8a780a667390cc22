#include <gtest/gtest.h>

#include <variant>
#include <vector>

#include "jh/chord.hpp"
#include "jh/error.hpp"
#include "support/properties.hpp"

namespace {

using jh::Chord;
using jh::Natural;
using jh::Rational;

Chord chord(std::initializer_list<Natural> v) { return Chord(std::vector<Natural>(v)); }

TEST(Rational, ReducesToLowestTerms) {
  const Rational r(28, 30);
  EXPECT_EQ(r.numerator(), Natural{14});
  EXPECT_EQ(r.denominator(), Natural{15});
  EXPECT_EQ(Rational(6, 3).to_string(), "2/1");
  EXPECT_THROW(Rational(0, 1), jh::DomainError);
  EXPECT_THROW(Rational(1, 0), jh::DomainError);
}

TEST(Rational, OrderingAndProduct) {
  EXPECT_LT(Rational(6, 5), Rational(5, 4));
  EXPECT_GT(Rational(9, 7), Rational(5, 4));
  EXPECT_EQ(Rational(5, 4) * Rational(6, 5), Rational(3, 2));
}

TEST(Cents, Examples) {
  EXPECT_NEAR(jh::cents(Rational(5, 4)), 386.31, 0.005);
  EXPECT_NEAR(jh::cents(Rational(2, 1)), 1200.0, 1e-12);
  EXPECT_NEAR(jh::cents(Rational(3, 2)), 701.96, 0.005);
}

TEST(Chord, RejectsInvalidNotes) {
  EXPECT_THROW(Chord({}), jh::DomainError);
  EXPECT_THROW(chord({0, 1}), jh::DomainError);
  EXPECT_THROW(chord({6, 5, 4}), jh::DomainError);
  EXPECT_THROW(chord({4, 4, 5}), jh::DomainError);
}

TEST(Chord, ScaledIsChecked) {
  EXPECT_EQ(chord({4, 5, 6}).scaled(2), chord({8, 10, 12}));
  EXPECT_THROW(chord({1, jh::kNaturalMax / 2 + 1}).scaled(2), jh::RangeError);
}

TEST(ParseChord, IntegerList) {
  const auto parsed = jh::parse_chord("4:5:6");
  ASSERT_TRUE(std::holds_alternative<Chord>(parsed));
  EXPECT_EQ(std::get<Chord>(parsed), chord({4, 5, 6}));
  EXPECT_EQ(std::get<Chord>(jh::parse_chord("4, 5 ,6")), chord({4, 5, 6}));
}

TEST(ParseChord, FractionsGiveRationalChord) {
  const auto parsed = jh::parse_chord("1/1,5/4,3/2,16/9");
  ASSERT_TRUE(std::holds_alternative<jh::RationalChord>(parsed));
  const auto& rc = std::get<jh::RationalChord>(parsed);
  EXPECT_EQ(rc.ratios, (std::vector<Rational>{{1, 1}, {5, 4}, {3, 2}, {16, 9}}));
  EXPECT_FALSE(rc.base_label.has_value());
}

TEST(ParseChord, Errors) {
  EXPECT_THROW(jh::parse_chord("6:5:4"), jh::ParseError);
  EXPECT_THROW(jh::parse_chord("4:4"), jh::ParseError);
  EXPECT_THROW(jh::parse_chord(""), jh::ParseError);
  EXPECT_THROW(jh::parse_chord("4:x:6"), jh::ParseError);
  EXPECT_THROW(jh::parse_chord("0:1"), jh::ParseError);
  EXPECT_THROW(jh::parse_chord("-1:2"), jh::ParseError);
  EXPECT_THROW(jh::parse_chord("1/0,2"), jh::ParseError);
  EXPECT_THROW(jh::parse_chord("4::6"), jh::ParseError);
  EXPECT_THROW(jh::parse_chord("3/2,1/1"), jh::ParseError);
}

TEST(ToIntegerChord, Examples) {
  EXPECT_EQ(jh::to_integer_chord({{Rational(1), Rational(5, 4), Rational(3, 2)}}), chord({4, 5, 6}));
  EXPECT_EQ(jh::to_integer_chord({{Rational(1), Rational(5, 4), Rational(3, 2), Rational(16, 9)}}),
            chord({36, 45, 54, 64}));
  EXPECT_EQ(jh::to_integer_chord({{Rational(2), Rational(5, 2), Rational(3)}}), chord({4, 5, 6}));
}

TEST(ToIntegerChord, BaseLabelIsInert) {
  const jh::RationalChord labelled({Rational(1), Rational(5, 4), Rational(3, 2)}, "110 Hz");
  EXPECT_EQ(jh::to_integer_chord(labelled), chord({4, 5, 6}));
}

TEST(ToIntegerChord, InvariantUnderRationalTransposition) {
  const std::vector<Rational> base{{1, 1}, {7, 6}, {4, 3}, {3, 2}, {7, 4}};
  const Chord want = jh::to_integer_chord({base});
  for (const Rational t : {Rational(3, 7), Rational(11, 5), Rational(2)}) {
    std::vector<Rational> moved;
    for (const auto& r : base) moved.push_back(r * t);
    EXPECT_EQ(jh::to_integer_chord({moved}), want) << t.to_string();
  }
}

TEST(ParseIntegerChord, ConvertsFractions) {
  EXPECT_EQ(jh::parse_integer_chord("1/1,5/4,3/2,9/5"), chord({20, 25, 30, 36}));
  EXPECT_EQ(jh::parse_integer_chord("8:10:12"), chord({8, 10, 12}));
}

TEST(Normalize, Examples) {
  EXPECT_EQ(jh::normalize(chord({8, 10, 12})), chord({4, 5, 6}));
  EXPECT_EQ(jh::normalize(chord({4, 5, 6})), chord({4, 5, 6}));
  EXPECT_EQ(jh::normalize(chord({15, 20})), chord({3, 4}));
  EXPECT_EQ(jh::normalize(chord({7})), chord({1}));
}

TEST(Normalize, IdempotentOnRandomChords) {
  jh::testing::ChordGen gen(11);
  for (int i = 0; i < 1000; ++i) {
    const Chord c = gen.chord_between(1, 7).scaled(gen.uniform(1, 12));
    const Chord once = jh::normalize(c);
    ASSERT_EQ(jh::normalize(once), once);
  }
}

TEST(Render, ParseIsLeftInverse) {
  jh::testing::ChordGen gen(12);
  for (int i = 0; i < 1000; ++i) {
    const Chord c = gen.chord_between(1, 8);
    const std::string text = jh::render(c);
    ASSERT_EQ(std::get<Chord>(jh::parse_chord(text)), c) << text;
  }
  EXPECT_EQ(jh::render(chord({4, 5, 6})), "4:5:6");
}

TEST(WeightedChord, Validation) {
  EXPECT_NO_THROW(jh::WeightedChord(chord({4, 5, 6}), {1, 0, 0}));
  EXPECT_THROW(jh::WeightedChord(chord({4, 5, 6}), {1, 1}), jh::DomainError);
  EXPECT_THROW(jh::WeightedChord(chord({4, 5, 6}), {0, 0, 0}), jh::DomainError);
  EXPECT_THROW(jh::WeightedChord(chord({4, 5, 6}), {1, -1, 1}), jh::DomainError);
}

TEST(ParseRealList, Examples) {
  EXPECT_EQ(jh::parse_real_list("10,1,1"), (std::vector<double>{10, 1, 1}));
  EXPECT_EQ(jh::parse_real_list("0.5:0.25"), (std::vector<double>{0.5, 0.25}));
  EXPECT_THROW(jh::parse_real_list("1,,2"), jh::ParseError);
  EXPECT_THROW(jh::parse_real_list("1,abc"), jh::ParseError);
  EXPECT_THROW(jh::parse_real_list("1,-2"), jh::ParseError);
}

}  // namespace
