#include <gtest/gtest.h>

#include <random>

#include "bandforge/band.hpp"
#include "support/oracle.hpp"
#include "support/word_gen.hpp"

using namespace bandforge;

namespace {

  BraidWord word(std::size_t n, std::vector<BandLetter> letters) {
    return BraidWord(n, std::move(letters));
  }

}  // namespace

TEST(Parse, DescendingWordOfDelta) {
  auto const w = parse_word("a(3,4) a(2,3) a(1,2)", 4);
  EXPECT_EQ(w, word(4, {{4, 3}, {3, 2}, {2, 1}}));
  EXPECT_EQ(w, delta_word(4));
  EXPECT_EQ(parse_word("a3 a2 a1", 4), w);
  EXPECT_EQ(parse_word("d", 4), w);
}

TEST(Parse, EmptyIsIdentity) {
  auto const w = parse_word("", 4);
  EXPECT_TRUE(w.empty());
  EXPECT_EQ(w.strands(), 4u);
  EXPECT_TRUE(parse_word("   ", 4).empty());
  EXPECT_TRUE(parse_word("e", 4).empty());
}

TEST(Parse, PowersExpand) {
  EXPECT_EQ(parse_word("b(1,3)^-1 a(1,2)^2", 4),
            word(4, {{3, 1, true}, {2, 1}, {2, 1}}));
  EXPECT_EQ(parse_word("A(1,2)^-2", 4), word(4, {{2, 1}, {2, 1}}));
  EXPECT_TRUE(parse_word("a1^0", 4).empty());
  EXPECT_EQ(parse_word("(a1 a2)^2", 4), parse_word("a1 a2 a1 a2", 4));
  EXPECT_EQ(parse_word("(a1 a2)^-1", 4), parse_word("A2 A1", 4));
  EXPECT_EQ(parse_word("D^2", 3), delta_word(3).inverse() * delta_word(3).inverse());
}

TEST(Parse, IndexOrderIsIrrelevant) {
  EXPECT_EQ(parse_word("a(4,1)", 4), parse_word("a(1,4)", 4));
  EXPECT_EQ(to_string(parse_word("a(4,1)", 4)), "a(1,4)");
}

TEST(Parse, ArtinTokens) {
  EXPECT_EQ(parse_word("s1 S2", 3), word(3, {{2, 1}, {3, 2, true}}));
}

TEST(Parse, AliasesNeedFourStrands) {
  EXPECT_THROW(parse_word("a1", 5), ParseError);
  EXPECT_EQ(parse_word("a4 b1 b2 B2", 4),
            word(4, {{4, 1}, {3, 1}, {4, 2}, {4, 2, true}}));
}

TEST(Parse, SyntaxErrorsCarryPosition) {
  try {
    parse_word("a(1,2) x", 4);
    FAIL();
  } catch (ParseError const& e) {
    EXPECT_EQ(e.position(), 7u);
  }
  try {
    parse_word("a(1,2", 4);
    FAIL();
  } catch (ParseError const& e) {
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_word("a(1,2)^", 4), ParseError);
  EXPECT_THROW(parse_word("(a1", 4), ParseError);
  EXPECT_THROW(parse_word("a1)", 4), ParseError);
}

TEST(Parse, OutOfRangeNamesToken) {
  try {
    parse_word("a(1,2) a(2,5)", 4);
    FAIL();
  } catch (RangeError const& e) {
    EXPECT_NE(std::string(e.what()).find("a(2,5)"), std::string::npos);
  }
  EXPECT_THROW(parse_word("s4", 4), RangeError);
  EXPECT_THROW(parse_word("a(2,2)", 4), RangeError);
  EXPECT_THROW(parse_word("a5", 4), RangeError);
}

TEST(Parse, RenderRoundTrip) {
  wordgen::Rng rng(1);
  for (std::size_t n : {2, 3, 4, 6}) {
    for (int i = 0; i < 200; ++i) {
      auto const w = wordgen::random_word(rng, n, i % 12);
      EXPECT_EQ(parse_word(to_string(w), n), w);
      EXPECT_EQ(parse_word(to_string(w, Notation::alias), n), w);
    }
  }
}

TEST(Artin, AdjacentBands) {
  EXPECT_EQ(artin_to_band({{1, false}, {2, false}}, 3), word(3, {{2, 1}, {3, 2}}));
  EXPECT_TRUE(artin_to_band({}, 3).empty());
  EXPECT_THROW(artin_to_band({{3, false}}, 3), RangeError);
}

TEST(Artin, KnotSevenTwoWord) {
  auto const w = artin_to_band({{1, false},
                                {1, false},
                                {1, false},
                                {2, false},
                                {1, true},
                                {2, false},
                                {3, false},
                                {2, true},
                                {3, false}},
                               4);
  EXPECT_EQ(w, parse_word("a1 a1 a1 a2 A1 a2 a3 A2 a3", 4));
}

TEST(Permutation, DeltaIsFourCycle) {
  EXPECT_EQ(permutation(delta_word(4)), (std::vector<std::size_t>{2, 3, 4, 1}));
}

TEST(Permutation, IdentityCases) {
  EXPECT_EQ(permutation(BraidWord(4)), (std::vector<std::size_t>{1, 2, 3, 4}));
  wordgen::Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    auto const w = wordgen::random_word(rng, 5, 8);
    EXPECT_EQ(permutation(w * w.inverse()), (std::vector<std::size_t>{1, 2, 3, 4, 5}));
  }
}

TEST(Permutation, IsHomomorphism) {
  wordgen::Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    auto const u  = wordgen::random_word(rng, 5, 6);
    auto const v  = wordgen::random_word(rng, 5, 6);
    auto const pu = permutation(u);
    auto const pv = permutation(v);
    auto const puv = permutation(u * v);
    for (std::size_t x = 0; x < 5; ++x) {
      EXPECT_EQ(puv[x], pv[pu[x] - 1]);
    }
  }
}

TEST(Permutation, RelationInvariant) {
  wordgen::Rng rng(4);
  for (int i = 0; i < 500; ++i) {
    auto const w = wordgen::random_word(rng, 5, 8);
    EXPECT_EQ(permutation(wordgen::random_rewrites(rng, w, 5)), permutation(w));
  }
}

TEST(Writhe, Examples) {
  EXPECT_EQ(writhe(delta_word(4)), 3);
  EXPECT_EQ(writhe(BraidWord(4)), 0);
  EXPECT_EQ(writhe(parse_word("D^2 (a3 a2)(a4 a3) a4 b1 b2", 4)), 1);
}

TEST(Writhe, RelationInvariantAndAdditive) {
  wordgen::Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    auto const w = wordgen::random_word(rng, 4, 8);
    auto const v = wordgen::random_word(rng, 4, 5);
    EXPECT_EQ(writhe(wordgen::random_rewrites(rng, w, 5)), writhe(w));
    EXPECT_EQ(writhe(free_reduce(w)), writhe(w));
    EXPECT_EQ(writhe(w * v), writhe(w) + writhe(v));
  }
}

TEST(BraidWord, MismatchedStrandsThrow) {
  EXPECT_THROW(delta_word(3) * delta_word(4), RangeError);
  EXPECT_THROW(BraidWord(3, {{4, 1}}), RangeError);
  EXPECT_THROW(BraidWord(0), RangeError);
}

TEST(BraidWord, FreeReduce) {
  EXPECT_EQ(free_reduce(parse_word("a1 a2 A2 A1 b1", 4)), parse_word("b1", 4));
}
