#include <gtest/gtest.h>

#include "wordlogic/words.hpp"

using namespace wordlogic;

namespace {
const Alphabet ab("ab");
}

TEST(Alphabet, Validation) {
  EXPECT_THROW(Alphabet(""), Error);
  EXPECT_THROW(Alphabet("aa"), Error);
  EXPECT_THROW(Alphabet("a|"), Error);
  EXPECT_THROW(Alphabet("abcdefghijklmnopq"), Error);
  EXPECT_EQ(Alphabet::parse_declaration("alphabet abc").letters(), "abc");
  EXPECT_THROW(Alphabet::parse_declaration("letters abc"), ParseError);
  EXPECT_THROW(ab.check_word("abc"), Error);
}

TEST(LetterSet, FormatAndParse) {
  LetterSet s = LetterSet::parse("{a,b}", ab);
  EXPECT_EQ(s.to_string(ab), "{a,b}");
  EXPECT_EQ(LetterSet::parse("{ab}", ab), s);
  EXPECT_EQ(LetterSet::parse("{}", ab).to_string(ab), "{}");
  EXPECT_THROW(LetterSet::parse("{c}", ab), Error);
  Profile p = parse_profile("{a}|{}|{a,b}", ab);
  EXPECT_EQ(format_profile(p, ab), "{a}|{}|{a,b}");
}

TEST(Content, Positions) {
  EXPECT_EQ(content(ab, "aba", "a"), (std::vector<Tuple>{{0}, {2}}));
  EXPECT_TRUE(content(ab, "", "a").empty());
  auto aa = content(ab, "bab", "aa");
  ASSERT_EQ(aa.size(), 1u);
  EXPECT_EQ(aa[0], (Tuple{1, 1}));
  EXPECT_TRUE(SetExpr::diagonal().contains(aa[0]));
}

TEST(Content, OnSets) {
  EXPECT_EQ(content_on("ababb", SetExpr::diagonal()), (std::set<std::string>{"aa", "bb"}));
  EXPECT_TRUE(content_on("", SetExpr::less()).empty());
  EXPECT_TRUE(content_on(ab, "", UPSet::all()).empty());
  EXPECT_EQ(content_on(ab, "ab", UPSet::residue(0, 2)).to_string(ab), "{a}");
}

TEST(Profile, Colourings) {
  Colouring parity({UPSet::residue(0, 2), UPSet::residue(1, 2)});
  EXPECT_EQ(format_profile(profile(ab, "ab", parity), ab), "{a}|{b}");
  EXPECT_EQ(format_profile(profile(ab, "", parity), ab), "{}|{}");
  auto window = profile("ababb", WindowColouring::comparisons(5));
  std::set<std::string> all2{"aa", "ab", "ba", "bb"};
  EXPECT_EQ(window, (std::vector<std::set<std::string>>{all2, {"aa", "bb"}, all2}));
  EXPECT_THROW(profile("ababb", WindowColouring::comparisons(4)), Error);
}

TEST(Profile, TableVersionAgrees) {
  Colouring q = Colouring::threshold_residue(2, 3);
  auto colours = colour_table(q, 8);
  for_each_word(ab, 8, [&](const Word& w) { ASSERT_EQ(profile(ab, w, colours, q.size()), profile(ab, w, q)); });
}

TEST(ForEachWord, ShortlexOrder) {
  std::vector<Word> seen;
  for_each_word(ab, 2, [&](const Word& w) { seen.push_back(w); });
  EXPECT_EQ(seen, (std::vector<Word>{"", "a", "b", "aa", "ab", "ba", "bb"}));
}
