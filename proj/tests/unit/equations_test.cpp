#include <gtest/gtest.h>

#include "generators.hpp"
#include "wordlogic/equations.hpp"

using namespace wordlogic;
using namespace wordlogic::testing;

namespace {

const Alphabet ab("ab");
const Colouring parity({UPSet::residue(0, 2), UPSet::residue(1, 2)});

bool has_ab(const Word& w) { return w.find("ab") != Word::npos; }

bool even_a(const Word& w) { return std::count(w.begin(), w.end(), 'a') % 2 == 0; }

}  // namespace

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute("ab", std::vector<std::size_t>{0, 1}, "ba"), "ba");
  EXPECT_EQ(substitute("aab", std::vector<std::size_t>{0, 1, 2}, "abb"), "abb");
  EXPECT_EQ(substitute("a", std::vector<std::size_t>{0}, "a"), "a");
  EXPECT_THROW(substitute("ab", std::vector<std::size_t>{0, 0}, "ab"), Error);
  EXPECT_THROW(substitute("ab", std::vector<std::size_t>{2}, "a"), Error);
}

TEST(CheckFamily, SoundOnProfileLanguages) {
  Recogniser1 k = Recogniser1::from_profile(ab, parity, parse_profile("{a}|{b}", ab));
  EXPECT_TRUE(check_all(k.oracle(), ab, parity, 6).pass());
}

TEST(CheckFamily, FactorLanguageFailsSwap) {
  CheckReport r = check_family(has_ab, ab, Colouring(), {Family::swap, 'a', 'b'}, 3);
  ASSERT_FALSE(r.pass());
  EXPECT_EQ(r.violation->word, "ab");
  EXPECT_EQ(r.violation->positions, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.violation->image, "ba");
  EXPECT_TRUE(r.violation->word_member);
  EXPECT_FALSE(r.violation->image_member);
  EXPECT_EQ(r.to_string(), "FAIL fam=swap a=a b=b w=ab j=0,1");
  EXPECT_TRUE(replays(*r.violation, has_ab, Colouring()));
}

TEST(CheckFamily, TrivialInstancesPass) {
  EXPECT_TRUE(check_family(has_ab, ab, Colouring(), {Family::swap, 'a', 'a'}, 5).pass());
  EXPECT_EQ(check_family(has_ab, ab, Colouring(), {Family::swap, 'a', 'a'}, 5).to_string(), "PASS");
}

TEST(CheckAll, CompiledRecognisersPass) {
  Rng rng(21);
  for (int i = 0; i < 15; ++i) {
    Recogniser1 r = random_recogniser(rng, 2, 3, 2, 3);
    EXPECT_TRUE(check_all(r.oracle(), r.alphabet(), r.colouring(), 6).pass()) << r.to_string();
  }
}

TEST(CheckAll, ParityFailsDup) {
  CheckReport r = check_all(even_a, ab, Colouring(), 4);
  ASSERT_FALSE(r.pass());
  EXPECT_EQ(r.violation->equation.family, Family::dup);
  EXPECT_EQ(r.violation->word, "aab");
  EXPECT_EQ(r.violation->image, "abb");
  EXPECT_TRUE(replays(*r.violation, even_a, Colouring()));
}

TEST(CheckAll, EmptyLanguagePasses) {
  auto none = [](const Word&) { return false; };
  for (const Colouring& q : candidate_colourings(2, 3)) EXPECT_TRUE(check_all(none, ab, q, 5).pass());
}

TEST(CheckAll, AppendDetectsLengthDependence) {
  auto even_length = [](const Word& w) { return w.size() % 2 == 0; };
  CheckReport r = check_family(even_length, ab, Colouring(), {Family::append, 'a'}, 3);
  ASSERT_FALSE(r.pass());
  EXPECT_EQ(r.violation->word, "a");
  EXPECT_EQ(r.violation->image, "aa");
}

TEST(MembershipTable, AgreesWithOracle) {
  MembershipTable t(has_ab, ab, 6);
  for_each_word(ab, 6, [&](const Word& w) { ASSERT_EQ(t(w), has_ab(w)); });
  EXPECT_EQ(check_all(t, Colouring(), 6).to_string(), check_all(has_ab, ab, Colouring(), 6).to_string());
}

TEST(CheckGeneral, ReversalEquation) {
  GeneralEquation reverse{"reverse",
                          0,
                          [](const Word&, std::span<const std::size_t>) { return true; },
                          [](const Word& w, std::span<const std::size_t>) { return w; },
                          [](const Word& w, std::span<const std::size_t>) { return Word(w.rbegin(), w.rend()); }};
  auto v = check_general(has_ab, ab, reverse, 4);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->word, "ab");
  EXPECT_FALSE(check_general(even_a, ab, reverse, 5).has_value());
}

TEST(Search, Examples) {
  Recogniser1 k = Recogniser1::from_profile(ab, parity, parse_profile("{a}|{b}", ab));
  auto found = search_colouring(k.oracle(), ab, candidate_colourings(0, 2), 6);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(found->colouring, parity);
  EXPECT_FALSE(search_colouring(has_ab, ab, candidate_colourings(0, 2), 3).has_value());
  EXPECT_FALSE(search_colouring(has_ab, ab, candidate_colourings(3, 3), 5).has_value());
  // With few positions every candidate can give each position its own colour.
  EXPECT_TRUE(search_colouring(has_ab, ab, candidate_colourings(2, 3), 3).has_value());
  auto all = search_colouring([](const Word&) { return true; }, ab, candidate_colourings(2, 3), 5);
  ASSERT_TRUE(all.has_value());
  EXPECT_EQ(all->colouring, Colouring());
}

TEST(Search, CandidateOrder) {
  auto c = candidate_colourings(1, 2);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0], Colouring::threshold_residue(0, 1));
  EXPECT_EQ(c[1], Colouring::threshold_residue(0, 2));
  EXPECT_EQ(c[2], Colouring::threshold_residue(1, 1));
  EXPECT_EQ(c[3], Colouring::threshold_residue(1, 2));
}
