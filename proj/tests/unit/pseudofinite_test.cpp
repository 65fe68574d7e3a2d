#include <gtest/gtest.h>

#include "generators.hpp"
#include "wordlogic/pseudofinite.hpp"

using namespace wordlogic;
using namespace wordlogic::testing;

namespace {

const Alphabet ab("ab");
const UPSet evens = UPSet::residue(0, 2);
const UPSet odds = UPSet::residue(1, 2);
const UPSet zero = UPSet::singleton(0);
const UPSet all = UPSet::all();

GeneralizedWord gw(ClosedExpr a, ClosedExpr b) { return GeneralizedWord(ab, {std::move(a), std::move(b)}); }

}  // namespace

TEST(ClosedExpr, Content) {
  EXPECT_EQ(ClosedExpr::hat(evens).content(), evens);
  EXPECT_EQ(ClosedExpr::star(all).content(), UPSet::empty());
  EXPECT_EQ((ClosedExpr::hat(zero) + ClosedExpr::star(evens)).content(), zero);
  EXPECT_EQ(ClosedExpr().content(), UPSet::empty());
}

TEST(ClosedExpr, MeetsClopen) {
  EXPECT_FALSE(ClosedExpr::star(evens).meets_clopen(odds));
  EXPECT_TRUE(ClosedExpr::star(all).meets_clopen(evens));
  EXPECT_TRUE(ClosedExpr::hat(zero).meets_clopen(UPSet::initial_segment(6)));
  EXPECT_FALSE(ClosedExpr::star(all).meets_clopen(UPSet::initial_segment(6)));
  EXPECT_FALSE(ClosedExpr().meets_clopen(all));
}

TEST(ClosedExpr, SingletonClopensSeeOnlyContent) {
  Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    ClosedExpr e;
    if (coin(rng)) e = e + ClosedExpr::hat(random_upset(rng, 4, 4));
    if (coin(rng)) e = e + ClosedExpr::star(random_upset(rng, 4, 4));
    UPSet c = e.content();
    for (std::size_t n = 0; n < 20; ++n) ASSERT_EQ(e.meets_clopen(UPSet::singleton(n)), c.contains(n)) << e.to_string();
  }
}

TEST(ClosedExpr, Normalisation) {
  EXPECT_EQ(ClosedExpr::hat(evens) + ClosedExpr::hat(odds), ClosedExpr::hat(all));
  EXPECT_EQ(ClosedExpr::hat(all) + ClosedExpr::star(evens), ClosedExpr::hat(all));
  EXPECT_EQ(ClosedExpr::star(UPSet::initial_segment(4)), ClosedExpr());
  EXPECT_EQ(ClosedExpr::star(evens | zero | UPSet::singleton(3)), ClosedExpr::star(evens));
  EXPECT_EQ(ClosedExpr::hat(UPSet::empty()), ClosedExpr());
  EXPECT_TRUE(ClosedExpr().is_empty());
}

TEST(ClosedExpr, ParseAndPrint) {
  ClosedExpr e = ClosedExpr::parse("hat(up:/1) + star(up:/10)");
  EXPECT_EQ(e, ClosedExpr::hat(all));
  EXPECT_EQ(ClosedExpr::parse("0"), ClosedExpr());
  EXPECT_EQ(ClosedExpr().to_string(), "0");
  ClosedExpr mixed = ClosedExpr::hat(zero) + ClosedExpr::star(odds);
  EXPECT_EQ(ClosedExpr::parse(mixed.to_string()), mixed);
  EXPECT_THROW(ClosedExpr::parse("hat(up:/1"), ParseError);
  EXPECT_THROW(ClosedExpr::parse("cap(up:/1)"), ParseError);
}

TEST(GeneralizedWord, ParseFile) {
  GeneralizedWord g = GeneralizedWord::parse("a = hat(up:/1)\nb = star(up:/1)\n");
  EXPECT_EQ(g.alphabet(), ab);
  EXPECT_EQ(g.component('b'), ClosedExpr::star(all));
  EXPECT_EQ(GeneralizedWord::parse(g.to_string()).components(), g.components());
  GeneralizedWord partial = GeneralizedWord::parse("alphabet abc\nb = hat(up:1/0)\n");
  EXPECT_TRUE(partial.component('a').is_empty());
  EXPECT_TRUE(partial.component('c').is_empty());
  EXPECT_THROW(GeneralizedWord::parse("a = hat(up:/1)\na = 0\n"), Error);
}

TEST(Profile, GeneralizedWords) {
  Colouring parity({evens, odds});
  EXPECT_EQ(format_profile(gw_profile(gw(ClosedExpr::hat(all), ClosedExpr::star(all)), parity), ab), "{a,b}|{a,b}");
  Colouring q = Colouring::threshold_residue(2, 3, true);
  for (const LetterSet& cell : gw_profile(gw(ClosedExpr::hat(all), ClosedExpr()), q)) EXPECT_EQ(cell.to_string(ab), "{a}");
  for (const LetterSet& cell : gw_profile(GeneralizedWord(ab), q)) EXPECT_TRUE(cell.empty());
}

TEST(ContentCriterion, Examples) {
  EXPECT_TRUE(content_criterion(gw(ClosedExpr::hat(all), ClosedExpr())));
  EXPECT_TRUE(content_criterion(gw(ClosedExpr::hat(all), ClosedExpr::star(all))));
  EXPECT_FALSE(content_criterion(gw(ClosedExpr::hat(evens), ClosedExpr::hat(odds | zero))));
  EXPECT_FALSE(content_criterion(gw(ClosedExpr::hat(evens), ClosedExpr())));
  EXPECT_TRUE(content_criterion(GeneralizedWord(ab)));
}

TEST(WordWitness, Examples) {
  Colouring parity({evens, odds});
  GeneralizedWord both = gw(ClosedExpr::hat(all), ClosedExpr::star(all));
  auto w = std::get<Word>(word_witness(both, parity));
  EXPECT_EQ(w.size(), 4u);
  EXPECT_EQ(profile(ab, w, parity), gw_profile(both, parity));

  Colouring q = Colouring::threshold_residue(3, 2, true);
  GeneralizedWord omega = gw(ClosedExpr::hat(all), ClosedExpr());
  Word as = std::get<Word>(word_witness(omega, q));
  EXPECT_EQ(as, std::string(as.size(), 'a'));
  EXPECT_EQ(profile(ab, as, q), gw_profile(omega, q));

  EXPECT_EQ(std::get<Word>(word_witness(GeneralizedWord(ab), parity)), "");
}

TEST(WordWitness, Infeasible) {
  Colouring q({zero, evens - zero, odds});
  auto r = word_witness(gw(ClosedExpr::star(evens), ClosedExpr::hat(zero)), q);
  ASSERT_TRUE(std::holds_alternative<Infeasible>(r));
  const Infeasible& why = std::get<Infeasible>(r);
  EXPECT_EQ(why.cell, 1u);
  EXPECT_EQ(why.conflicting_cell, 2u);
  EXPECT_EQ(why.min_length, 3u);
  EXPECT_EQ(why.max_length, 1u);
}

TEST(WordWitness, AgreesWithExhaustiveSearch) {
  Rng rng(47);
  for (int i = 0; i < 60; ++i) {
    std::vector<ClosedExpr> parts;
    for (int l = 0; l < 2; ++l) {
      ClosedExpr e;
      if (coin(rng)) e = e + ClosedExpr::hat(random_upset(rng, 3, 2));
      if (coin(rng)) e = e + ClosedExpr::star(random_upset(rng, 3, 2));
      parts.push_back(e);
    }
    GeneralizedWord g(ab, parts);
    Colouring q = random_colouring(rng, 3, 3, 2);
    Profile want = gw_profile(g, q);
    std::optional<std::size_t> shortest;
    for_each_word(ab, 10, [&](const Word& w) {
      if (!shortest && profile(ab, w, q) == want) shortest = w.size();
    });
    auto r = word_witness(g, q);
    if (auto* w = std::get_if<Word>(&r)) {
      EXPECT_EQ(profile(ab, *w, q), want);
      EXPECT_EQ(shortest, w->size());
    } else {
      EXPECT_FALSE(shortest.has_value()) << g.to_string() << " " << q.to_string();
    }
  }
}

TEST(BoundedCheck, Examples) {
  PseudofiniteCheck pass = bounded_pseudofinite_check(gw(ClosedExpr::hat(all), ClosedExpr::star(all)), 4, 4);
  EXPECT_TRUE(pass.pass);
  EXPECT_GT(pass.candidates, 0u);

  PseudofiniteCheck fail = bounded_pseudofinite_check(gw(ClosedExpr::star(evens), ClosedExpr::hat(zero)), 2, 1);
  EXPECT_FALSE(fail.pass);
  ASSERT_TRUE(fail.counterexample.has_value());
  EXPECT_EQ(*fail.counterexample, Colouring({zero, evens - zero, odds}));
  EXPECT_TRUE(fail.obstruction.has_value());

  EXPECT_TRUE(bounded_pseudofinite_check(GeneralizedWord(ab), 3, 3).pass);
}

TEST(BoundedCheck, CandidatesAreDistinctPartitions) {
  auto c = pseudofinite_candidates(gw(ClosedExpr::star(evens), ClosedExpr::hat(zero)), 3, 2);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) EXPECT_NE(c[i], c[j]);
  EXPECT_FALSE(c.empty());
}
