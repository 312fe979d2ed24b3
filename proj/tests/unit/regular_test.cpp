#include <gtest/gtest.h>

#include <random>

#include "nchs/error.hpp"
#include "nchs/regular.hpp"
#include "support.hpp"

using namespace nchs;
using namespace nchs::testing;

namespace {

const Alphabet xy{"x", "y"};

RegularLanguage xstar_ystar() { return RegularLanguage::grammar(grammar("xstarystar.gf")); }

FiniteLanguage ystar(std::size_t d) {
  std::vector<Word> v;
  Word cur;
  for (std::size_t k = 0; k <= d; ++k) {
    v.push_back(cur);
    cur.push_back(1);
  }
  return FiniteLanguage(v);
}

TEST(RightQuotient, XStarYStar) {
  auto l = xstar_ystar();
  auto base = minimize(l.to_dfa());
  EXPECT_TRUE(equivalent(right_quotient(l, w(xy, "x")).to_dfa(), base));
  EXPECT_EQ(right_quotient(l, w(xy, "y")).to_dfa().words_upto(5), ystar(5));
  auto y_then_x = right_quotient(right_quotient(l, w(xy, "y")), w(xy, "x"));
  EXPECT_TRUE(equivalent(y_then_x.to_dfa(), empty_dfa(2)));
}

TEST(RightQuotient, AlgebraLaws) {
  std::mt19937 rng(1);
  auto ideal = RegularLanguage::ideal(xy, lw(xy, {"xx", "yxy"}));
  for (const auto& l : {xstar_ystar(), ideal}) {
    EXPECT_TRUE(equivalent(right_quotient(l, Word{}).to_dfa(), l.to_dfa()));
    for (int it = 0; it < 40; ++it) {
      Word v, u;
      for (auto n = rng() % 4; n-- > 0;) v.push_back(static_cast<Symbol>(rng() % 2));
      for (auto n = rng() % 4; n-- > 0;) u.push_back(static_cast<Symbol>(rng() % 2));
      auto lhs = right_quotient(l, v + u);
      auto rhs = right_quotient(right_quotient(l, v), u);
      EXPECT_TRUE(equivalent(lhs.to_dfa(), rhs.to_dfa()));
    }
  }
}

TEST(MyhillNerode, XStarYStarReproducesTheThreeQuotients) {
  auto g = myhill_nerode_grammar(xstar_ystar());
  EXPECT_EQ(format_grammar(g),
            "terminals: x y\nvariables: A1 A2 A3\nstart: A1\n"
            "A1 -> eps | x A1 | y A2\nA2 -> eps | x A3 | y A2\nA3 -> x A3 | y A3\n");
  EXPECT_EQ(enumerate(g, 10).words(), enumerate(grammar("xstarystar.gf"), 10).words());
}

TEST(MyhillNerode, IdealOfXX) {
  auto l = RegularLanguage::ideal(xy, lw(xy, {"xx"}));
  auto g = myhill_nerode_grammar(l);
  EXPECT_EQ(g.num_variables(), 3u);
  std::vector<Word> scan;
  for (const auto& x : all_words(2, 0, 8))
    if (!is_normal(x, lw(xy, {"xx"}))) scan.push_back(x);
  EXPECT_EQ(scan.size() + 142u, 511u);  // Fibonacci counts of normal words sum to 142
  EXPECT_EQ(enumerate(g, 8).words(), FiniteLanguage(scan));
}

TEST(MyhillNerode, EmptyLanguage) {
  auto g = myhill_nerode_grammar(RegularLanguage::automaton(xy, empty_dfa(2)));
  EXPECT_EQ(format_grammar(g), "terminals: x y\nvariables: A1\nstart: A1\nA1 -> x A1 | y A1\n");
}

TEST(MyhillNerode, IsIdempotentOnItsOwnOutput) {
  for (const auto& basis : {lw(xy, {"xx"}), lw(xy, {"xy", "yx"}), lw(xy, {"xyx", "yy"})}) {
    auto g = myhill_nerode_grammar(RegularLanguage::ideal(xy, basis));
    auto again = myhill_nerode_grammar(RegularLanguage::grammar(g));
    EXPECT_EQ(g.num_variables(), again.num_variables());
    EXPECT_EQ(format_grammar(g), format_grammar(again));
  }
}

TEST(MyhillNerode, StateCap) {
  auto l = RegularLanguage::ideal(xy, lw(xy, {"xxxxxx"}));
  EXPECT_THROW(myhill_nerode_grammar(l, 3), ResourceError);
}

TEST(IdealAutomaton, StateCounts) {
  auto a = ideal_automaton(lw(xy, {"xx"}), 2);
  EXPECT_EQ(a.dfa.size(), 3u);
  auto b = ideal_automaton({}, 2);
  EXPECT_EQ(b.dfa.size(), 1u);
  EXPECT_FALSE(b.dfa.accepting[0]);
  auto c = ideal_automaton(lw(xy, {"xy", "yx"}), 2);
  ASSERT_EQ(c.dfa.size(), 4u);
  EXPECT_TRUE(c.states[0].active.empty());
  EXPECT_EQ(c.states[1].active, std::vector<Word>{w(xy, "x")});
  EXPECT_EQ(c.states[2].active, std::vector<Word>{w(xy, "y")});
  EXPECT_TRUE(c.states[3].absorbed);
  for (const auto& x : all_words(2, 0, 8)) EXPECT_EQ(c.dfa.accepts(x), !is_normal(x, lw(xy, {"xy", "yx"})));
}

TEST(IdealAutomaton, SuffixStatesNeedNotBeMinimal) {
  // after a or c the residual languages coincide, yet the suffix sets differ
  Alphabet abc{"a", "b", "c"};
  auto ia = ideal_automaton(lw(abc, {"ab", "cb"}), 3);
  EXPECT_EQ(ia.dfa.size(), 4u);
  EXPECT_EQ(minimize(ia.dfa).size(), 3u);
  EXPECT_EQ(myhill_nerode_grammar(RegularLanguage::ideal(abc, lw(abc, {"ab", "cb"}))).num_variables(), 3u);
}

TEST(Automata, CensusAndWords) {
  auto d = ideal_automaton(lw(xy, {"xx"}), 2).dfa;
  auto normal = complement(d).census(6);
  std::vector<long> fib{1, 2, 3, 5, 8, 13, 21};
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_EQ(normal[k], fib[k]);
}

TEST(Automata, OverlapLanguage) {
  Alphabet x{"x"};
  auto r = finite_dfa(lw(x, {"x"}), 1);
  auto q = overlap_language(r, r);
  EXPECT_EQ(q.words_upto(6), lw(x, {"x"}));
}

TEST(Automata, DumpFormat) {
  auto d = minimize(ideal_automaton(lw(xy, {"xx"}), 2).dfa);
  EXPECT_EQ(dump_automaton(d, xy), "0 x -> 1\n0 y -> 0\n1 x -> 2\n1 y -> 0\n2 x -> 2\n2 y -> 2\naccepting: 2\ninitial: 0\n");
}

TEST(RightLinearGrammar, AgreesWithAutomatonSemantics) {
  auto g = grammar("xstarystar.gf");
  auto d = RegularLanguage::grammar(g).to_dfa();
  auto e = enumerate(g, 9);
  for (const auto& x : all_words(2, 0, 9)) EXPECT_EQ(d.accepts(x), e.words().contains(x));
}

}  // namespace
