#include <gtest/gtest.h>

#include <algorithm>

#include "nchs/error.hpp"
#include "nchs/grammar.hpp"
#include "support.hpp"

using namespace nchs;
using namespace nchs::testing;

namespace {

std::vector<long> as_longs(const std::vector<mpz_class>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

bool balanced(const Word& x) {
  int depth = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    depth += x[i] == 0 ? 1 : -1;
    if (depth < 0) return false;
  }
  return depth == 0;
}

TEST(GrammarFile, ParsesAndFormats) {
  auto g = grammar("ifthenelse.gf");
  EXPECT_EQ(g.num_variables(), 3u);
  EXPECT_EQ(g.productions().size(), 6u);
  auto again = parse_grammar(format_grammar(g));
  EXPECT_EQ(again.productions(), g.productions());
}

TEST(GrammarFile, RejectsMalformedInput) {
  EXPECT_THROW(parse_grammar("terminals: x\nvariables: S\nstart: S\nS -> z\n"), InputError);
  EXPECT_THROW(parse_grammar("terminals: x\nvariables: S T\nstart: S\nS -> x\n"), InputError);
  EXPECT_THROW(parse_grammar("terminals: x\nvariables: S\nstart: S\nS -> x | x\n"), InputError);
  EXPECT_THROW(parse_grammar("terminals: x\nvariables: x\nstart: x\nx -> eps\n"), InputError);
  EXPECT_THROW(load_grammar("missing.gf"), InputError);
}

TEST(Validate, Dyck) {
  auto r = validate(grammar("dyck.gf"));
  EXPECT_TRUE(r.productive[0]);
  EXPECT_TRUE(r.reachable[0]);
  EXPECT_TRUE(r.nullable[0]);
  EXPECT_FALSE(r.has_unit_or_epsilon_cycle);
  EXPECT_FALSE(r.is_right_linear);
}

TEST(Validate, FlagsUnitCycle) {
  auto g = parse_grammar("terminals: x\nvariables: S\nstart: S\nS -> S | x\n");
  auto r = validate(g);
  EXPECT_TRUE(r.has_unit_or_epsilon_cycle);
  EXPECT_THROW(enumerate(g, 3), InputError);
  EXPECT_THROW(count_derivations(g, 3), InputError);
  // epsilon-mediated cycle: S -> A S with A nullable
  auto h = parse_grammar("terminals: x\nvariables: S A\nstart: S\nS -> A S | x\nA -> eps | x\n");
  EXPECT_TRUE(validate(h).has_unit_or_epsilon_cycle);
}

TEST(Validate, XStarYStar) {
  auto g = grammar("xstarystar.gf");
  auto r = validate(g);
  EXPECT_TRUE(r.productive[0]);
  EXPECT_TRUE(r.productive[1]);
  EXPECT_FALSE(r.productive[2]);
  EXPECT_TRUE(r.is_right_linear);
}

TEST(Enumerate, Examples) {
  Alphabet ab{"a", "b"};
  EXPECT_EQ(enumerate(grammar("dyck.gf"), 4).words(), (FiniteLanguage{Word{}, w(ab, "ab"), w(ab, "abab"), w(ab, "aabb")}));
  EXPECT_EQ(enumerate(grammar("lukasiewicz.gf"), 5).words(), lw(ab, {"a", "baa", "babaa", "bbaaa"}));
  Alphabet xy{"x", "y"};
  EXPECT_EQ(enumerate(grammar("palindromes2.gf"), 2).words(),
            (FiniteLanguage{Word{}, w(xy, "x"), w(xy, "y"), w(xy, "xx"), w(xy, "yy")}));
}

TEST(Enumerate, DyckMatchesBalanceScan) {
  auto e = enumerate(grammar("dyck.gf"), 10);
  std::vector<Word> scan;
  for (const auto& x : all_words(2, 0, 10))
    if (balanced(x)) scan.push_back(x);
  EXPECT_EQ(e.words(), FiniteLanguage(scan));
}

TEST(Enumerate, ResourceCap) { EXPECT_THROW(enumerate(grammar("palindromes2.gf"), 12, 50), ResourceError); }

TEST(CountDerivations, Examples) {
  EXPECT_EQ(as_longs(count_derivations(grammar("dyck.gf"), 8)[0]), (std::vector<long>{1, 0, 1, 0, 2, 0, 5, 0, 14}));
  EXPECT_EQ(as_longs(count_derivations(grammar("ifthenelse.gf"), 7)[0]), (std::vector<long>{1, 1, 2, 3, 6, 10, 20, 35}));
  auto g = parse_grammar("terminals: a\nvariables: S\nstart: S\nS -> a | a a\n");
  EXPECT_EQ(as_longs(count_derivations(g, 2)[0]), (std::vector<long>{0, 1, 1}));
}

TEST(CountDerivations, CatalanByIndependentRecursion) {
  // C_{n+1} = sum C_i C_{n-i}
  std::vector<mpz_class> cat{1};
  for (int n = 0; n < 10; ++n) {
    mpz_class s = 0;
    for (int i = 0; i <= n; ++i) s += cat[i] * cat[n - i];
    cat.push_back(s);
  }
  auto c = count_derivations(grammar("dyck.gf"), 20)[0];
  for (std::size_t k = 0; k <= 20; ++k) EXPECT_EQ(c[k], k % 2 ? mpz_class(0) : cat[k / 2]);
}

TEST(CertifyUnambiguous, Examples) {
  EXPECT_TRUE(certify_unambiguous(grammar("dyck.gf"), 10).unambiguous);
  EXPECT_TRUE(certify_unambiguous(grammar("palindromes2.gf"), 8).unambiguous);
  auto bad = certify_unambiguous(grammar("ambiguous.gf"), 3);
  EXPECT_FALSE(bad.unambiguous);
  ASSERT_TRUE(bad.counterexample.has_value());
  EXPECT_EQ(bad.counterexample->size(), 2u);
  EXPECT_EQ(bad.counterexample_parses, 2);
}

TEST(CountParses, AgreesWithDerivationCountsSummedOverWords) {
  for (const char* name : {"dyck.gf", "ifthenelse.gf", "ambiguous.gf", "lukasiewicz.gf"}) {
    auto g = grammar(name);
    auto c = count_derivations(g, 7)[g.start()];
    auto e = enumerate_all(g, 7);
    for (std::size_t k = 0; k <= 7; ++k) {
      mpz_class total = 0;
      for (const auto& x : e.words[g.start()][k]) total += count_parses(g, x);
      EXPECT_EQ(total, c[k]) << name << " length " << k;
    }
  }
}

TEST(Cyk, Examples) {
  Alphabet ab{"a", "b"};
  auto dyck = grammar("dyck.gf");
  EXPECT_TRUE(cyk_member(dyck, w(ab, "aabb")));
  EXPECT_FALSE(cyk_member(dyck, w(ab, "aba")));
  auto de = parse_grammar("terminals: a b e\nvariables: L D\nstart: L\nL -> eps | D e L\nD -> eps | a D b D\n");
  Alphabet abe{"a", "b", "e"};
  EXPECT_TRUE(cyk_member(de, w(abe, "e")));
  EXPECT_TRUE(cyk_member(de, w(abe, "abeaabbe")));
  EXPECT_FALSE(cyk_member(de, w(abe, "abea")));
}

TEST(Cyk, AgreesWithEnumeration) {
  for (const char* name : {"dyck.gf", "ifthenelse.gf", "palindromes2.gf", "lukasiewicz.gf", "xstarystar.gf"}) {
    auto g = grammar(name);
    auto e = enumerate(g, 8);
    CykParser p(g);
    for (const auto& x : all_words(g.num_terminals(), 0, 8)) EXPECT_EQ(p.accepts(x), e.words().contains(x)) << name;
  }
}

TEST(Cyk, AcceptsCyclicGrammars) {
  auto g = parse_grammar("terminals: x\nvariables: S A\nstart: S\nS -> A S | x\nA -> eps | x\n");
  Alphabet x{"x"};
  EXPECT_TRUE(cyk_member(g, w(x, "xxx")));
  EXPECT_FALSE(cyk_member(g, Word{}));
}

TEST(Trim, RemovesUselessVariables) {
  auto t = trim(grammar("xstarystar.gf"));
  EXPECT_EQ(t.num_variables(), 2u);
  EXPECT_EQ(enumerate(t, 6).words(), enumerate(grammar("xstarystar.gf"), 6).words());
}

}  // namespace
