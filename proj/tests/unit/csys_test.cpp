#include <gtest/gtest.h>

#include "nchs/csys.hpp"
#include "nchs/error.hpp"
#include "support.hpp"

using namespace nchs;
using namespace nchs::testing;

namespace {

bool is_palindrome(const Word& x) {
  for (std::size_t i = 0; i < x.size() / 2; ++i)
    if (x[i] != x[x.size() - 1 - i]) return false;
  return true;
}

TEST(BuildSystem, Examples) {
  EXPECT_EQ(build_system(grammar("ifthenelse.gf")).to_string(), "S = A+B\nA = t^2*A^2+1\nB = t*S+t^2*A*B\n");
  EXPECT_EQ(build_system(grammar("dyck.gf")).to_string(), "T = t^2*T^2+1\n");
}

TEST(GammaRational, XStarYStar) {
  auto f = gamma_rational(grammar("xstarystar.gf"));
  EXPECT_EQ(f, parse_t_expression("1/(1-t)^2"));
  EXPECT_THROW(gamma_rational(grammar("palindromes2.gf")), InputError);
}

TEST(GammaLinear, PalindromesMatchBruteForce) {
  for (auto [file, n] : {std::pair{"palindromes2.gf", 2}, std::pair{"palindromes3.gf", 3}}) {
    auto f = gamma_linear(grammar(file));
    RationalFunction expect(UPoly({1, Q(n)}), UPoly({1, 0, Q(-n)}));
    EXPECT_EQ(f, expect);
    std::size_t d = n == 2 ? 14 : 10;
    auto s = rational_eval_series(f, d);
    for (std::size_t k = 0; k <= d; ++k) {
      long count = 0;
      for (const auto& x : all_words(n, k, k)) count += is_palindrome(x);
      EXPECT_EQ(s[k], Q(count)) << file << " " << k;
    }
  }
}

TEST(GammaAlgebraic, IfThenElse) {
  auto g = grammar("ifthenelse.gf");
  auto r = gamma_algebraic(g, 7);
  EXPECT_TRUE(r.certified());
  EXPECT_EQ(r.poly.cleared_poly().to_string(), "(2*t^2-t)*S^2+(2*t-1)*S+1");
  EXPECT_EQ(r.series, TruncatedSeries::from_ints({1, 1, 2, 3, 6, 10, 20, 35}));
  auto a = gamma_algebraic(g, 6, 12, 1);
  EXPECT_EQ(a.poly.cleared_poly().to_string(), "t^2*A^2-A+1");
}

TEST(GammaAlgebraic, AmbiguousGrammarIsTaggedUnverified) {
  auto r = gamma_algebraic(grammar("ambiguous.gf"), 5, 6);
  EXPECT_FALSE(r.certified());
  // derivation counts, not word counts
  EXPECT_EQ(r.series, TruncatedSeries::from_ints({0, 1, 2, 4, 8, 16}));
}

TEST(CsConsistency, CertifiedSeriesSolveTheSystem) {
  for (const char* name : {"dyck.gf", "lukasiewicz.gf", "palindromes2.gf", "palindromes3.gf", "ifthenelse.gf"}) {
    auto g = grammar(name);
    EXPECT_TRUE(certify_unambiguous(g, 12).unambiguous) << name;
    EXPECT_TRUE(system_vanishes(build_system(g), derivation_series(g, 12), 12)) << name;
    auto r = gamma_algebraic(g, 12);
    EXPECT_EQ(series_valuation(r.poly.cleared_poly().evaluate(r.series)), 13u) << name;
  }
}

}  // namespace
