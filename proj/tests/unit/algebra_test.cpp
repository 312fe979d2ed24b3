#include <gtest/gtest.h>

#include "nchs/algebra/multipoly.hpp"
#include "nchs/algebra/rational.hpp"
#include "nchs/algebra/series.hpp"
#include "nchs/error.hpp"

using namespace nchs;

namespace {

RationalFunction rf(const char* s) { return parse_t_expression(s); }

TruncatedSeries ints(std::vector<long> v) { return TruncatedSeries::from_ints(v); }

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// S, A, B for the if-then-else system
struct IfThenElse {
  MultiPolynomial::Names names = MultiPolynomial::make_names({"S", "A", "B"});
  MultiPolynomial S = MultiPolynomial::variable(names, 0);
  MultiPolynomial A = MultiPolynomial::variable(names, 1);
  MultiPolynomial B = MultiPolynomial::variable(names, 2);
  MultiPolynomial c(const char* s) const { return MultiPolynomial::constant(names, rf(s)); }
  std::vector<MultiPolynomial> gens() const {
    return {S - A - B, A - c("1") - c("t^2") * A * A, B - c("t") * S - c("t^2") * A * B};
  }
};

AlgebraicPoly upoly(const char* var, std::initializer_list<const char*> coeffs) {
  std::vector<RationalFunction> c;
  for (const char* s : coeffs) c.push_back(rf(s));
  return AlgebraicPoly(var, c);
}

bool basis_contains(const GroebnerResult& gb, const MultiPolynomial& p) {
  for (const auto& g : gb.basis)
    if (g.monic() == p.monic()) return true;
  return false;
}

TEST(Rational, ArithmeticAndParsing) {
  auto f = rf("(1+2*t)/(1-2*t^2)");
  EXPECT_EQ(f.to_string(), "(-t-1/2)/(t^2-1/2)");
  EXPECT_EQ(rf("2t(t+1)"), rf("2*t^2+2*t"));
  EXPECT_EQ(rf("1/(1-t)") - rf("t/(1-t)"), RationalFunction(1));
  EXPECT_THROW(rf("1/(t-t)"), InputError);
  EXPECT_THROW(rf("1+"), InputError);
  EXPECT_EQ(UPoly::gcd(rf("t^2-1").num(), rf("t^2+2*t+1").num()), rf("t+1").num());
}

TEST(Series, Examples) {
  EXPECT_EQ(rational_eval_series(rf("1/(1-2*t)"), 3), ints({1, 2, 4, 8}));
  EXPECT_EQ(ints({1, 2}) * ints({1, 2}), ints({1, 4}));
  EXPECT_EQ(series_arith(TruncatedSeries::constant(1, 3), ints({1, -4, 0, 0}), SeriesOp::Div), ints({1, 4, 16, 64}));
  EXPECT_EQ(rational_eval_series(rf("(1+2*t)/(1-2*t^2)"), 5), ints({1, 2, 2, 4, 4, 8}));
  EXPECT_THROW(rational_eval_series(rf("1/t"), 3), MathError);
  EXPECT_EQ(ints({1, 0, 0, 0}).shifted(2), ints({0, 0, 1, 0}));
}

TEST(Series, SqrtSquaresBack) {
  auto s = ints({1, -4, 0, 0, 0, 0, 0, 0});
  auto r = s.sqrt();
  EXPECT_EQ(r * r, s);
  // Catalan via (1 - sqrt(1-4t)) / 2t
  auto c = (TruncatedSeries::constant(1, 7) - r).coeffs();
  std::vector<long> cat{1, 1, 2, 5, 14, 42, 132};
  for (std::size_t k = 0; k < cat.size(); ++k) EXPECT_EQ(c[k + 1] / 2, Q(cat[k]));
}

TEST(GaussianSolve, Palindromes) {
  for (long n : {2L, 3L}) {
    RationalFunction nt(UPoly({0, Q(n)})), nt2(UPoly({0, 0, Q(n)}));
    auto x = gaussian_solve({{RationalFunction(1) - nt2}}, {RationalFunction(1) + nt});
    RationalFunction expect(UPoly({1, Q(n)}), UPoly({1, 0, Q(-n)}));
    EXPECT_EQ(x[0], expect);
  }
  EXPECT_EQ(gaussian_solve({{RationalFunction(1)}}, {RationalFunction(1)})[0], RationalFunction(1));
  EXPECT_THROW(gaussian_solve({{RationalFunction(0)}}, {RationalFunction(1)}), MathError);
}

TEST(GaussianSolve, XStarYStarCountsDPlusOne) {
  // A1 = 1 + t A1 + t A2, A2 = 1 + t A3 + t A2, A3 = t A3 + t A3
  RationalFunction one(1), t = rf("t");
  auto x = gaussian_solve({{one - t, -t, 0}, {0, one - t, -t}, {0, 0, one - t - t}}, {one, one, 0});
  auto s = rational_eval_series(x[0], 12);
  for (std::size_t d = 0; d <= 12; ++d) EXPECT_EQ(s[d], Q(static_cast<long>(d + 1)));
}

TEST(Groebner, IfThenElseOrders) {
  IfThenElse it;
  auto pS = it.c("t*(2*t-1)") * it.S * it.S + it.c("2*t-1") * it.S + it.c("1");
  auto pA = it.c("t^2") * it.A * it.A - it.A + it.c("1");
  auto gb1 = buchberger_lex(it.gens(), {0, 1, 2});
  EXPECT_TRUE(gb1.verified);
  EXPECT_TRUE(basis_contains(gb1, pS));
  auto gb2 = buchberger_lex(it.gens(), {1, 2, 0});
  EXPECT_TRUE(basis_contains(gb2, pA));
  auto gb3 = buchberger_lex(it.gens(), {2, 0, 1});
  EXPECT_TRUE(gb3.verified);
  // normal_form reduces with the first variable most significant
  auto natural = buchberger_lex(it.gens(), {2, 1, 0});
  for (const auto& g : it.gens()) EXPECT_TRUE(normal_form(g, natural.basis).is_zero());
}

TEST(Groebner, Trivial) {
  auto names = MultiPolynomial::make_names({"A"});
  auto f = MultiPolynomial::variable(names, 0) - MultiPolynomial::constant(names, 1);
  auto gb = buchberger_lex({f}, {0});
  ASSERT_EQ(gb.basis.size(), 1u);
  EXPECT_EQ(gb.basis[0], f);
}

TEST(Eliminate, IfThenElseMatchesPrintedPolynomials) {
  IfThenElse it;
  auto s = eliminate_univariate(it.gens(), 0).poly;
  EXPECT_TRUE(s.cleared_poly().proportional(upoly("S", {"1", "2*t-1", "t*(2*t-1)"})));
  EXPECT_EQ(s.cleared_poly().to_string(), "(2*t^2-t)*S^2+(2*t-1)*S+1");
  auto a = eliminate_univariate(it.gens(), 1).poly;
  EXPECT_TRUE(a.cleared_poly().proportional(upoly("A", {"1", "-1", "t^2"})));
  auto b = eliminate_univariate(it.gens(), 2).poly;
  EXPECT_TRUE(b.cleared_poly().proportional(upoly("B", {"t", "(t+1)*(2*t-1)", "t^2*(2*t-1)"})));
}

TEST(Eliminate, ResultantCrossCheck) {
  IfThenElse it;
  for (std::size_t keep : {0u, 1u, 2u}) {
    auto gb = eliminate_univariate(it.gens(), keep).poly;
    auto res = eliminate_by_resultants(it.gens(), keep);
    // the resultant may carry extra factors; the GB generator must divide it
    auto [q, r] = AlgebraicPoly::divmod(res, gb);
    EXPECT_TRUE(r.is_zero()) << keep;
  }
}

TEST(Eliminate, RationalValue) {
  auto names = MultiPolynomial::make_names({"A"});
  auto f = MultiPolynomial::variable(names, 0) - MultiPolynomial::constant(names, rf("1/(1-t)"));
  EXPECT_TRUE(eliminate_univariate({f}, 0).poly.cleared_poly().proportional(upoly("A", {"-1", "1-t"})));
}

TEST(Reciprocal, Examples) {
  EXPECT_TRUE(reciprocal_poly(upoly("E", {"-2", "1"})).proportional(upoly("H", {"1", "-2"})));
  auto p = upoly("E", {"3", "t", "1+t"});
  auto q = reciprocal_poly(p);
  EXPECT_EQ(q.var(), "H");
  EXPECT_EQ(q.coeffs(), (std::vector<RationalFunction>{rf("1+t"), rf("t"), rf("3")}));
  EXPECT_EQ(reciprocal_poly(q, "E").coeffs(), p.coeffs());
}

TEST(Newton, IfThenElseCentralBinomials) {
  IfThenElse it;
  auto p = eliminate_univariate(it.gens(), 0).poly;
  auto r = newton_series(p, ints({1, 1}), 20);
  EXPECT_EQ(r.series.truncate(7), ints({1, 1, 2, 3, 6, 10, 20, 35}));
  for (unsigned long d = 0; d <= 20; ++d) EXPECT_EQ(r.series[d], Q(binomial(d, d / 2))) << d;
  EXPECT_EQ(series_valuation(p.cleared_poly().evaluate(r.series)), 21u);
}

TEST(Newton, SimpleAndShifted) {
  EXPECT_EQ(newton_series(upoly("H", {"-(1+t)", "1"}), ints({1}), 4).series, ints({1, 1, 0, 0, 0}));
  auto dyck = upoly("T", {"1", "-1", "t^2"});
  EXPECT_EQ(newton_series(dyck, ints({1}), 6).series, ints({1, 0, 1, 0, 2, 0, 5}));
  // (H - 1)^2 - t^2 H^2 has a double root at t = 0
  auto dbl = upoly("H", {"1", "-2", "1-t^2"});
  auto r = newton_series(dbl, ints({1, 1}), 6);
  EXPECT_EQ(r.series, rational_eval_series(rf("1/(1-t)"), 6));
  EXPECT_GE(r.shift, 1u);
  EXPECT_THROW(newton_series(upoly("H", {"-(1+t)", "1"}), ints({2}), 4), MathError);
}

}  // namespace
