#include <gtest/gtest.h>

#include "nchs/error.hpp"
#include "nchs/gsb.hpp"
#include "nchs/homology.hpp"
#include "nchs/text.hpp"
#include "support.hpp"

using namespace nchs;
using namespace nchs::testing;

namespace {

NCPolynomial poly(const Presentation& p, const std::string& line) {
  std::string head = "alphabet:";
  for (const auto& n : p.alphabet.names()) head += " " + n;
  return parse_presentation(head + "\n" + line).relations.at(0);
}

Presentation load(const std::string& name) { return load_presentation(data_path(name)); }

std::vector<std::string> leads(const Presentation& p, const std::vector<NCPolynomial>& basis) {
  std::vector<std::string> v;
  for (const auto& w : leading_language(basis, p.order)) v.push_back(format_word(w, p.alphabet));
  return v;
}

TEST(MonomialOrder, GradedThenPriority) {
  Alphabet a({"x", "y"});
  auto o = MonomialOrder::by_index(2);
  EXPECT_TRUE(o.less(w(a, "y"), w(a, "x")));
  EXPECT_TRUE(o.less(w(a, "xx"), w(a, "yyy")));
  EXPECT_TRUE(o.less(w(a, "yx"), w(a, "xy")));
  MonomialOrder r({1, 0});
  EXPECT_TRUE(r.less(w(a, "xy"), w(a, "yx")));
  EXPECT_THROW(MonomialOrder({0, 0}), InputError);
}

TEST(Presentation, ParsesSignedSums) {
  auto p = parse_presentation("alphabet: x y\nx y - 2 y x\n- x x + 1/2 y y\n");
  ASSERT_EQ(p.relations.size(), 2u);
  EXPECT_EQ(p.relations[0].to_string(p.alphabet, p.order), "x y - 2 y x");
  EXPECT_EQ(p.relations[1].to_string(p.alphabet, p.order), "-x x + 1/2 y y");
  EXPECT_THROW(parse_presentation("x y\n"), InputError);
  EXPECT_THROW(parse_presentation("alphabet: x y\nx z\n"), InputError);
  EXPECT_THROW(parse_presentation("alphabet: x y\nx y -\n"), InputError);
  EXPECT_THROW(parse_presentation("alphabet: x y\nx - - y\n"), InputError);
}

TEST(NcReduce, SingleSteps) {
  auto p = load("fpex.pres");
  auto ax = poly(p, "a' x");
  std::vector<NCPolynomial> basis{poly(p, "a' x - x a'")};
  EXPECT_EQ(nc_reduce(ax, basis, p.order), poly(p, "x a'"));
  EXPECT_EQ(nc_reduce(poly(p, "x a'"), basis, p.order), poly(p, "x a'"));
  std::vector<NCPolynomial> two{poly(p, "b' x - x e"), poly(p, "x y e")};
  EXPECT_EQ(nc_reduce(poly(p, "b' x y"), two, p.order), poly(p, "x e y"));
}

TEST(NcReduce, ResultIsNormalAndCongruent) {
  auto p = load("fpex.pres");
  auto basis = gs_complete(p.relations, p.order, 5);
  auto f = poly(p, "a' b' a' x y - 3 b' b' e e + a' a b y");
  auto r = nc_reduce(f, basis, p.order);
  auto lm = leading_language(basis, p.order);
  for (const auto& [m, c] : r.terms()) EXPECT_TRUE(is_normal(m, lm));
  // f - r lies in the ideal, so it reduces to zero
  EXPECT_TRUE(nc_reduce(f - r, basis, p.order).is_zero());
}

TEST(GsComplete, CommutingPairIsAlreadyABasis) {
  auto p = parse_presentation("alphabet: x y\nx y - y x\n");
  auto b = gs_complete(p.relations, p.order, 5);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], p.relations[0]);
}

TEST(GsComplete, SquaresOfTwoGenerators) {
  // xxx gives x yy - yy x, and the degree 4 overlaps resolve
  auto p = parse_presentation("alphabet: x y\nx x - y y\n");
  auto b = gs_complete(p.relations, p.order, 4);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].to_string(p.alphabet, p.order), "x x - y y");
  EXPECT_EQ(b[1].to_string(p.alphabet, p.order), "x y y - y y x");
  EXPECT_TRUE(overlaps_resolve(b, p.order, 4));
  // dimensions of k<x,y>/(xx - yy) are 1,2,3,4,5,...
  RelationSet rel{p.alphabet, leading_language(b, p.order), {}, {}};
  EXPECT_EQ(hilbert_oracle(rel, 4), TruncatedSeries::from_ints({1, 2, 3, 4, 5}));
}

TEST(GsComplete, RejectsInhomogeneousInput) {
  auto p = parse_presentation("alphabet: x y\nx y - y\n");
  EXPECT_THROW(gs_complete(p.relations, p.order, 4), InputError);
  EXPECT_TRUE(gs_complete({}, p.order, 4).empty());
  GsOptions tiny;
  tiny.term_cap = 1;
  auto q = parse_presentation("alphabet: x y\nx x - y y\n");
  EXPECT_THROW(gs_complete(q.relations, q.order, 4, tiny), ResourceError);
}

TEST(GsComplete, FpexLeadingLanguage) {
  auto p = load("fpex.pres");
  auto b = gs_complete(p.relations, p.order, 8);
  EXPECT_TRUE(overlaps_resolve(b, p.order, 8));
  auto lm = leading_language(b, p.order);
  auto fin = parse_language(text::read_file(data_path("fpex_finite.txt")), &p.alphabet).words;
  auto predict = with_terminals(grammar("fpex_predict.gf"), p.alphabet);
  auto cmp = compare_leading(predict, fin, lm, 8);
  EXPECT_TRUE(cmp.agrees());
  auto small = leads(p, gs_complete(p.relations, p.order, 6));
  for (const char* s : {"x y", "x e y", "x e e y", "x a b e y", "x e e e y", "x a b e e y", "x e a b e y"})
    EXPECT_NE(std::find(small.begin(), small.end(), s), small.end()) << s;
  // the normal words of the leading ideal count the algebra
  RelationSet rel{p.alphabet, lm, {}, {}};
  EXPECT_EQ(hilbert_oracle(rel, 7), TruncatedSeries::from_ints({1, 7, 36, 166, 730, 3139, 13350, 56466}));
}

TEST(GsComplete, WrongPredictionIsReported) {
  auto p = load("fpex.pres");
  auto lm = leading_language(gs_complete(p.relations, p.order, 8), p.order);
  std::vector<Word> predicted;
  Word xey = parse_word("x e y", p.alphabet);
  for (const auto& x : lm)
    if (x != xey) predicted.push_back(x);
  auto cmp = compare_leading(FiniteLanguage(predicted), lm, 8);
  EXPECT_TRUE(cmp.missing.empty());
  ASSERT_EQ(cmp.extra.size(), 1u);
  EXPECT_EQ(cmp.extra[0], xey);
}

TEST(GsComplete, AprimeLeadingLanguage) {
  auto p = load("aprime.pres");
  auto b = gs_complete(p.relations, p.order, 8);
  EXPECT_TRUE(overlaps_resolve(b, p.order, 8));
  auto lm = leading_language(b, p.order);
  auto fin = parse_language(text::read_file(data_path("aprime_finite.txt")), &p.alphabet).words;
  EXPECT_TRUE(compare_leading(with_terminals(grammar("aprime_predict.gf"), p.alphabet), fin, lm, 8).agrees());
  RelationSet rel{p.alphabet, lm, {}, {}};
  EXPECT_EQ(hilbert_oracle(rel, 6), TruncatedSeries::from_ints({1, 9, 69, 516, 3844, 28620, 213070}));
}

TEST(GsComplete, IndependentOfProcessingOrder) {
  for (const char* file : {"fpex.pres", "aprime.pres"}) {
    auto p = load(file);
    auto base = gs_complete(p.relations, p.order, 8);
    auto rev = p.relations;
    std::reverse(rev.begin(), rev.end());
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      GsOptions o;
      o.shuffle_seed = seed;
      EXPECT_EQ(gs_complete(rev, p.order, 8, o), base) << file << " seed " << seed;
    }
  }
}

}  // namespace
