#include <gtest/gtest.h>

#include <random>

#include "nchs/error.hpp"
#include "nchs/grammar.hpp"
#include "nchs/words.hpp"
#include "support.hpp"

using namespace nchs;
using namespace nchs::testing;

namespace {

const Alphabet xy{"x", "y"};

TEST(Alphabet, RejectsDuplicatesAndWhitespace) {
  EXPECT_THROW(Alphabet({"x", "x"}), InputError);
  EXPECT_THROW(Alphabet({"x y"}), InputError);
  EXPECT_THROW(Alphabet::disjoint_union(Alphabet{"x"}, Alphabet{"x", "y"}), InputError);
  auto z = Alphabet::disjoint_union(Alphabet{"x"}, Alphabet{"a", "b"});
  EXPECT_EQ(z.size(), 3u);
  EXPECT_EQ(z.index("b"), 2);
}

TEST(Word, CanonicalOrderIsLengthThenLex) {
  EXPECT_LT(w(xy, "y"), w(xy, "xx"));
  EXPECT_LT(w(xy, "xy"), w(xy, "yx"));
  EXPECT_LT(Word{}, w(xy, "x"));
  EXPECT_EQ(format_word(Word{}, xy), "eps");
  EXPECT_EQ(parse_word("x y x", xy), w(xy, "xyx"));
  EXPECT_EQ(parse_word("eps", xy), Word{});
}

TEST(MinimizeAntichain, Examples) {
  EXPECT_EQ(minimize_antichain(lw(xy, {"xy", "xyx", "yy"})), lw(xy, {"xy", "yy"}));
  EXPECT_EQ(minimize_antichain(FiniteLanguage{}), FiniteLanguage{});
  Alphabet ab{"a", "b"};
  EXPECT_EQ(minimize_antichain(lw(ab, {"aab", "ab", "b"})), lw(ab, {"b"}));
}

TEST(IsNormal, Examples) {
  EXPECT_TRUE(is_normal(w(xy, "xyx"), lw(xy, {"yy"})));
  EXPECT_FALSE(is_normal(w(xy, "xyyx"), lw(xy, {"yy"})));
  EXPECT_TRUE(is_normal(Word{}, lw(xy, {"xy"})));
}

TEST(TruncProduct, Examples) {
  auto one_x = TruncatedLanguage(1, FiniteLanguage{Word{}, w(xy, "x")}, true);
  auto one_y = TruncatedLanguage(1, FiniteLanguage{Word{}, w(xy, "y")}, true);
  EXPECT_EQ(trunc_product(one_x, one_y, 2).words(), (FiniteLanguage{Word{}, w(xy, "x"), w(xy, "y"), w(xy, "xy")}));

  auto x5 = TruncatedLanguage(5, lw(xy, {"x"}), true);
  auto y5 = TruncatedLanguage(5, lw(xy, {"y", "yy"}), true);
  EXPECT_EQ(trunc_product(x5, y5, 2).words(), lw(xy, {"xy"}));

  Alphabet abe{"a", "b", "e"};
  auto dyck = load_grammar(data_path("dyck.gf"));
  auto dyck_abe = parse_grammar("terminals: a b e\nvariables: T\nstart: T\nT -> eps | a T b T\n");
  auto d6 = enumerate(dyck_abe, 6);
  auto e1 = TruncatedLanguage(1, lw(abe, {"e"}), true);
  EXPECT_EQ(trunc_product(d6, e1, 5).words(), lw(abe, {"e", "abe", "aabbe", "ababe"}));
}

TEST(TruncProduct, RejectsInexactCalls) {
  auto a = TruncatedLanguage(2, lw(xy, {"x", "xx"}));
  auto b = TruncatedLanguage(2, lw(xy, {"y"}));
  // words of a of length 3 could pair with y inside bound 4
  EXPECT_THROW(trunc_product(a, b, 4), BoundError);
  EXPECT_NO_THROW(trunc_product(a, b, 3));
}

TEST(TruncIdeal, Examples) {
  EXPECT_EQ(trunc_ideal(TruncatedLanguage::finite(lw(xy, {"xx"})), 2, 3).words(),
            lw(xy, {"xx", "xxx", "xxy", "yxx"}));
  EXPECT_TRUE(trunc_ideal(TruncatedLanguage::finite({}), 2, 3).words().empty());
  EXPECT_EQ(trunc_ideal(TruncatedLanguage::finite(lw(xy, {"xy"})), 2, 3).words(),
            lw(xy, {"xy", "xxy", "xyx", "xyy", "yxy"}));
  EXPECT_THROW(trunc_ideal(TruncatedLanguage(2, lw(xy, {"xy"})), 2, 3), BoundError);
}

TEST(TruncBoolean, Examples) {
  auto a = TruncatedLanguage(1, lw(xy, {"x", "y"}));
  auto b = TruncatedLanguage(2, lw(xy, {"y", "xy"}));
  auto u = trunc_boolean(a, b, SetOp::Union);
  EXPECT_EQ(u.bound(), 1u);
  EXPECT_EQ(u.words(), lw(xy, {"x", "y"}));
  EXPECT_EQ(trunc_boolean(TruncatedLanguage(2, lw(xy, {"x", "xy"})), TruncatedLanguage(2, lw(xy, {"xy"})),
                          SetOp::Intersection)
                .words(),
            lw(xy, {"xy"}));
  EXPECT_EQ(trunc_boolean(TruncatedLanguage(2, lw(xy, {"x", "xy", "yy"})), TruncatedLanguage(2, lw(xy, {"xy"})),
                          SetOp::Difference)
                .words(),
            lw(xy, {"x", "yy"}));
}

FiniteLanguage random_antichain(std::mt19937& rng, std::size_t n, std::size_t count, std::size_t maxlen) {
  std::vector<Word> v;
  std::uniform_int_distribution<std::size_t> len(1, maxlen), sym(0, n - 1);
  for (std::size_t i = 0; i < count; ++i) {
    Word x;
    for (std::size_t k = len(rng); k-- > 0;) x.push_back(static_cast<Symbol>(sym(rng)));
    v.push_back(x);
  }
  return minimize_antichain(FiniteLanguage(v));
}

TEST(CoreLangProperties, MinimizeIsIdempotentAndFactorFree) {
  std::mt19937 rng(7);
  for (int it = 0; it < 100; ++it) {
    auto a = random_antichain(rng, 3, 6, 4);
    EXPECT_TRUE(is_antichain(a));
    EXPECT_EQ(minimize_antichain(a), a);
  }
}

TEST(CoreLangProperties, NormalPlusIdealCountsAllWords) {
  std::mt19937 rng(11);
  for (int it = 0; it < 30; ++it) {
    std::size_t n = 2 + it % 2;
    auto b = random_antichain(rng, n, 4, 3);
    std::size_t d = 6;
    auto ideal = trunc_ideal(TruncatedLanguage::finite(b), n, d);
    std::size_t power = 1;
    for (std::size_t k = 0; k <= d; ++k) {
      std::size_t normal = 0;
      for (const auto& x : all_words(n, k, k)) normal += is_normal(x, b);
      EXPECT_EQ(normal + ideal.words().of_length(k).size(), power);
      power *= n;
    }
  }
}

TEST(CoreLangProperties, IdealMatchesSlidingWindowScan) {
  std::mt19937 rng(3);
  for (int it = 0; it < 30; ++it) {
    auto b = random_antichain(rng, 2, 4, 3);
    auto ideal = trunc_ideal(TruncatedLanguage::finite(b), 2, 7);
    std::vector<Word> scan;
    for (const auto& x : all_words(2, 0, 7)) {
      bool hit = false;
      for (std::size_t i = 0; i < x.size() && !hit; ++i)
        for (const auto& g : b)
          if (i + g.size() <= x.size() && x.substr(i, g.size()) == g) hit = true;
      if (hit) scan.push_back(x);
    }
    EXPECT_EQ(ideal.words(), FiniteLanguage(scan));
  }
}

TEST(CoreLangProperties, ProductIsAssociative) {
  std::mt19937 rng(5);
  auto random_lang = [&]() {
    std::vector<Word> v;
    for (const auto& x : all_words(2, 0, 3))
      if (rng() % 3 == 0) v.push_back(x);
    return TruncatedLanguage::finite(FiniteLanguage(v));
  };
  for (int it = 0; it < 30; ++it) {
    auto a = random_lang(), b = random_lang(), c = random_lang();
    std::size_t d = 6;
    auto left = trunc_product(trunc_product(a, b, d), c, d);
    auto right = trunc_product(a, trunc_product(b, c, d), d);
    EXPECT_EQ(left.words(), right.words());
  }
}

TEST(LanguageFile, RoundTrip) {
  auto parsed = parse_language("# relations\nx y\ny y\n");
  EXPECT_EQ(parsed.alphabet.names(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(parsed.words.size(), 2u);
  auto again = parse_language(format_language(parsed.words, parsed.alphabet));
  EXPECT_EQ(again.words, parsed.words);
}

}  // namespace
