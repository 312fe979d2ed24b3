#include <algorithm>
#include <map>
#include <set>

#include "nchs/error.hpp"
#include "nchs/homology.hpp"

namespace nchs {

FiniteLanguage ChainComputation::language(std::size_t i) const {
  if (i == 0 || i > chains.size()) return {};
  std::vector<Word> v;
  for (const auto& c : chains[i - 1]) v.push_back(c.word);
  return FiniteLanguage(std::move(v));
}

ChainComputation chains_finite(const FiniteLanguage& l1, std::size_t k_max) {
  if (!is_antichain(l1)) throw InputError("chain 1 is not an antichain");
  for (const auto& w : l1)
    if (w.size() < 2) throw InputError("relations must have length at least 2");
  ChainComputation r;
  if (k_max == 0) return r;
  std::vector<ChainElement> level;
  for (const auto& w : l1) level.push_back({w, 1});
  for (std::size_t i = 1;; ++i) {
    if (level.empty()) {
      r.global_dimension = i;
      return r;
    }
    r.chains.push_back(level);
    if (i == k_max) return r;
    std::map<Word, std::size_t> next;
    for (const auto& [w, p] : level) {
      std::set<Word> tails;
      for (const auto& rel : l1)
        for (std::size_t start = p; start < w.size(); ++start) {
          std::size_t overlap = w.size() - start;
          if (overlap >= rel.size()) continue;
          if (rel.starts_with(w.substr(start))) tails.insert(rel.substr(overlap));
        }
      // keep tails with no shorter tail as a prefix
      std::vector<Word> kept;
      for (const auto& u : tails) {
        if (std::any_of(kept.begin(), kept.end(), [&](const Word& v) { return u.starts_with(v); })) continue;
        kept.push_back(u);
        next.emplace(w + u, w.size());
      }
    }
    level.clear();
    for (const auto& [w, p] : next) level.push_back({w, p});
  }
}

namespace {

// Languages up to length d stored as one flag per word, words indexed in base n.
class Dense {
 public:
  Dense(std::size_t n, std::size_t d) : n_(n), d_(d), pw_(d + 2, 1), bits_(d + 1) {
    for (std::size_t i = 1; i < pw_.size(); ++i) pw_[i] = pw_[i - 1] * n;
    for (std::size_t l = 0; l <= d; ++l) bits_[l].assign(pw_[l], 0);
  }

  static Dense words_from(std::size_t n, std::size_t d, std::size_t min_len) {
    Dense r(n, d);
    for (std::size_t l = min_len; l <= d; ++l) std::fill(r.bits_[l].begin(), r.bits_[l].end(), 1);
    return r;
  }

  static Dense from(const FiniteLanguage& words, std::size_t n, std::size_t d) {
    Dense r(n, d);
    for (const auto& w : words)
      if (w.size() <= d) r.bits_[w.size()][r.index(w)] = 1;
    return r;
  }

  Dense ideal() const {
    Dense r = *this;
    for (std::size_t l = 1; l <= d_; ++l)
      for (std::uint64_t x = 0; x < pw_[l]; ++x)
        if (r.bits_[l - 1][x / n_] || r.bits_[l - 1][x % pw_[l - 1]]) r.bits_[l][x] = 1;
    return r;
  }

  friend Dense operator*(const Dense& a, const Dense& b) {
    Dense r(a.n_, a.d_);
    for (std::size_t l = 0; l <= a.d_; ++l)
      for (std::uint64_t x = 0; x < a.pw_[l]; ++x)
        for (std::size_t i = 0; i <= l; ++i) {
          auto p = a.pw_[l - i];
          if (a.bits_[i][x / p] && b.bits_[l - i][x % p]) {
            r.bits_[l][x] = 1;
            break;
          }
        }
    return r;
  }

  template <class F>
  Dense combine(const Dense& o, F f) const {
    Dense r(n_, d_);
    for (std::size_t l = 0; l <= d_; ++l)
      for (std::uint64_t x = 0; x < pw_[l]; ++x) r.bits_[l][x] = f(bits_[l][x], o.bits_[l][x]);
    return r;
  }
  friend Dense operator|(const Dense& a, const Dense& b) { return a.combine(b, [](bool x, bool y) { return x || y; }); }
  friend Dense operator&(const Dense& a, const Dense& b) { return a.combine(b, [](bool x, bool y) { return x && y; }); }
  friend Dense operator-(const Dense& a, const Dense& b) { return a.combine(b, [](bool x, bool y) { return x && !y; }); }

  FiniteLanguage words() const {
    std::vector<Word> v;
    for (std::size_t l = 0; l <= d_; ++l)
      for (std::uint64_t x = 0; x < pw_[l]; ++x)
        if (bits_[l][x]) {
          Word w;
          for (std::size_t i = l; i-- > 0;) w.push_back(static_cast<Symbol>((x / pw_[i]) % n_));
          v.push_back(std::move(w));
        }
    return FiniteLanguage(std::move(v));
  }

 private:
  std::uint64_t index(const Word& w) const {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < w.size(); ++i) x = x * n_ + w[i];
    return x;
  }

  std::size_t n_, d_;
  std::vector<std::uint64_t> pw_;
  std::vector<std::vector<std::uint8_t>> bits_;
};

constexpr std::uint64_t kDenseCap = 200'000'000;

}  // namespace

TruncatedLanguage govorov_chains_trunc(const TruncatedLanguage& l1, std::size_t alphabet_size, std::size_t k,
                                       std::size_t d) {
  if (k == 0) throw InputError("chain index must be at least 1");
  if (l1.exact_to() < d) throw BoundError("chain 1 is exact only to length " + std::to_string(l1.exact_to()));
  if (alphabet_size == 0) return TruncatedLanguage(d, {});
  std::uint64_t total = 0, p = 1;
  for (std::size_t l = 0; l <= d; ++l, p *= alphabet_size) {
    total += p;
    if (total > kDenseCap) throw ResourceError("too many words for the chain formulas at this length");
  }
  std::size_t n = alphabet_size;
  auto plus = Dense::words_from(n, d, 1);
  auto lang = Dense::from(l1.words(), n, d).ideal();
  std::size_t m = (k + 1) / 2;
  std::vector<Dense> power{Dense::words_from(n, d, 0)};
  for (std::size_t j = 1; j <= m + 1; ++j) power.push_back(power.back() * lang);
  Dense r(n, d);
  if (k % 2 == 0) {
    const auto& lk = power[m];
    r = ((plus * lk) & (lk * plus)) - ((plus * lk * plus) | power[m + 1]);
  } else {
    const auto& lk = power[m];
    r = ((plus * power[m - 1] * plus) & lk) - ((plus * lk) | (lk * plus));
  }
  return TruncatedLanguage(d, r.words());
}

}  // namespace nchs
