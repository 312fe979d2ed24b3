#include "nchs/words.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>

#include "nchs/error.hpp"
#include "nchs/text.hpp"

namespace nchs {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxSize) throw InputError("alphabet too large");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty()) throw InputError("empty symbol name");
    if (std::any_of(n.begin(), n.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
      throw InputError("symbol name contains whitespace: '" + n + "'");
    if (!lookup_.emplace(n, static_cast<Symbol>(i)).second)
      throw InputError("duplicate symbol name: '" + n + "'");
  }
}

Alphabet::Alphabet(std::initializer_list<std::string_view> names)
    : Alphabet(std::vector<std::string>(names.begin(), names.end())) {}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Symbol Alphabet::index(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw InputError("unknown symbol: '" + std::string(name) + "'");
}

Alphabet Alphabet::disjoint_union(const Alphabet& a, const Alphabet& b) {
  std::vector<std::string> names = a.names_;
  for (const auto& n : b.names_) {
    if (a.find(n)) throw InputError("alphabets are not disjoint: '" + n + "'");
    names.push_back(n);
  }
  return Alphabet(std::move(names));
}

Word::Word(std::initializer_list<Symbol> symbols) {
  for (Symbol s : symbols) push_back(s);
}

Word::Word(std::span<const Symbol> symbols) {
  for (Symbol s : symbols) push_back(s);
}

std::string format_word(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alphabet.name(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  auto tokens = text::split_ws(text);
  Word w;
  if (tokens.size() == 1 && tokens[0] == "eps") return w;
  for (const auto& t : tokens) w.push_back(alphabet.index(t));
  return w;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << int(w[i]);
  return os << ']';
}

FiniteLanguage::FiniteLanguage(std::vector<Word> words) : words_(std::move(words)) {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool FiniteLanguage::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

std::span<const Word> FiniteLanguage::of_length(std::size_t len) const {
  auto lo = std::partition_point(words_.begin(), words_.end(),
                                 [len](const Word& w) { return w.size() < len; });
  auto hi = std::partition_point(lo, words_.end(), [len](const Word& w) { return w.size() == len; });
  return {lo, hi};
}

std::vector<std::size_t> FiniteLanguage::census(std::size_t bound) const {
  std::vector<std::size_t> out(bound + 1, 0);
  for (const auto& w : words_)
    if (w.size() <= bound) ++out[w.size()];
  return out;
}

TruncatedLanguage::TruncatedLanguage(std::size_t bound, FiniteLanguage words, bool complete)
    : bound_(bound), words_(std::move(words)), complete_(complete) {
  if (!words_.empty() && words_.max_length() > bound_)
    throw InputError("truncated language holds a word longer than its bound");
}

TruncatedLanguage TruncatedLanguage::finite(FiniteLanguage words) {
  std::size_t b = words.max_length();
  return TruncatedLanguage(b, std::move(words), true);
}

std::size_t TruncatedLanguage::exact_to() const noexcept {
  return complete_ ? std::numeric_limits<std::size_t>::max() : bound_;
}

std::size_t TruncatedLanguage::min_word_length() const noexcept {
  if (!words_.empty()) return words_.min_length();
  return complete_ ? std::numeric_limits<std::size_t>::max() : bound_ + 1;
}

FiniteLanguage minimize_antichain(const FiniteLanguage& words) {
  // Canonical order puts shorter words first, so each word only needs checking
  // against the already kept (shorter or equal) ones.
  std::vector<Word> kept;
  for (const auto& w : words) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Word& k) { return w.contains(k); });
    if (!redundant) kept.push_back(w);
  }
  return FiniteLanguage(std::move(kept));
}

bool is_antichain(const FiniteLanguage& words) {
  for (const auto& a : words)
    for (const auto& b : words)
      if (a != b && a.contains(b)) return false;
  return true;
}

bool is_normal(const Word& word, const FiniteLanguage& basis) {
  return std::none_of(basis.begin(), basis.end(), [&](const Word& b) { return word.contains(b); });
}

namespace {

std::size_t sat_sub(std::size_t a, std::size_t b) { return a > b ? a - b : 0; }

}  // namespace

TruncatedLanguage trunc_product(const TruncatedLanguage& a, const TruncatedLanguage& b,
                                std::size_t bound) {
  if (a.exact_to() < sat_sub(bound, b.min_word_length()) ||
      b.exact_to() < sat_sub(bound, a.min_word_length()))
    throw BoundError("trunc_product: factors are not exact far enough for bound " +
                     std::to_string(bound));
  std::vector<Word> out;
  for (const auto& u : a.words()) {
    if (u.size() > bound) break;
    for (const auto& v : b.words()) {
      if (u.size() + v.size() > bound) break;
      out.push_back(u + v);
    }
  }
  bool complete = a.complete() && b.complete() &&
                  a.words().max_length() + b.words().max_length() <= bound;
  return TruncatedLanguage(bound, FiniteLanguage(std::move(out)), complete);
}

TruncatedLanguage trunc_ideal(const TruncatedLanguage& basis, std::size_t alphabet_size,
                              std::size_t bound) {
  if (basis.exact_to() < bound)
    throw BoundError("trunc_ideal: basis is exact only to degree " + std::to_string(basis.bound()));
  std::vector<Word> gens;
  for (const auto& w : basis.words())
    if (w.size() <= bound) gens.push_back(w);
  std::vector<Word> out;
  if (gens.empty()) return TruncatedLanguage(bound, {}, false);
  // Depth-first over all words; a word is in the ideal iff its prefix already is or
  // some generator is a suffix of it.
  Word cur;
  auto rec = [&](auto&& self, bool inside) -> void {
    if (inside) out.push_back(cur);
    if (cur.size() == bound) return;
    for (std::size_t s = 0; s < alphabet_size; ++s) {
      cur.push_back(static_cast<Symbol>(s));
      bool in = inside || std::any_of(gens.begin(), gens.end(), [&](const Word& g) { return cur.ends_with(g); });
      self(self, in);
      cur.pop_back();
    }
  };
  bool eps_in = std::any_of(gens.begin(), gens.end(), [](const Word& g) { return g.empty(); });
  rec(rec, eps_in);
  return TruncatedLanguage(bound, FiniteLanguage(std::move(out)), false);
}

TruncatedLanguage trunc_boolean(const TruncatedLanguage& a, const TruncatedLanguage& b, SetOp op) {
  bool complete = a.complete() && b.complete();
  std::size_t bound = complete ? std::max(a.bound(), b.bound()) : std::min(a.exact_to(), b.exact_to());
  auto clip = [bound](const FiniteLanguage& l) {
    std::vector<Word> v;
    for (const auto& w : l)
      if (w.size() <= bound) v.push_back(w);
    return v;
  };
  auto x = clip(a.words());
  auto y = clip(b.words());
  std::vector<Word> out;
  switch (op) {
    case SetOp::Union:
      std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
      break;
    case SetOp::Intersection:
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
      break;
    case SetOp::Difference:
      std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
      break;
  }
  return TruncatedLanguage(bound, FiniteLanguage(std::move(out)), complete);
}

std::vector<Word> all_words(std::size_t alphabet_size, std::size_t lo, std::size_t hi) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 0; len <= hi; ++len) {
    if (len >= lo) out.insert(out.end(), layer.begin(), layer.end());
    if (len == hi) break;
    std::vector<Word> next;
    next.reserve(layer.size() * alphabet_size);
    for (const auto& w : layer)
      for (std::size_t s = 0; s < alphabet_size; ++s) {
        Word x = w;
        x.push_back(static_cast<Symbol>(s));
        next.push_back(std::move(x));
      }
    layer = std::move(next);
  }
  return out;
}

LanguageText parse_language(std::string_view input, const Alphabet* alphabet) {
  LanguageText result;
  std::vector<std::string> names;
  bool fixed = false;
  if (alphabet) {
    result.alphabet = *alphabet;
    fixed = true;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& line : text::content_lines(input)) {
    std::string rest;
    if (text::take_key(line, "alphabet", rest)) {
      if (fixed) {
        if (Alphabet(text::split_ws(rest)) != result.alphabet)
          throw InputError("language alphabet does not match the expected alphabet");
      } else {
        result.alphabet = Alphabet(text::split_ws(rest));
        fixed = true;
      }
      continue;
    }
    rows.push_back(text::split_ws(line));
  }
  if (!fixed) {
    for (const auto& r : rows)
      for (const auto& tok : r)
        if (tok != "eps" && std::find(names.begin(), names.end(), tok) == names.end()) names.push_back(tok);
    result.alphabet = Alphabet(names);
  }
  std::vector<Word> words;
  for (const auto& r : rows) {
    Word w;
    if (!(r.size() == 1 && r[0] == "eps"))
      for (const auto& tok : r) w.push_back(result.alphabet.index(tok));
    words.push_back(std::move(w));
  }
  result.words = FiniteLanguage(std::move(words));
  return result;
}

std::string format_language(const FiniteLanguage& words, const Alphabet& alphabet) {
  std::string out = "alphabet:";
  for (const auto& n : alphabet.names()) out += " " + n;
  out += '\n';
  for (const auto& w : words) out += format_word(w, alphabet) + '\n';
  return out;
}

}  // namespace nchs
