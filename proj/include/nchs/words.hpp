#pragma once

// Words and languages over finite alphabets.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace nchs {

using Symbol = std::uint8_t;

/// Ordered set of named symbols. The order is fixed and drives all tie-breaking.
class Alphabet {
 public:
  static constexpr std::size_t kMaxSize = 255;

  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);
  Alphabet(std::initializer_list<std::string_view> names);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& name(Symbol s) const { return names_.at(s); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<Symbol> find(std::string_view name) const;
  /// Throws InputError for unknown names.
  Symbol index(std::string_view name) const;

  /// Concatenation of two alphabets; rejects name collisions.
  static Alphabet disjoint_union(const Alphabet& a, const Alphabet& b);

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Symbol> lookup_;
};

/// A word is a sequence of alphabet positions; the empty word is 1.
///
/// Ordering is canonical: shorter words first, then lexicographic by position.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Symbol> symbols);
  explicit Word(std::span<const Symbol> symbols);

  static Word from_raw(std::string raw) {
    Word w;
    w.data_ = std::move(raw);
    return w;
  }

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  Symbol operator[](std::size_t i) const { return static_cast<Symbol>(data_[i]); }
  Symbol back() const { return static_cast<Symbol>(data_.back()); }

  void push_back(Symbol s) { data_.push_back(static_cast<char>(s)); }
  void pop_back() { data_.pop_back(); }

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return from_raw(data_.substr(pos, len));
  }
  Word prefix(std::size_t len) const { return substr(0, len); }
  Word suffix(std::size_t len) const { return substr(size() - len); }

  bool contains(const Word& factor) const { return data_.find(factor.data_) != std::string::npos; }
  bool starts_with(const Word& p) const { return data_.starts_with(p.data_); }
  bool ends_with(const Word& s) const { return data_.ends_with(s.data_); }

  Word& operator+=(const Word& other) {
    data_ += other.data_;
    return *this;
  }
  friend Word operator+(Word a, const Word& b) {
    a += b;
    return a;
  }

  const std::string& raw() const noexcept { return data_; }

  friend bool operator==(const Word& a, const Word& b) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    int r = a.data_.compare(b.data_);
    return r < 0 ? std::strong_ordering::less
                 : (r > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  std::string data_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept { return std::hash<std::string>{}(w.raw()); }
};

/// Text form: symbol names separated by single spaces, `eps` for the empty word.
std::string format_word(const Word& w, const Alphabet& alphabet);
Word parse_word(std::string_view text, const Alphabet& alphabet);

/// Finite set of words kept in canonical order without duplicates.
class FiniteLanguage {
 public:
  FiniteLanguage() = default;
  FiniteLanguage(std::vector<Word> words);
  FiniteLanguage(std::initializer_list<Word> words) : FiniteLanguage(std::vector<Word>(words)) {}

  std::size_t size() const noexcept { return words_.size(); }
  bool empty() const noexcept { return words_.empty(); }
  bool contains(const Word& w) const;

  auto begin() const noexcept { return words_.begin(); }
  auto end() const noexcept { return words_.end(); }
  const std::vector<Word>& words() const noexcept { return words_; }

  /// Words of exactly the given length, as a contiguous range.
  std::span<const Word> of_length(std::size_t len) const;
  std::size_t max_length() const noexcept { return words_.empty() ? 0 : words_.back().size(); }
  std::size_t min_length() const noexcept { return words_.empty() ? 0 : words_.front().size(); }

  /// Number of words per length 0..bound.
  std::vector<std::size_t> census(std::size_t bound) const;

  friend bool operator==(const FiniteLanguage&, const FiniteLanguage&) = default;

 private:
  std::vector<Word> words_;
};

/// A window onto a possibly infinite language: exactly its words of length <= bound.
///
/// `complete` records that the underlying language has no words beyond the bound,
/// i.e. the stored set is the whole language. Operations use it to decide exactness.
class TruncatedLanguage {
 public:
  TruncatedLanguage() = default;
  TruncatedLanguage(std::size_t bound, FiniteLanguage words, bool complete = false);

  /// A finite language stored in full.
  static TruncatedLanguage finite(FiniteLanguage words);

  std::size_t bound() const noexcept { return bound_; }
  bool complete() const noexcept { return complete_; }
  const FiniteLanguage& words() const noexcept { return words_; }

  /// Largest length up to which membership is known (infinite when complete).
  std::size_t exact_to() const noexcept;
  /// Lower bound on the length of any word of the underlying language.
  std::size_t min_word_length() const noexcept;

  friend bool operator==(const TruncatedLanguage&, const TruncatedLanguage&) = default;

 private:
  std::size_t bound_ = 0;
  FiniteLanguage words_;
  bool complete_ = false;
};

/// Subset of words none of which contains another as a factor.
FiniteLanguage minimize_antichain(const FiniteLanguage& words);
bool is_antichain(const FiniteLanguage& words);

/// True iff no basis element occurs as a contiguous factor of the word.
bool is_normal(const Word& word, const FiniteLanguage& basis);

/// All concatenations uv (u in a, v in b) with |uv| <= bound.
///
/// Throws BoundError unless the inputs determine the product exactly up to the bound:
/// every factor u of a product word of length <= bound has |u| <= bound - min|b|,
/// so a must be exact that far (symmetrically for b).
TruncatedLanguage trunc_product(const TruncatedLanguage& a, const TruncatedLanguage& b,
                                std::size_t bound);

/// Words of length <= bound over an alphabet of `alphabet_size` symbols containing
/// some basis element as a factor.
TruncatedLanguage trunc_ideal(const TruncatedLanguage& basis, std::size_t alphabet_size,
                              std::size_t bound);

enum class SetOp { Union, Intersection, Difference };

/// Set operation restricted to the common exact range of both arguments.
TruncatedLanguage trunc_boolean(const TruncatedLanguage& a, const TruncatedLanguage& b, SetOp op);

/// All words of length lo..hi over n symbols, in canonical order.
std::vector<Word> all_words(std::size_t alphabet_size, std::size_t lo, std::size_t hi);

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Language file: one word per line, `#` comments, optional `alphabet:` header.
/// Without a header (and without a given alphabet) symbols are numbered in order of
/// first appearance.
struct LanguageText {
  Alphabet alphabet;
  FiniteLanguage words;
};
LanguageText parse_language(std::string_view text, const Alphabet* alphabet = nullptr);
std::string format_language(const FiniteLanguage& words, const Alphabet& alphabet);

}  // namespace nchs
