#pragma once

#include <ostream>
#include <string>

#include "nchs/algebra/series.hpp"
#include "nchs/grammar.hpp"
#include "nchs/words.hpp"

namespace nchs {

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) { return os << s.to_string(); }

}  // namespace nchs

namespace nchs::testing {

inline std::string data_path(const std::string& name) { return std::string(NCHS_DATA_DIR) + "/" + name; }

inline CFGrammar grammar(const std::string& name) { return load_grammar(data_path(name)); }

/// Words from their text form over a fixed alphabet, e.g. {"x y", "eps"}.
inline FiniteLanguage lang(const Alphabet& a, std::initializer_list<const char*> words) {
  std::vector<Word> v;
  for (const char* w : words) v.push_back(parse_word(w, a));
  return FiniteLanguage(std::move(v));
}

/// Words written as letter strings over single-letter symbol names, e.g. "xyx".
inline Word w(const Alphabet& a, std::string_view letters) {
  Word r;
  for (char c : letters) r.push_back(a.index(std::string(1, c)));
  return r;
}

inline FiniteLanguage lw(const Alphabet& a, std::initializer_list<const char*> words) {
  std::vector<Word> v;
  for (const char* s : words) v.push_back(w(a, s));
  return FiniteLanguage(std::move(v));
}

}  // namespace nchs::testing
