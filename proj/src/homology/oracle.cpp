#include <unordered_set>

#include "nchs/error.hpp"
#include "nchs/homology.hpp"
#include "nchs/text.hpp"

namespace nchs {

namespace {

FiniteLanguage word_list(std::string_view field, const Alphabet& a) {
  std::vector<Word> v;
  for (const auto& w : text::split(field, '|')) v.push_back(parse_word(text::trim(w), a));
  return FiniteLanguage(std::move(v));
}

CFGrammar grammar_at(const std::filesystem::path& base, std::string_view name, const Alphabet& a) {
  return with_terminals(load_grammar((base / std::string(text::trim(name))).string()), a);
}

// Parser per grammar with the spans it must test against the current word.
class RelationScanner {
 public:
  explicit RelationScanner(const RelationSet& rel) : rel_(rel) {
    for (const auto& w : rel.finite) {
      finite_.insert(w);
      if (std::find(lengths_.begin(), lengths_.end(), w.size()) == lengths_.end()) lengths_.push_back(w.size());
    }
    for (const auto& p : rel.patterns) pattern_parsers_.emplace_back(p.middle);
    for (const auto& g : rel.grammars) grammar_parsers_.emplace_back(g);
  }

  /// Some relation word is a suffix of w.
  bool suffix_hit(const Word& w) const {
    for (auto l : lengths_)
      if (l <= w.size() && finite_.count(w.suffix(l))) return true;
    for (std::size_t k = 0; k < rel_.patterns.size(); ++k) {
      const auto& p = rel_.patterns[k];
      for (const auto& rp : p.right) {
        if (!w.ends_with(rp)) continue;
        std::size_t end = w.size() - rp.size();
        auto starts = pattern_parsers_[k].chart(w, 0, end);
        for (const auto& r : p.left)
          for (std::size_t i = 0; i + r.size() <= end; ++i)
            if (starts[i + r.size()] && w.substr(i, r.size()) == r) return true;
      }
    }
    for (const auto& parser : grammar_parsers_) {
      auto starts = parser.chart(w, 0, w.size());
      for (std::size_t i = 0; i < w.size(); ++i)
        if (starts[i]) return true;
    }
    return false;
  }

 private:
  const RelationSet& rel_;
  std::unordered_set<Word, WordHash> finite_;
  std::vector<std::size_t> lengths_;
  std::vector<CykParser> pattern_parsers_, grammar_parsers_;
};

}  // namespace

RelationSet parse_relations(std::string_view input, const std::filesystem::path& base) {
  RelationSet r;
  bool have_alphabet = false;
  std::vector<Word> finite;
  for (const auto& line : text::content_lines(input)) {
    std::string rest;
    if (text::take_key(line, "alphabet", rest)) {
      r.alphabet = Alphabet(text::split_ws(rest));
      have_alphabet = true;
      continue;
    }
    if (!have_alphabet) throw InputError("relations: the alphabet line must come first");
    if (text::take_key(line, "finite", rest)) {
      for (const auto& w : word_list(rest, r.alphabet)) finite.push_back(w);
    } else if (text::take_key(line, "pattern", rest)) {
      auto parts = text::split(rest, ';');
      if (parts.size() != 3) throw InputError("pattern needs three fields: R ; grammar ; R'");
      r.patterns.push_back({word_list(parts[0], r.alphabet), grammar_at(base, parts[1], r.alphabet),
                            word_list(parts[2], r.alphabet)});
    } else if (text::take_key(line, "grammar", rest)) {
      r.grammars.push_back(grammar_at(base, rest, r.alphabet));
    } else {
      throw InputError("relations: unrecognised line '" + line + "'");
    }
  }
  if (!have_alphabet) throw InputError("relations: missing alphabet line");
  r.finite = FiniteLanguage(std::move(finite));
  return r;
}

RelationSet load_relations(const std::filesystem::path& path) {
  return parse_relations(text::read_file(path), path.parent_path());
}

TruncatedSeries hilbert_oracle(const RelationSet& rel, std::size_t d, std::uint64_t cap) {
  std::size_t n = rel.alphabet.size();
  if (rel.patterns.empty() && rel.grammars.empty()) {
    auto normal = complement(ideal_automaton(minimize_antichain(rel.finite), n).dfa).census(d);
    std::vector<Q> c;
    for (const auto& x : normal) c.emplace_back(x);
    return TruncatedSeries(std::move(c));
  }
  RelationScanner scan(rel);
  std::vector<Q> count(d + 1, 0);
  std::uint64_t visited = 0;
  Word w;
  // depth-first walk over normal words; next[k] is the letter to try at depth k
  std::vector<std::size_t> next{0};
  count[0] = 1;
  while (!next.empty()) {
    std::size_t depth = next.size() - 1;
    if (depth == d || next.back() == n) {
      next.pop_back();
      if (!w.empty()) w.pop_back();
      continue;
    }
    w.push_back(static_cast<Symbol>(next.back()++));
    if (++visited > cap) throw ResourceError("oracle scan exceeded " + std::to_string(cap) + " words");
    if (scan.suffix_hit(w)) {
      w.pop_back();
      continue;
    }
    count[w.size()] += 1;
    next.push_back(0);
  }
  return TruncatedSeries(std::move(count));
}

}  // namespace nchs
