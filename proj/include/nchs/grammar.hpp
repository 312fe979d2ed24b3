#pragma once

// Context-free grammars: validation, bounded enumeration, derivation counting,
// bounded unambiguity checks and membership.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nchs/words.hpp"

namespace nchs {

/// One right-hand side symbol: a terminal or a variable, by index.
struct GSym {
  bool is_var = false;
  std::uint16_t id = 0;

  static GSym term(std::size_t i) { return {false, static_cast<std::uint16_t>(i)}; }
  static GSym var(std::size_t i) { return {true, static_cast<std::uint16_t>(i)}; }
  friend auto operator<=>(const GSym&, const GSym&) = default;
};

struct Production {
  std::size_t lhs = 0;
  std::vector<GSym> rhs;
  friend bool operator==(const Production&, const Production&) = default;
};

class CFGrammar {
 public:
  CFGrammar() = default;
  /// Checks the structural invariants: disjoint alphabets, valid indices, at least one
  /// production per variable, no duplicate productions.
  CFGrammar(Alphabet terminals, Alphabet variables, std::size_t start, std::vector<Production> productions);

  const Alphabet& terminals() const noexcept { return terminals_; }
  const Alphabet& variables() const noexcept { return variables_; }
  std::size_t start() const noexcept { return start_; }
  const std::vector<Production>& productions() const noexcept { return productions_; }
  /// Indices into productions() with the given left-hand side, in declaration order.
  const std::vector<std::size_t>& productions_of(std::size_t var) const { return by_lhs_.at(var); }

  std::size_t num_variables() const noexcept { return variables_.size(); }
  std::size_t num_terminals() const noexcept { return terminals_.size(); }

  /// The same grammar with another start variable.
  CFGrammar with_start(std::size_t start) const;

 private:
  Alphabet terminals_;
  Alphabet variables_;
  std::size_t start_ = 0;
  std::vector<Production> productions_;
  std::vector<std::vector<std::size_t>> by_lhs_;
};

/// The same grammar over a larger terminal alphabet, matching terminals by name.
CFGrammar with_terminals(const CFGrammar& g, const Alphabet& alphabet);

/// Grammar file: `terminals:`, `variables:`, `start:` headers, then `A -> alpha | beta`.
CFGrammar parse_grammar(std::string_view text);
CFGrammar load_grammar(const std::string& path);
std::string format_grammar(const CFGrammar& g);
std::string format_rhs(const CFGrammar& g, const std::vector<GSym>& rhs);

struct GrammarReport {
  std::vector<bool> productive;
  std::vector<bool> reachable;
  std::vector<bool> nullable;
  bool has_unit_or_epsilon_cycle = false;
  /// Variables on some cycle A =>+ A that generates no terminal.
  std::vector<std::size_t> cycle_variables;
  bool is_right_linear = false;
};

GrammarReport validate(const CFGrammar& g);

/// Throws InputError when a useful variable lies on a unit/epsilon cycle.
void require_finite_counts(const CFGrammar& g, const GrammarReport& report);

/// Words generated from each variable, per length.
struct Enumeration {
  std::size_t bound = 0;
  /// words[A][k]: sorted distinct words of length k derivable from A.
  std::vector<std::vector<std::vector<Word>>> words;
};

inline constexpr std::size_t kDefaultEnumerationCap = 10'000'000;

Enumeration enumerate_all(const CFGrammar& g, std::size_t d, std::size_t cap = kDefaultEnumerationCap);
/// Distinct words of L(G) up to length d.
TruncatedLanguage enumerate(const CFGrammar& g, std::size_t d, std::size_t cap = kDefaultEnumerationCap);

/// c[A][k]: number of leftmost derivations from A of terminal words of length k.
std::vector<std::vector<mpz_class>> count_derivations(const CFGrammar& g, std::size_t d);

/// Number of parse trees of w rooted at the start variable.
mpz_class count_parses(const CFGrammar& g, const Word& w);

struct AmbiguityReport {
  bool unambiguous = true;
  std::size_t bound = 0;
  /// Shortest word with two or more parse trees, when one was found.
  std::optional<Word> counterexample;
  mpz_class counterexample_parses;
};

AmbiguityReport certify_unambiguous(const CFGrammar& g, std::size_t d);

/// Membership test on a binarised copy of the grammar; accepts any grammar,
/// including ones with unit or epsilon cycles.
class CykParser {
 public:
  explicit CykParser(const CFGrammar& g);
  bool accepts(const Word& w) const { return accepts(w, 0, w.size()); }
  /// Membership of the factor w[from, to).
  bool accepts(const Word& w, std::size_t from, std::size_t to) const;
  /// r[i] for from <= i <= to: membership of w[i, to). One chart for all of them.
  std::vector<bool> chart(const Word& w, std::size_t from, std::size_t to) const;

 private:
  struct Binary {
    std::uint32_t lhs, left, right;
  };
  struct Unary {
    std::uint32_t lhs, child;
  };
  std::size_t num_symbols_ = 0;
  std::uint32_t start_ = 0;
  std::vector<bool> nullable_;
  std::vector<std::vector<std::uint32_t>> by_terminal_;
  std::vector<Binary> binary_;
  std::vector<Unary> unary_;
};

bool cyk_member(const CFGrammar& g, const Word& w);

/// Removes unproductive and unreachable variables; keeps the start even if unproductive.
CFGrammar trim(const CFGrammar& g);

}  // namespace nchs
