#pragma once

// Finite automata, right quotients and the Myhill-Nerode grammar construction.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "nchs/grammar.hpp"
#include "nchs/words.hpp"

namespace nchs {

/// Complete deterministic automaton over symbols 0..num_symbols-1.
struct Dfa {
  std::size_t num_symbols = 0;
  std::uint32_t initial = 0;
  std::vector<std::vector<std::uint32_t>> delta;  // delta[state][symbol]
  std::vector<bool> accepting;

  std::size_t size() const noexcept { return delta.size(); }
  std::uint32_t run(std::uint32_t state, const Word& w) const;
  bool accepts(const Word& w) const { return accepting[run(initial, w)]; }

  /// Number of accepted words of each length 0..d.
  std::vector<mpz_class> census(std::size_t d) const;
  /// Accepted words up to length d, in canonical order.
  FiniteLanguage words_upto(std::size_t d) const;
};

/// Automaton with epsilon moves; symbol kEps marks an epsilon edge.
struct Nfa {
  static constexpr std::uint32_t kEps = static_cast<std::uint32_t>(-1);
  struct Edge {
    std::uint32_t symbol, target;
  };
  std::size_t num_symbols = 0;
  std::vector<std::vector<Edge>> edges;
  std::vector<std::uint32_t> initial;
  std::vector<bool> accepting;

  std::uint32_t add_state(bool accept = false);
  static Nfa from_dfa(const Dfa& d);
};

inline constexpr std::size_t kDefaultStateCap = 100'000;

Dfa determinize(const Nfa& n, std::size_t cap = kDefaultStateCap);
/// Reachable part, merged by partition refinement; states renumbered in BFS order.
Dfa minimize(const Dfa& d);
bool equivalent(const Dfa& a, const Dfa& b);

Dfa universal_dfa(std::size_t num_symbols);
Dfa empty_dfa(std::size_t num_symbols);
Dfa finite_dfa(const FiniteLanguage& words, std::size_t num_symbols);
Dfa complement(const Dfa& d);
Dfa product(const Dfa& a, const Dfa& b, SetOp op);
Dfa concat(const Dfa& a, const Dfa& b, std::size_t cap = kDefaultStateCap);

/// Set of nonempty proper prefixes of basis words matched as suffixes of the input
/// read so far, or the absorbing state once a basis word has occurred.
struct QuotientState {
  bool absorbed = false;
  std::vector<Word> active;
  friend bool operator==(const QuotientState&, const QuotientState&) = default;
};

struct IdealAutomaton {
  Dfa dfa;  // accepts X* basis X*
  std::vector<QuotientState> states;
};

/// Aho-Corasick automaton of the ideal generated by a finite antichain.
IdealAutomaton ideal_automaton(const FiniteLanguage& basis, std::size_t num_symbols);

/// A regular language given by an antichain basis (its ideal), a right-linear
/// grammar, or an explicit automaton.
class RegularLanguage {
 public:
  struct Ideal {
    FiniteLanguage basis;
  };
  using Form = std::variant<Ideal, CFGrammar, Dfa>;

  RegularLanguage(Alphabet alphabet, Form form);
  static RegularLanguage ideal(Alphabet alphabet, FiniteLanguage basis);
  static RegularLanguage grammar(CFGrammar g);
  static RegularLanguage automaton(Alphabet alphabet, Dfa d);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Form& form() const noexcept { return form_; }
  /// Complete DFA for the language (not necessarily minimal).
  Dfa to_dfa(std::size_t cap = kDefaultStateCap) const;
  bool contains(const Word& w) const;

 private:
  Alphabet alphabet_;
  Form form_;
};

/// Nfa whose states are grammar variables; requires A -> eps / A -> x B shapes.
Nfa right_linear_nfa(const CFGrammar& g);

/// w^{-1} L as an automaton language: the initial state is moved along w.
RegularLanguage right_quotient(const RegularLanguage& l, const Word& w);

/// Right-quotient breadth-first search with FIFO discovery order; variables are
/// named A1, A2, ... by discovery position.
CFGrammar myhill_nerode_grammar(const RegularLanguage& l, std::size_t cap = kDefaultStateCap);

/// Overlap words of R X* and X* R' that do not factor as R X* R'.
Dfa overlap_language(const Dfa& r, const Dfa& rp, std::size_t cap = kDefaultStateCap);

/// `state symbol -> state` lines followed by `accepting:` and `initial:`.
std::string dump_automaton(const Dfa& d, const Alphabet& alphabet);

}  // namespace nchs
