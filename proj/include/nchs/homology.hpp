#pragma once

// Chain languages of monomial algebras and Hilbert series assembled from them.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nchs/csys.hpp"
#include "nchs/grammar.hpp"
#include "nchs/regular.hpp"
#include "nchs/words.hpp"

namespace nchs {

/// A chain w = s t: `prefix` is |s|, the length of its prefix chain.
struct ChainElement {
  Word word;
  std::size_t prefix = 0;
};

struct ChainComputation {
  /// chains[i - 1] is L_i.
  std::vector<std::vector<ChainElement>> chains;
  /// Set when some L_j came out empty: gl.dim = j. Unset means gl.dim > k_max.
  std::optional<std::size_t> global_dimension;

  FiniteLanguage language(std::size_t i) const;
};

/// L_1..L_k for a finite antichain L_1 of words of length >= 2.
ChainComputation chains_finite(const FiniteLanguage& l1, std::size_t k_max);

/// L_k up to length d from the set formulas in L = X* L_1 X*.
TruncatedLanguage govorov_chains_trunc(const TruncatedLanguage& l1, std::size_t alphabet_size, std::size_t k,
                                       std::size_t d);

/// R L(G) R' with finite R, R'.
struct PatternFamily {
  FiniteLanguage left;
  CFGrammar middle;
  FiniteLanguage right;
};

/// Membership descriptor for the relation words of a monomial algebra.
struct RelationSet {
  Alphabet alphabet;
  FiniteLanguage finite;
  std::vector<PatternFamily> patterns;
  /// Languages given whole by a grammar.
  std::vector<CFGrammar> grammars;
};

/// Lines: `alphabet:`, then any of `finite: w | w ...`, `pattern: R ; <grammar> ; R'`,
/// `grammar: <file>`. Grammar paths are relative to `base`.
RelationSet parse_relations(std::string_view text, const std::filesystem::path& base = {});
RelationSet load_relations(const std::filesystem::path& path);

inline constexpr std::uint64_t kDefaultOracleCap = 100'000'000;

/// Number of normal words of each length 0..d.
TruncatedSeries hilbert_oracle(const RelationSet& rel, std::size_t d, std::uint64_t cap = kDefaultOracleCap);

struct ChainDescriptor {
  enum class Kind { Finite, Grammar, Rational };
  Kind kind = Kind::Finite;
  FiniteLanguage words;
  CFGrammar grammar;
  RationalFunction value;
  std::string source;
};

struct Uchain2Descriptor {
  FiniteLanguage r, rp;
  Alphabet x;
  CFGrammar l;
};

struct HomologySpec {
  std::size_t n = 0;
  std::optional<Alphabet> alphabet;
  std::vector<ChainDescriptor> chains;
  std::optional<std::size_t> global_dimension;
  std::optional<Uchain2Descriptor> uchain2;
  std::optional<RelationSet> oracle;
};

/// Sections `n:`, `alphabet:`, `chain i: grammar <file> | finite <file> | rational <expr>`,
/// `gldim: <k+1> | infinite-uchain2 R=<file> Rp=<file> L=<grammar>`, `oracle: <relations file>`.
HomologySpec parse_homology_spec(std::string_view text, const std::filesystem::path& base = {});
HomologySpec load_homology_spec(const std::filesystem::path& path);

struct HilbertResult {
  std::string system;
  std::vector<std::string> merged;
  Elimination elimination;
  AlgebraicPoly p;  // in E = 1/HS
  AlgebraicPoly q;  // in H = HS
  TruncatedSeries series;
  std::optional<std::string> closed_form;
  std::vector<AmbiguityReport> certificates;  // one per grammar chain
  bool certified = true;
  /// Oracle coefficients compared against the series, when a relations file is named.
  std::optional<TruncatedSeries> oracle;
};

/// Euler characteristic system, elimination to p(E), and Newton lifting of q(H).
///
/// Throws MathError when the lifted root disagrees with the chain series or the oracle.
HilbertResult hilbert_from_homology(const HomologySpec& spec, std::size_t d,
                                    std::size_t cert_deg = kDefaultCertDegree, std::size_t oracle_deg = 8);

struct Uchain2Result {
  RationalFunction gamma_r, gamma_rp, gamma_q;
  GammaResult gamma_l;
  std::string closed_form;
  TruncatedSeries inverse_series;
  TruncatedSeries series;
};

/// Relations R L R' with R, R' over X and L over a disjoint Y; nm = |X| + |Y|.
Uchain2Result hilbert_uchain2(const RegularLanguage& r, const RegularLanguage& rp, const CFGrammar& l,
                              std::size_t nm, std::size_t d, std::size_t cert_deg = kDefaultCertDegree);

struct ChainCheck {
  std::size_t index = 0;
  bool agrees = true;
  std::size_t declared = 0, computed = 0;
  std::optional<Word> witness;
};

/// Compares each declared chain language with the set formulas up to length c,
/// including emptiness of L_gldim.
std::vector<ChainCheck> verify_chains(const HomologySpec& spec, std::size_t c);

}  // namespace nchs
