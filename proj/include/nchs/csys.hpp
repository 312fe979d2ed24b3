#pragma once

// Commutative algebraic systems of grammars and their generating functions.

#include <optional>
#include <string>
#include <vector>

#include "nchs/algebra/multipoly.hpp"
#include "nchs/grammar.hpp"
#include "nchs/regular.hpp"

namespace nchs {

/// One equation A = sum over productions A -> alpha of t^(terminals in alpha) * (variables of alpha).
struct AlgebraicSystem {
  MultiPolynomial::Names unknowns;
  /// equations[i] = A_i - rhs_i
  std::vector<MultiPolynomial> equations;
  std::vector<MultiPolynomial> rhs;

  std::string to_string() const;
};

AlgebraicSystem build_system(const CFGrammar& g);

/// Generating function of a linear grammar (at most one variable per right-hand side).
RationalFunction gamma_linear(const CFGrammar& g);
/// Generating function of a right-linear grammar.
RationalFunction gamma_rational(const CFGrammar& g);

/// Generating function of the language accepted by a complete automaton.
RationalFunction gamma_automaton(const Dfa& a);

inline constexpr std::size_t kDefaultCertDegree = 12;

struct GammaResult {
  std::string variable;
  AlgebraicPoly poly;
  TruncatedSeries series;
  /// Unambiguity checked up to this degree; the tag below records the outcome.
  AmbiguityReport certificate;
  bool certified() const { return certificate.unambiguous; }
  Elimination elimination;
};

/// Minimal polynomial of gamma(L_G(keep)) and its series to degree d.
///
/// Throws MathError when the lifted series disagrees with derivation counts, or
/// (for certified grammars) with the number of distinct words per length.
GammaResult gamma_algebraic(const CFGrammar& g, std::size_t d, std::size_t cert_deg = kDefaultCertDegree,
                            std::optional<std::size_t> keep = std::nullopt);

/// Derivation-count series of every variable to degree d.
std::vector<TruncatedSeries> derivation_series(const CFGrammar& g, std::size_t d);

/// Substitutes one series per unknown into every equation; true iff all vanish mod t^(d+1).
bool system_vanishes(const AlgebraicSystem& s, const std::vector<TruncatedSeries>& values, std::size_t d);

}  // namespace nchs
