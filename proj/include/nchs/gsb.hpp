#pragma once

// Degree-truncated Groebner-Shirshov completion for homogeneous two-sided ideals.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nchs/algebra/rational.hpp"
#include "nchs/grammar.hpp"
#include "nchs/words.hpp"

namespace nchs {

/// Graded lexicographic order: longer words are larger, ties broken left to right
/// by symbol priority.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  /// `priority` lists the symbols from highest to lowest.
  explicit MonomialOrder(std::vector<Symbol> priority);
  /// Symbol 0 highest, then 1, ...
  static MonomialOrder by_index(std::size_t num_symbols);

  /// a < b in the order.
  bool less(const Word& a, const Word& b) const;
  const std::vector<Symbol>& priority() const noexcept { return priority_; }

 private:
  std::vector<Symbol> priority_;
  std::vector<std::size_t> rank_;  // 0 = highest
};

class NCPolynomial {
 public:
  NCPolynomial() = default;
  explicit NCPolynomial(const Word& w, const Q& c = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Word, Q>& terms() const noexcept { return terms_; }
  void add_term(const Word& w, const Q& c);

  /// Length shared by all terms; nullopt when mixed or zero.
  std::optional<std::size_t> homogeneous_degree() const;
  /// Requires a nonzero polynomial.
  Word leading_monomial(const MonomialOrder& order) const;
  const Q& coefficient(const Word& w) const;

  NCPolynomial scaled(const Q& c) const;
  /// u f v
  NCPolynomial wrapped(const Word& u, const Word& v) const;
  friend NCPolynomial operator+(const NCPolynomial& a, const NCPolynomial& b);
  friend NCPolynomial operator-(const NCPolynomial& a, const NCPolynomial& b);
  friend bool operator==(const NCPolynomial&, const NCPolynomial&) = default;

  /// Terms from the leading one down, e.g. `a' x - x a'`.
  std::string to_string(const Alphabet& alphabet, const MonomialOrder& order) const;

 private:
  std::map<Word, Q> terms_;
};

/// Normal form: no term contains a leading monomial of `basis` as a factor.
NCPolynomial nc_reduce(const NCPolynomial& f, const std::vector<NCPolynomial>& basis, const MonomialOrder& order);

inline constexpr std::size_t kDefaultGsTermCap = 2'000'000;

struct GsOptions {
  /// Shuffles the overlap candidates of each degree; the result must not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
  /// Cap on the total number of terms held by the candidates of one degree.
  std::size_t term_cap = kDefaultGsTermCap;
};

/// Reduced GS basis elements with leading monomial of length <= d, monic, sorted by
/// leading monomial. Input must be homogeneous.
std::vector<NCPolynomial> gs_complete(const std::vector<NCPolynomial>& relations, const MonomialOrder& order,
                                      std::size_t d, const GsOptions& options = {});

/// Leading monomials of a reduced basis; throws MathError if they are not an antichain.
FiniteLanguage leading_language(const std::vector<NCPolynomial>& basis, const MonomialOrder& order);

/// True iff every overlap of basis leading words of length <= d reduces to zero.
bool overlaps_resolve(const std::vector<NCPolynomial>& basis, const MonomialOrder& order, std::size_t d);

struct LeadingComparison {
  std::vector<Word> missing;  // predicted, not computed
  std::vector<Word> extra;    // computed, not predicted
  bool agrees() const { return missing.empty() && extra.empty(); }
};

/// Symmetric difference of the two languages cut at length d.
LeadingComparison compare_leading(const FiniteLanguage& predicted, const FiniteLanguage& computed, std::size_t d);
/// Symmetric difference between `computed` and finite ∪ L(predicted), both cut at length d.
LeadingComparison compare_leading(const CFGrammar& predicted, const FiniteLanguage& finite,
                                  const FiniteLanguage& computed, std::size_t d);

struct Presentation {
  Alphabet alphabet;
  MonomialOrder order;
  std::vector<NCPolynomial> relations;
};

/// `alphabet:` line in priority order (highest first), then one relation per line as a
/// signed sum of monomials with optional rational coefficients, e.g. `a' x - 2 x a'`.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::filesystem::path& path);

}  // namespace nchs
