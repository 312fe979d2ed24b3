#pragma once

// Commutative polynomials over Q(t), lex Groebner bases and elimination.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nchs/algebra/rational.hpp"
#include "nchs/algebra/series.hpp"

namespace nchs {

using Exps = std::vector<std::uint16_t>;

/// Polynomial in named unknowns A_1..A_m with coefficients in Q(t).
///
/// Terms are kept in lexicographic order with the first variable most significant.
class MultiPolynomial {
 public:
  using Terms = std::map<Exps, RationalFunction, std::greater<Exps>>;
  using Names = std::shared_ptr<const std::vector<std::string>>;

  MultiPolynomial() : names_(std::make_shared<std::vector<std::string>>()) {}
  explicit MultiPolynomial(Names names) : names_(std::move(names)) {}
  static Names make_names(std::vector<std::string> names);
  static MultiPolynomial constant(Names names, const RationalFunction& c);
  static MultiPolynomial variable(Names names, std::size_t i);
  static MultiPolynomial term(Names names, const RationalFunction& c, Exps e);

  const Names& names() const noexcept { return names_; }
  std::size_t num_vars() const noexcept { return names_->size(); }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Exps& lead_exps() const { return terms_.begin()->first; }
  const RationalFunction& lead_coeff() const { return terms_.begin()->second; }

  void add_term(const Exps& e, const RationalFunction& c);
  MultiPolynomial& operator+=(const MultiPolynomial& o);
  MultiPolynomial& operator-=(const MultiPolynomial& o);
  friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
  friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
  MultiPolynomial scaled(const RationalFunction& c) const;
  MultiPolynomial times_monomial(const RationalFunction& c, const Exps& e) const;
  MultiPolynomial pow(unsigned e) const;
  MultiPolynomial monic() const;
  friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b);

  std::size_t degree_in(std::size_t var) const;
  /// Variables that occur with positive exponent.
  std::vector<bool> support() const;
  /// Replace variable `var` by the polynomial g (same ring).
  MultiPolynomial substitute(std::size_t var, const MultiPolynomial& g) const;
  /// Same polynomial written over another variable list; every used variable must exist there.
  MultiPolynomial rename_into(const Names& target) const;
  /// Evaluate with series values for the unknowns, to degree d.
  TruncatedSeries evaluate(const std::vector<TruncatedSeries>& values, std::size_t d) const;

  std::string to_string() const;

 private:
  Names names_;
  Terms terms_;
};

/// Reduced basis for the lex order in which `order` lists the variables from the
/// lowest to the highest.
struct GroebnerResult {
  std::vector<MultiPolynomial> basis;
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  /// Inputs and all S-polynomials of the basis reduce to zero.
  bool verified = false;
};

struct GroebnerLimits {
  std::size_t max_basis = 400;
  std::size_t max_terms = 20000;
};

GroebnerResult buchberger_lex(const std::vector<MultiPolynomial>& gens, const std::vector<std::size_t>& order,
                              const GroebnerLimits& limits = {});

/// Normal form with respect to a list of polynomials under the internal lex order.
MultiPolynomial normal_form(const MultiPolynomial& f, const std::vector<MultiPolynomial>& g);

/// Polynomial in one unknown with coefficients in Q(t), constant term first.
class AlgebraicPoly {
 public:
  AlgebraicPoly() = default;
  AlgebraicPoly(std::string var, std::vector<RationalFunction> coeffs);

  const std::string& var() const noexcept { return var_; }
  const std::vector<RationalFunction>& coeffs() const noexcept { return c_; }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const RationalFunction& lc() const { return c_.back(); }

  AlgebraicPoly monic() const;
  AlgebraicPoly derivative() const;
  /// Coefficients cleared to Z[t], common polynomial factor and integer content
  /// removed, leading coefficient positive.
  std::vector<UPoly> cleared() const;
  AlgebraicPoly cleared_poly() const;
  /// Equal up to a nonzero factor in Q.
  bool proportional(const AlgebraicPoly& o) const;
  TruncatedSeries evaluate(const TruncatedSeries& h) const;

  static std::pair<AlgebraicPoly, AlgebraicPoly> divmod(const AlgebraicPoly& a, const AlgebraicPoly& b);
  static AlgebraicPoly gcd(AlgebraicPoly a, AlgebraicPoly b);

  /// Display form, e.g. `(2*t^2-t)*S^2+(2*t-1)*S+1`.
  std::string to_string() const;

 private:
  void normalize();
  std::string var_;
  std::vector<RationalFunction> c_;
};

/// The univariate member of the reduced lex basis with `keep` lowest.
///
/// Unknowns that occur linearly with a coefficient in Q(t) are first substituted
/// away; this leaves the elimination ideal unchanged.
struct Elimination {
  AlgebraicPoly poly;
  GroebnerResult groebner;
  std::vector<std::string> substituted;
};
Elimination eliminate_univariate(const std::vector<MultiPolynomial>& gens, std::size_t keep,
                                 const GroebnerLimits& limits = {});

/// Sylvester resultant with respect to `var`.
MultiPolynomial resultant(const MultiPolynomial& f, const MultiPolynomial& g, std::size_t var);
/// Successive resultants down to one unknown; may carry extraneous factors.
AlgebraicPoly eliminate_by_resultants(const std::vector<MultiPolynomial>& gens, std::size_t keep);

/// Solves A x = b over Q(t).
std::vector<RationalFunction> gaussian_solve(std::vector<std::vector<RationalFunction>> a,
                                             std::vector<RationalFunction> b);

/// q(H) = H^deg p * p(1/H).
AlgebraicPoly reciprocal_poly(const AlgebraicPoly& p, const std::string& var = "H");
AlgebraicPoly squarefree_part(const AlgebraicPoly& p);

/// Power-series root of q agreeing with the seed, to degree d.
///
/// Substitutes H = s + t^k U for the first k at which the reduced equation has a
/// simple root U(0) = seed[k], then lifts that root by Newton iteration.
struct NewtonResult {
  TruncatedSeries series;
  std::size_t shift = 0;  // the k above
};
NewtonResult newton_series(const AlgebraicPoly& q, const TruncatedSeries& seed, std::size_t d);

}  // namespace nchs
