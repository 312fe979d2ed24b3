#pragma once

// Univariate polynomials over Q and the rational function field Q(t).

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nchs {

using Q = mpq_class;

/// Polynomial over Q, coefficients from degree 0 upwards, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Q& c);
  UPoly(int c) : UPoly(Q(c)) {}
  explicit UPoly(std::vector<Q> coeffs);
  static UPoly monomial(const Q& c, std::size_t deg);
  static UPoly t() { return monomial(1, 1); }

  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Q>& coeffs() const noexcept { return c_; }
  Q coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Q(0); }
  const Q& lc() const { return c_.back(); }
  /// Largest power of t dividing this polynomial (0 for zero).
  std::size_t valuation() const;

  Q eval(const Q& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// Integer polynomial with coprime coefficients and positive leading coefficient.
  UPoly primitive() const;
  /// Lcm of coefficient denominators.
  mpz_class denominator_lcm() const;
  mpz_class content_gcd() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o);
  UPoly& operator*=(const Q& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Q& c) { return a *= c; }
  UPoly operator-() const;
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
  /// Monic gcd (zero when both are zero).
  static UPoly gcd(UPoly a, UPoly b);
  UPoly pow(unsigned e) const;

  /// e.g. `2*t^2-t+1`, descending powers.
  std::string to_string(std::string_view var = "t") const;

 private:
  void normalize();
  std::vector<Q> c_;
};

/// Element of Q(t): coprime numerator and monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Q& c) : num_(c), den_(1) {}
  RationalFunction(int c) : RationalFunction(Q(c)) {}
  RationalFunction(UPoly num) : num_(std::move(num)), den_(1) {}
  RationalFunction(UPoly num, UPoly den);
  static RationalFunction t() { return RationalFunction(UPoly::t()); }

  const UPoly& num() const noexcept { return num_; }
  const UPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.degree() == 0; }
  bool is_constant() const noexcept { return is_polynomial() && num_.degree() <= 0; }
  Q constant() const { return num_.coeff(0); }
  /// t-adic valuation (numerator minus denominator order); huge for zero.
  long valuation() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction operator-() const;
  RationalFunction inverse() const;
  RationalFunction pow(long e) const;
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// `num` or `(num)/(den)`.
  std::string to_string(std::string_view var = "t") const;

 private:
  void normalize();
  UPoly num_, den_;
};

/// Parses an expression in t over Q: numbers, t, + - * / ^ (integer exponents) and parentheses.
RationalFunction parse_t_expression(std::string_view text);

}  // namespace nchs
