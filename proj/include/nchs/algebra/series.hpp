#pragma once

// Power series in t truncated at a fixed degree.

#include <cstddef>
#include <string>
#include <vector>

#include "nchs/algebra/rational.hpp"

namespace nchs {

/// Coefficients c_0..c_d; nothing is claimed beyond d.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  explicit TruncatedSeries(std::vector<Q> coeffs);
  static TruncatedSeries zero(std::size_t d) { return TruncatedSeries(std::vector<Q>(d + 1, 0)); }
  static TruncatedSeries constant(const Q& c, std::size_t d);
  static TruncatedSeries from_ints(const std::vector<long>& v);

  std::size_t bound() const noexcept { return c_.size() - 1; }
  const std::vector<Q>& coeffs() const noexcept { return c_; }
  const Q& operator[](std::size_t i) const { return c_.at(i); }
  Q& operator[](std::size_t i) { return c_.at(i); }
  TruncatedSeries truncate(std::size_t d) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Requires b_0 != 0.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries operator-() const;
  TruncatedSeries scaled(const Q& c) const;
  /// Multiplication by t^k; the bound is kept, shifted-out terms are dropped.
  TruncatedSeries shifted(std::size_t k) const;
  TruncatedSeries inverse() const;
  /// Square root with positive constant term; requires c_0 a rational square.
  TruncatedSeries sqrt() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;
  /// Comma-separated exact coefficients.
  std::string to_string() const;

 private:
  std::vector<Q> c_{Q(0)};
};

enum class SeriesOp { Add, Sub, Mul, Div };
TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op);

/// Maclaurin expansion to degree d; requires a nonzero denominator constant term.
TruncatedSeries rational_eval_series(const RationalFunction& f, std::size_t d);

/// Smallest index with a nonzero coefficient, or bound+1 for the zero series.
std::size_t series_valuation(const TruncatedSeries& s);

}  // namespace nchs
