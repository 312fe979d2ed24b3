#include "nchs/algebra/series.hpp"

#include <algorithm>

#include "nchs/error.hpp"

namespace nchs {

TruncatedSeries::TruncatedSeries(std::vector<Q> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw InputError("series needs at least one coefficient");
  for (auto& x : c_) x.canonicalize();
}

TruncatedSeries TruncatedSeries::constant(const Q& c, std::size_t d) {
  auto s = zero(d);
  s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::from_ints(const std::vector<long>& v) {
  std::vector<Q> c;
  for (long x : v) c.emplace_back(x);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::truncate(std::size_t d) const {
  if (d > bound()) throw BoundError("series truncation beyond its bound");
  return TruncatedSeries(std::vector<Q>(c_.begin(), c_.begin() + static_cast<long>(d) + 1));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t d = std::min(a.bound(), b.bound());
  std::vector<Q> c(d + 1);
  for (std::size_t i = 0; i <= d; ++i) c[i] = a.c_[i] + b.c_[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  std::size_t d = std::min(a.bound(), b.bound());
  std::vector<Q> c(d + 1, 0);
  for (std::size_t i = 0; i <= d; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= d; ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b.c_[0] == 0) throw MathError("series division by a series with zero constant term");
  std::size_t d = std::min(a.bound(), b.bound());
  std::vector<Q> q(d + 1, 0);
  Q inv = 1 / b.c_[0];
  for (std::size_t k = 0; k <= d; ++k) {
    Q s = a.c_[k];
    for (std::size_t j = 1; j <= k; ++j) s -= b.c_[j] * q[k - j];
    q[k] = s * inv;
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries TruncatedSeries::operator-() const {
  auto r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

TruncatedSeries TruncatedSeries::scaled(const Q& c) const {
  auto r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const {
  auto r = zero(bound());
  for (std::size_t i = 0; i + k <= bound(); ++i) r.c_[i + k] = c_[i];
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const { return constant(1, bound()) / *this; }

TruncatedSeries TruncatedSeries::sqrt() const {
  const Q& c0 = c_[0];
  if (c0 <= 0) throw MathError("series square root needs a positive constant term");
  mpz_class n = c0.get_num(), d = c0.get_den();
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0)
    throw MathError("series square root: constant term is not a rational square");
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  // r^2 = s coefficientwise: 2 r0 r_k = s_k - sum_{0<j<k} r_j r_{k-j}
  std::vector<Q> r(c_.size(), 0);
  r[0] = Q(rn, rd);
  r[0].canonicalize();
  Q inv = 1 / (2 * r[0]);
  for (std::size_t k = 1; k < c_.size(); ++k) {
    Q s = c_[k];
    for (std::size_t j = 1; j < k; ++j) s -= r[j] * r[k - j];
    r[k] = s * inv;
  }
  return TruncatedSeries(std::move(r));
}

std::string TruncatedSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ',';
    out += c_[i].get_str();
  }
  return out;
}

TruncatedSeries series_arith(const TruncatedSeries& a, const TruncatedSeries& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::Add:
      return a + b;
    case SeriesOp::Sub:
      return a - b;
    case SeriesOp::Mul:
      return a * b;
    case SeriesOp::Div:
      return a / b;
  }
  return a;
}

TruncatedSeries rational_eval_series(const RationalFunction& f, std::size_t d) {
  if (f.den().coeff(0) == 0) throw MathError("rational function has a pole at t = 0");
  auto as_series = [d](const UPoly& p) {
    std::vector<Q> c(d + 1, 0);
    for (std::size_t i = 0; i <= d && i < p.coeffs().size(); ++i) c[i] = p.coeffs()[i];
    return TruncatedSeries(std::move(c));
  };
  return as_series(f.num()) / as_series(f.den());
}

std::size_t series_valuation(const TruncatedSeries& s) {
  std::size_t i = 0;
  while (i <= s.bound() && s[i] == 0) ++i;
  return i;
}

}  // namespace nchs
