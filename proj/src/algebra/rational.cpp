#include "nchs/algebra/rational.hpp"

#include <cctype>
#include <limits>

#include "nchs/error.hpp"

namespace nchs {

UPoly::UPoly(const Q& c) : c_{c} { normalize(); }

UPoly::UPoly(std::vector<Q> coeffs) : c_(std::move(coeffs)) { normalize(); }

UPoly UPoly::monomial(const Q& c, std::size_t deg) {
  std::vector<Q> v(deg + 1, 0);
  v[deg] = c;
  return UPoly(std::move(v));
}

void UPoly::normalize() {
  for (auto& x : c_) x.canonicalize();
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t UPoly::valuation() const {
  std::size_t v = 0;
  while (v < c_.size() && c_[v] == 0) ++v;
  return v == c_.size() ? 0 : v;
}

Q UPoly::eval(const Q& x) const {
  Q r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

UPoly UPoly::derivative() const {
  std::vector<Q> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<unsigned long>(i));
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r = *this;
  Q inv = 1 / lc();
  for (auto& x : r.c_) x *= inv;
  return r;
}

mpz_class UPoly::denominator_lcm() const {
  mpz_class l = 1;
  for (const auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

mpz_class UPoly::content_gcd() const {
  mpz_class g = 0;
  for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  return g;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  UPoly r = *this * Q(denominator_lcm());
  mpz_class g = r.content_gcd();
  if (r.lc() < 0) g = -g;
  return r * Q(mpz_class(1), g);
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

UPoly& UPoly::operator*=(const UPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Q> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  normalize();
  return *this;
}

UPoly& UPoly::operator*=(const Q& c) {
  for (auto& x : c_) x *= c;
  normalize();
  return *this;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Q> rem = a.c_, quo(a.c_.size() - b.c_.size() + 1, 0);
  Q inv = 1 / b.lc();
  long bd = b.degree();
  for (long i = static_cast<long>(rem.size()) - 1; i >= bd; --i) {
    if (rem[i] == 0) continue;
    Q f = rem[i] * inv;
    std::size_t shift = static_cast<std::size_t>(i - bd);
    quo[shift] = f;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[shift + j] -= f * b.c_[j];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

UPoly UPoly::pow(unsigned e) const {
  UPoly r(1), base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::string UPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Q& c = c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    Q a = neg ? Q(-c) : c;
    if (!out.empty()) out += neg ? "-" : "+";
    else if (neg) out += "-";
    std::string mono;
    if (i > 0) {
      mono = std::string(var);
      if (i > 1) mono += "^" + std::to_string(i);
    }
    if (i == 0) out += a.get_str();
    else if (a == 1) out += mono;
    else out += a.get_str() + "*" + mono;
  }
  return out;
}

RationalFunction::RationalFunction(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw MathError("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(1);
    return;
  }
  if (den_.degree() > 0) {
    UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = UPoly::divmod(num_, g).first;
      den_ = UPoly::divmod(den_, g).first;
    }
  }
  Q inv = 1 / den_.lc();
  if (inv != 1) {
    num_ *= inv;
    den_ *= inv;
  }
}

long RationalFunction::valuation() const {
  if (is_zero()) return std::numeric_limits<long>::max() / 2;
  return static_cast<long>(num_.valuation()) - static_cast<long>(den_.valuation());
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw MathError("division by zero in Q(t)");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

std::string RationalFunction::to_string(std::string_view var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  RationalFunction parse() {
    auto r = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw InputError("expression '" + std::string(s_) + "': " + msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  RationalFunction sum() {
    RationalFunction r;
    bool first = true;
    for (;;) {
      bool neg = false;
      if (eat('-')) neg = true;
      else if (!first && !eat('+')) break;
      else if (first) eat('+');
      auto p = product();
      r += neg ? -p : p;
      first = false;
    }
    return r;
  }
  RationalFunction product() {
    auto r = power();
    for (;;) {
      if (eat('*')) r *= power();
      else if (eat('/')) {
        auto d = power();
        if (d.is_zero()) fail("division by zero");
        r /= d;
      } else {
        skip();
        // implicit multiplication: `2t`, `t(1+t)`
        if (pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == 't' || std::isdigit(static_cast<unsigned char>(s_[pos_]))))
          r *= power();
        else
          break;
      }
    }
    return r;
  }
  RationalFunction power() {
    auto b = atom();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      long e = std::stol(std::string(s_.substr(start, pos_ - start)));
      if (neg && b.is_zero()) fail("division by zero");
      b = b.pow(neg ? -e : e);
    }
    return b;
  }
  RationalFunction atom() {
    skip();
    if (eat('(')) {
      auto r = sum();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (pos_ < s_.size() && s_[pos_] == 't') {
      ++pos_;
      return RationalFunction::t();
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
    return RationalFunction(Q(mpz_class(std::string(s_.substr(start, pos_ - start)))));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_t_expression(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace nchs
