#include "nchs/algebra/multipoly.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "nchs/error.hpp"

namespace nchs {

MultiPolynomial::Names MultiPolynomial::make_names(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

MultiPolynomial MultiPolynomial::constant(Names names, const RationalFunction& c) {
  MultiPolynomial p(std::move(names));
  p.add_term(Exps(p.num_vars(), 0), c);
  return p;
}

MultiPolynomial MultiPolynomial::variable(Names names, std::size_t i) {
  MultiPolynomial p(std::move(names));
  Exps e(p.num_vars(), 0);
  e.at(i) = 1;
  p.add_term(e, RationalFunction(1));
  return p;
}

MultiPolynomial MultiPolynomial::term(Names names, const RationalFunction& c, Exps e) {
  MultiPolynomial p(std::move(names));
  if (e.size() != p.num_vars()) throw MathError("exponent vector does not match the variable count");
  p.add_term(e, c);
  return p;
}

void MultiPolynomial::add_term(const Exps& e, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
  MultiPolynomial r(a.names_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exps e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPolynomial MultiPolynomial::scaled(const RationalFunction& c) const {
  MultiPolynomial r(names_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
  return r;
}

MultiPolynomial MultiPolynomial::times_monomial(const RationalFunction& c, const Exps& m) const {
  MultiPolynomial r(names_);
  if (c.is_zero()) return r;
  for (const auto& [e, x] : terms_) {
    Exps f(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) f[i] = static_cast<std::uint16_t>(e[i] + m[i]);
    r.terms_.emplace(std::move(f), x * c);
  }
  return r;
}

MultiPolynomial MultiPolynomial::pow(unsigned e) const {
  MultiPolynomial r = constant(names_, 1), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

MultiPolynomial MultiPolynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(lead_coeff().inverse());
}

bool operator==(const MultiPolynomial& a, const MultiPolynomial& b) {
  return *a.names_ == *b.names_ && a.terms_ == b.terms_;
}

std::size_t MultiPolynomial::degree_in(std::size_t var) const {
  std::size_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max<std::size_t>(d, e[var]);
  return d;
}

std::vector<bool> MultiPolynomial::support() const {
  std::vector<bool> s(num_vars(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) s[i] = true;
  return s;
}

MultiPolynomial MultiPolynomial::substitute(std::size_t var, const MultiPolynomial& g) const {
  MultiPolynomial r(names_);
  std::vector<MultiPolynomial> powers{constant(names_, 1)};
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * g);
    Exps rest = e;
    rest[var] = 0;
    r += powers[e[var]].times_monomial(c, rest);
  }
  return r;
}

MultiPolynomial MultiPolynomial::rename_into(const Names& target) const {
  std::vector<std::size_t> map(num_vars());
  auto used = support();
  for (std::size_t i = 0; i < num_vars(); ++i) {
    auto it = std::find(target->begin(), target->end(), (*names_)[i]);
    if (it == target->end()) {
      if (used[i]) throw MathError("variable '" + (*names_)[i] + "' missing from target ring");
      map[i] = target->size();
    } else {
      map[i] = static_cast<std::size_t>(it - target->begin());
    }
  }
  MultiPolynomial r(target);
  for (const auto& [e, c] : terms_) {
    Exps f(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) f[map[i]] = e[i];
    r.add_term(f, c);
  }
  return r;
}

TruncatedSeries MultiPolynomial::evaluate(const std::vector<TruncatedSeries>& values, std::size_t d) const {
  if (values.size() != num_vars()) throw MathError("evaluate: wrong number of values");
  std::vector<std::vector<TruncatedSeries>> powers(num_vars());
  auto result = TruncatedSeries::zero(d);
  for (const auto& [e, c] : terms_) {
    auto term = rational_eval_series(c, d);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(TruncatedSeries::constant(1, d));
      while (pw.size() <= e[i]) pw.push_back(pw.back() * values[i].truncate(d));
      term = term * pw[e[i]];
    }
    result = result + term;
  }
  return result;
}

std::string MultiPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += (*names_)[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string cs = c.to_string();
    bool simple = c.is_polynomial() && std::count_if(c.num().coeffs().begin(), c.num().coeffs().end(),
                                                     [](const Q& x) { return x != 0; }) == 1;
    std::string term;
    if (mono.empty()) term = simple ? cs : "(" + cs + ")";
    else if (cs == "1") term = mono;
    else if (cs == "-1") term = "-" + mono;
    else term = (simple ? cs : "(" + cs + ")") + "*" + mono;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

namespace {

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exps lcm_exps(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exps sub_exps(const Exps& a, const Exps& b) {
  Exps r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return r;
}

MultiPolynomial reduce(const MultiPolynomial& f, const std::vector<MultiPolynomial>& g, std::size_t max_terms) {
  MultiPolynomial p = f, r(f.names());
  while (!p.is_zero()) {
    auto it = p.terms().begin();
    Exps m = it->first;
    RationalFunction c = it->second;
    const MultiPolynomial* div = nullptr;
    for (const auto& h : g)
      if (!h.is_zero() && divides(h.lead_exps(), m)) {
        div = &h;
        break;
      }
    if (div) {
      p -= div->times_monomial(c / div->lead_coeff(), sub_exps(m, div->lead_exps()));
      if (p.terms().size() > max_terms)
        throw ResourceError("polynomial reduction exceeded the term cap of " + std::to_string(max_terms));
    } else {
      r.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  return r;
}

MultiPolynomial s_polynomial(const MultiPolynomial& a, const MultiPolynomial& b) {
  Exps l = lcm_exps(a.lead_exps(), b.lead_exps());
  return a.times_monomial(a.lead_coeff().inverse(), sub_exps(l, a.lead_exps())) -
         b.times_monomial(b.lead_coeff().inverse(), sub_exps(l, b.lead_exps()));
}

std::size_t weight(const MultiPolynomial& p) {
  std::size_t w = 0;
  for (const auto& [e, c] : p.terms()) w += static_cast<std::size_t>(c.num().degree() + c.den().degree() + 2);
  return w;
}

// Rewrites the polynomial so that variable perm[p] sits at position p.
MultiPolynomial permute(const MultiPolynomial& f, const std::vector<std::size_t>& perm,
                        const MultiPolynomial::Names& names) {
  MultiPolynomial r(names);
  for (const auto& [e, c] : f.terms()) {
    Exps g(e.size());
    for (std::size_t p = 0; p < perm.size(); ++p) g[p] = e[perm[p]];
    r.add_term(g, c);
  }
  return r;
}

MultiPolynomial unpermute(const MultiPolynomial& f, const std::vector<std::size_t>& perm,
                          const MultiPolynomial::Names& names) {
  MultiPolynomial r(names);
  for (const auto& [e, c] : f.terms()) {
    Exps g(e.size());
    for (std::size_t p = 0; p < perm.size(); ++p) g[perm[p]] = e[p];
    r.add_term(g, c);
  }
  return r;
}

}  // namespace

MultiPolynomial normal_form(const MultiPolynomial& f, const std::vector<MultiPolynomial>& g) {
  return reduce(f, g, GroebnerLimits{}.max_terms);
}

GroebnerResult buchberger_lex(const std::vector<MultiPolynomial>& gens, const std::vector<std::size_t>& order,
                              const GroebnerLimits& limits) {
  if (gens.empty()) return {{}, 0, 0, true};
  const auto& names = gens.front().names();
  std::size_t m = names->size();
  if (order.size() != m) throw MathError("monomial order must rank every variable");
  std::vector<std::size_t> perm(order.rbegin(), order.rend());
  {
    auto sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < m; ++i)
      if (sorted[i] != i) throw MathError("monomial order is not a permutation");
  }
  std::vector<std::string> pnames(m);
  for (std::size_t p = 0; p < m; ++p) pnames[p] = (*names)[perm[p]];
  auto pn = MultiPolynomial::make_names(pnames);
  std::vector<MultiPolynomial> input;
  for (const auto& f : gens) {
    if (*f.names() != *names) throw MathError("generators live in different rings");
    input.push_back(permute(f, perm, pn));
  }

  GroebnerResult res;
  std::vector<MultiPolynomial> g;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add = [&](MultiPolynomial f) {
    if (g.size() >= limits.max_basis)
      throw ResourceError("Groebner basis exceeded the cap of " + std::to_string(limits.max_basis) + " elements");
    std::size_t n = g.size();
    g.push_back(f.monic());
    for (std::size_t k = 0; k < n; ++k) pending.emplace(k, n);
  };
  for (const auto& f : input) {
    auto r = reduce(f, g, limits.max_terms);
    if (!r.is_zero()) add(r);
  }
  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };
  while (!pending.empty()) {
    // normal selection: smallest lcm, then lighter coefficients
    auto best = pending.begin();
    Exps best_lcm = lcm_exps(g[best->first].lead_exps(), g[best->second].lead_exps());
    std::size_t best_w = weight(g[best->first]) + weight(g[best->second]);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Exps l = lcm_exps(g[it->first].lead_exps(), g[it->second].lead_exps());
      std::size_t w = weight(g[it->first]) + weight(g[it->second]);
      if (l < best_lcm || (l == best_lcm && w < best_w)) {
        best = it;
        best_lcm = l;
        best_w = w;
      }
    }
    auto [i, j] = *best;
    pending.erase(best);
    ++res.pairs_considered;
    const Exps& li = g[i].lead_exps();
    const Exps& lj = g[j].lead_exps();
    bool coprime = true;
    for (std::size_t v = 0; v < m && coprime; ++v) coprime = !(li[v] && lj[v]);
    if (coprime) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k)
      chain = k != i && k != j && divides(g[k].lead_exps(), best_lcm) && !is_pending(i, k) && !is_pending(j, k);
    if (chain) continue;
    ++res.pairs_reduced;
    auto r = reduce(s_polynomial(g[i], g[j]), g, limits.max_terms);
    if (!r.is_zero()) add(r);
  }

  // minimal, then reduced
  std::vector<MultiPolynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i || !divides(g[k].lead_exps(), g[i].lead_exps())) continue;
      redundant = g[k].lead_exps() != g[i].lead_exps() || k < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<MultiPolynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MultiPolynomial> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    reduced.push_back(reduce(minimal[i], others, limits.max_terms).monic());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const MultiPolynomial& a, const MultiPolynomial& b) { return a.lead_exps() < b.lead_exps(); });

  for (const auto& f : input)
    if (!reduce(f, reduced, limits.max_terms).is_zero())
      throw MathError("Groebner basis check failed: an input does not reduce to zero");
  for (std::size_t a = 0; a < reduced.size(); ++a)
    for (std::size_t b = a + 1; b < reduced.size(); ++b)
      if (!reduce(s_polynomial(reduced[a], reduced[b]), reduced, limits.max_terms).is_zero())
        throw MathError("Groebner basis check failed: an S-polynomial does not reduce to zero");
  res.verified = true;
  for (const auto& f : reduced) res.basis.push_back(unpermute(f, perm, names));
  return res;
}

AlgebraicPoly::AlgebraicPoly(std::string var, std::vector<RationalFunction> coeffs)
    : var_(std::move(var)), c_(std::move(coeffs)) {
  normalize();
}

void AlgebraicPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

AlgebraicPoly AlgebraicPoly::monic() const {
  if (is_zero()) return *this;
  auto inv = lc().inverse();
  std::vector<RationalFunction> c;
  for (const auto& x : c_) c.push_back(x * inv);
  return AlgebraicPoly(var_, std::move(c));
}

AlgebraicPoly AlgebraicPoly::derivative() const {
  std::vector<RationalFunction> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * RationalFunction(static_cast<int>(i)));
  return AlgebraicPoly(var_, std::move(c));
}

std::vector<UPoly> AlgebraicPoly::cleared() const {
  if (is_zero()) return {};
  UPoly l(1);
  for (const auto& x : c_) {
    UPoly g = UPoly::gcd(l, x.den());
    l = UPoly::divmod(l * x.den(), g).first;
  }
  std::vector<UPoly> p;
  for (const auto& x : c_) p.push_back(x.num() * UPoly::divmod(l, x.den()).first);
  UPoly g;
  for (const auto& x : p) g = UPoly::gcd(g, x);
  for (auto& x : p) x = UPoly::divmod(x, g).first;
  mpz_class den = 1, num = 0;
  for (const auto& x : p) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator_lcm().get_mpz_t());
  }
  for (auto& x : p) x *= Q(den);
  for (const auto& x : p) mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.content_gcd().get_mpz_t());
  Q scale(mpz_class(1), num);
  if (p.back().lc() < 0) scale = -scale;
  scale.canonicalize();
  for (auto& x : p) x *= scale;
  return p;
}

AlgebraicPoly AlgebraicPoly::cleared_poly() const {
  std::vector<RationalFunction> c;
  for (auto& x : cleared()) c.emplace_back(x);
  return AlgebraicPoly(var_, std::move(c));
}

bool AlgebraicPoly::proportional(const AlgebraicPoly& o) const {
  if (degree() != o.degree()) return false;
  if (is_zero()) return true;
  std::size_t j = 0;
  while (c_[j].is_zero()) ++j;
  if (o.c_[j].is_zero()) return false;
  auto r = c_[j] / o.c_[j];
  if (!r.is_constant()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i] * r) return false;
  return true;
}

TruncatedSeries AlgebraicPoly::evaluate(const TruncatedSeries& h) const {
  std::size_t d = h.bound();
  auto r = TruncatedSeries::zero(d);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * h + rational_eval_series(c_[i], d);
  return r;
}

std::pair<AlgebraicPoly, AlgebraicPoly> AlgebraicPoly::divmod(const AlgebraicPoly& a, const AlgebraicPoly& b) {
  if (b.is_zero()) throw MathError("division by the zero polynomial");
  std::vector<RationalFunction> rem = a.c_;
  std::vector<RationalFunction> quo(a.c_.size() >= b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 0);
  auto inv = b.lc().inverse();
  long bd = b.degree();
  for (long i = static_cast<long>(rem.size()) - 1; i >= bd; --i) {
    if (rem[i].is_zero()) continue;
    auto f = rem[i] * inv;
    auto shift = static_cast<std::size_t>(i - bd);
    quo[shift] = f;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[shift + j] -= f * b.c_[j];
  }
  return {AlgebraicPoly(a.var_, std::move(quo)), AlgebraicPoly(a.var_, std::move(rem))};
}

AlgebraicPoly AlgebraicPoly::gcd(AlgebraicPoly a, AlgebraicPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::string AlgebraicPoly::to_string() const {
  if (is_zero()) return "0";
  auto p = cleared();
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i].is_zero()) continue;
    std::string mono;
    if (i > 0) mono = var_ + (i > 1 ? "^" + std::to_string(i) : "");
    std::string cs = p[i].to_string("t");
    bool single = std::count_if(p[i].coeffs().begin(), p[i].coeffs().end(), [](const Q& x) { return x != 0; }) == 1;
    std::string term;
    if (mono.empty()) term = single ? cs : "(" + cs + ")";
    else if (cs == "1") term = mono;
    else if (cs == "-1") term = "-" + mono;
    else term = (single ? cs : "(" + cs + ")") + "*" + mono;
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  return out;
}

namespace {

// Replaces unknowns occurring linearly with a coefficient in Q(t); returns the names removed.
std::vector<std::string> substitute_linear(std::vector<MultiPolynomial>& f, std::size_t keep) {
  std::vector<std::string> removed;
  if (f.empty()) return removed;
  std::size_t m = f.front().num_vars();
  for (bool found = true; found;) {
    found = false;
    for (std::size_t idx = 0; idx < f.size() && !found; ++idx) {
      for (std::size_t x = 0; x < m && !found; ++x) {
        if (x == keep || f[idx].degree_in(x) != 1) continue;
        RationalFunction coef;
        bool constant_coef = true;
        MultiPolynomial rest(f[idx].names());
        for (const auto& [e, c] : f[idx].terms()) {
          if (e[x] == 1) {
            bool others = false;
            for (std::size_t i = 0; i < e.size(); ++i) others = others || (i != x && e[i] != 0);
            if (others) constant_coef = false;
            else coef = c;
          } else {
            rest.add_term(e, c);
          }
        }
        if (!constant_coef || coef.is_zero()) continue;
        auto value = rest.scaled(-coef.inverse());
        std::vector<MultiPolynomial> next;
        for (std::size_t k = 0; k < f.size(); ++k) {
          if (k == idx) continue;
          auto s = f[k].substitute(x, value);
          if (!s.is_zero()) next.push_back(std::move(s));
        }
        removed.push_back((*f[idx].names())[x]);
        f = std::move(next);
        found = true;
      }
    }
  }
  return removed;
}

AlgebraicPoly as_univariate(const MultiPolynomial& p, std::size_t keep) {
  std::vector<RationalFunction> c(p.degree_in(keep) + 1);
  for (const auto& [e, x] : p.terms()) c[e[keep]] += x;
  return AlgebraicPoly((*p.names())[keep], std::move(c));
}

bool only_uses(const MultiPolynomial& p, std::size_t keep) {
  auto s = p.support();
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] && i != keep) return false;
  return true;
}

}  // namespace

Elimination eliminate_univariate(const std::vector<MultiPolynomial>& gens, std::size_t keep,
                                 const GroebnerLimits& limits) {
  if (gens.empty()) throw MathError("elimination needs at least one polynomial");
  auto names = gens.front().names();
  std::size_t m = names->size();
  if (keep >= m) throw MathError("elimination variable out of range");
  Elimination out;
  std::vector<MultiPolynomial> f = gens;
  out.substituted = substitute_linear(f, keep);
  if (f.empty()) throw MathError("no univariate relation: '" + (*names)[keep] + "' is unconstrained");
  std::vector<std::size_t> order{keep};
  for (std::size_t i = 0; i < m; ++i)
    if (i != keep) order.push_back(i);
  out.groebner = buchberger_lex(f, order, limits);
  const MultiPolynomial* best = nullptr;
  for (const auto& g : out.groebner.basis) {
    if (!only_uses(g, keep)) continue;
    if (g.degree_in(keep) == 0) throw MathError("the system is inconsistent (unit ideal)");
    if (!best || g.degree_in(keep) < best->degree_in(keep)) best = &g;
  }
  if (!best) throw MathError("no univariate relation found for '" + (*names)[keep] + "'");
  out.poly = as_univariate(*best, keep);
  return out;
}

MultiPolynomial resultant(const MultiPolynomial& f, const MultiPolynomial& g, std::size_t var) {
  auto coeffs = [&](const MultiPolynomial& p) {
    std::vector<MultiPolynomial> c(p.degree_in(var) + 1, MultiPolynomial(p.names()));
    for (const auto& [e, x] : p.terms()) {
      Exps r = e;
      r[var] = 0;
      c[e[var]].add_term(r, x);
    }
    return c;
  };
  auto a = coeffs(f), b = coeffs(g);
  std::size_t m = a.size() - 1, n = b.size() - 1, s = m + n;
  if (s == 0) return MultiPolynomial::constant(f.names(), 1);
  if (s > 24) throw ResourceError("Sylvester matrix too large");
  // Sylvester matrix rows: n shifted copies of a, m shifted copies of b (highest degree first).
  std::vector<std::vector<const MultiPolynomial*>> rows(s, std::vector<const MultiPolynomial*>(s, nullptr));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) rows[r][r + k] = &a[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) rows[n + r][r + k] = &b[n - k];
  std::unordered_map<std::uint32_t, MultiPolynomial> memo;
  auto det = [&](auto&& self, std::size_t row, std::uint32_t used) -> MultiPolynomial {
    if (row == s) return MultiPolynomial::constant(f.names(), 1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    MultiPolynomial acc(f.names());
    int sign = 1;
    for (std::size_t col = 0; col < s; ++col) {
      if (used & (1u << col)) continue;
      const auto* e = rows[row][col];
      if (e && !e->is_zero()) {
        auto minor = self(self, row + 1, used | (1u << col));
        auto term = *e * minor;
        if (sign > 0) acc += term;
        else acc -= term;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return det(det, 0, 0);
}

AlgebraicPoly eliminate_by_resultants(const std::vector<MultiPolynomial>& gens, std::size_t keep) {
  std::vector<MultiPolynomial> f = gens;
  substitute_linear(f, keep);
  if (f.empty()) throw MathError("no univariate relation");
  std::size_t m = f.front().num_vars();
  for (std::size_t x = 0; x < m; ++x) {
    if (x == keep) continue;
    std::vector<MultiPolynomial> with, without;
    for (auto& p : f) (p.degree_in(x) > 0 ? with : without).push_back(p);
    if (with.size() >= 2) {
      auto pivot = std::min_element(with.begin(), with.end(), [&](const auto& a, const auto& b) {
        return a.degree_in(x) < b.degree_in(x);
      });
      MultiPolynomial pv = *pivot;
      for (auto it = with.begin(); it != with.end(); ++it) {
        if (it == pivot) continue;
        auto r = resultant(pv, *it, x);
        if (!r.is_zero()) without.push_back(std::move(r));
      }
    }
    f = std::move(without);
  }
  AlgebraicPoly acc;
  for (const auto& p : f) {
    if (!only_uses(p, keep)) continue;
    auto u = as_univariate(p, keep);
    acc = acc.is_zero() ? u.monic() : AlgebraicPoly::gcd(acc, u);
  }
  if (acc.is_zero()) throw MathError("resultant elimination produced no relation");
  return acc;
}

std::vector<RationalFunction> gaussian_solve(std::vector<std::vector<RationalFunction>> a,
                                             std::vector<RationalFunction> b) {
  std::size_t n = a.size();
  if (b.size() != n) throw MathError("linear system is not square");
  for (const auto& row : a)
    if (row.size() != n) throw MathError("linear system is not square");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw MathError("singular linear system over Q(t)");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    auto inv = a[col][col].inverse();
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      auto f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

AlgebraicPoly reciprocal_poly(const AlgebraicPoly& p, const std::string& var) {
  if (p.is_zero()) throw MathError("reciprocal of the zero polynomial");
  std::vector<RationalFunction> c(p.coeffs().rbegin(), p.coeffs().rend());
  return AlgebraicPoly(var, std::move(c));
}

AlgebraicPoly squarefree_part(const AlgebraicPoly& p) {
  if (p.degree() <= 1) return p;
  auto g = AlgebraicPoly::gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return AlgebraicPoly::divmod(p, g).first;
}

NewtonResult newton_series(const AlgebraicPoly& q, const TruncatedSeries& seed, std::size_t d) {
  if (q.degree() < 1) throw MathError("Newton iteration needs a polynomial of positive degree");
  auto p = squarefree_part(q).cleared();
  std::size_t n = p.size() - 1;
  for (std::size_t k = 0; k <= seed.bound(); ++k) {
    std::vector<Q> sc(seed.coeffs().begin(), seed.coeffs().begin() + static_cast<long>(k));
    UPoly s(sc), tk = UPoly::monomial(1, k);
    // coefficients (in U) of q(s + t^k U)
    std::vector<UPoly> c(n + 1);
    std::vector<UPoly> pw{UPoly(1)};
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j < pw.size(); ++j) c[j] += p[i] * pw[j];
      std::vector<UPoly> next(pw.size() + 1);
      for (std::size_t j = 0; j < pw.size(); ++j) {
        next[j] += pw[j] * s;
        next[j + 1] += pw[j] * tk;
      }
      pw = std::move(next);
    }
    std::size_t v = static_cast<std::size_t>(-1);
    for (const auto& x : c)
      if (!x.is_zero()) v = std::min(v, x.valuation());
    for (auto& x : c) {
      std::vector<Q> co = x.coeffs();
      co.erase(co.begin(), co.begin() + static_cast<long>(std::min(v, co.size())));
      x = UPoly(co);
    }
    const Q& a = seed[k];
    Q val = 0, dval = 0, apow = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      val += c[j].coeff(0) * apow;
      if (j + 1 <= n) dval += c[j + 1].coeff(0) * apow * static_cast<unsigned long>(j + 1);
      apow *= a;
    }
    if (val != 0)
      throw MathError("no power-series root matches the seed at degree " + std::to_string(k));
    if (dval == 0) continue;
    if (d < k) return {seed.truncate(d), k};
    std::size_t m = d - k;
    auto as_series = [](const UPoly& u, std::size_t deg) {
      std::vector<Q> co(deg + 1, 0);
      for (std::size_t i = 0; i <= deg && i < u.coeffs().size(); ++i) co[i] = u.coeffs()[i];
      return TruncatedSeries(std::move(co));
    };
    auto u = TruncatedSeries::constant(a, 0);
    for (std::size_t prec = 1; prec < m + 1;) {
      prec = std::min(2 * prec, m + 1);
      std::vector<Q> uc = u.coeffs();
      uc.resize(prec, 0);
      TruncatedSeries ut(uc);
      auto f = TruncatedSeries::zero(prec - 1), fd = TruncatedSeries::zero(prec - 1);
      for (std::size_t j = c.size(); j-- > 0;) {
        f = f * ut + as_series(c[j], prec - 1);
        if (j >= 1) fd = fd * ut + as_series(c[j] * Q(static_cast<unsigned long>(j)), prec - 1);
      }
      u = ut - f / fd;
    }
    std::vector<Q> hc = as_series(s, d).coeffs();
    for (std::size_t i = 0; i <= m; ++i) hc[k + i] += u[i];
    TruncatedSeries result(hc);
    for (std::size_t i = 0; i <= std::min(d, seed.bound()); ++i)
      if (result[i] != seed[i])
        throw MathError("the lifted root disagrees with the seed at degree " + std::to_string(i));
    auto check = q.cleared_poly().evaluate(result);
    if (series_valuation(check) <= d) throw MathError("Newton lift does not annihilate the polynomial");
    return {result, k};
  }
  throw MathError("no simple root matching the seed within its " + std::to_string(seed.bound() + 1) + " coefficients");
}

}  // namespace nchs
