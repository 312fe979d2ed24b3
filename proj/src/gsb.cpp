#include "nchs/gsb.hpp"

#include <algorithm>
#include <random>
#include <regex>
#include <set>
#include <unordered_map>

#include "nchs/error.hpp"
#include "nchs/text.hpp"

namespace nchs {

MonomialOrder::MonomialOrder(std::vector<Symbol> priority) : priority_(std::move(priority)) {
  std::size_t n = 0;
  for (auto s : priority_) n = std::max<std::size_t>(n, s + 1u);
  rank_.assign(n, n);
  for (std::size_t i = 0; i < priority_.size(); ++i) {
    if (rank_[priority_[i]] != n) throw InputError("monomial order lists a symbol twice");
    rank_[priority_[i]] = i;
  }
  if (priority_.size() != n) throw InputError("monomial order must rank every symbol");
}

MonomialOrder MonomialOrder::by_index(std::size_t num_symbols) {
  std::vector<Symbol> p;
  for (std::size_t i = 0; i < num_symbols; ++i) p.push_back(static_cast<Symbol>(i));
  return MonomialOrder(std::move(p));
}

bool MonomialOrder::less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return rank_.at(a[i]) > rank_.at(b[i]);
  return false;
}

NCPolynomial::NCPolynomial(const Word& w, const Q& c) { add_term(w, c); }

void NCPolynomial::add_term(const Word& w, const Q& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

std::optional<std::size_t> NCPolynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  // the map is ordered by length first
  std::size_t lo = terms_.begin()->first.size(), hi = terms_.rbegin()->first.size();
  if (lo != hi) return std::nullopt;
  return lo;
}

Word NCPolynomial::leading_monomial(const MonomialOrder& order) const {
  if (terms_.empty()) throw MathError("zero polynomial has no leading monomial");
  const Word* best = &terms_.begin()->first;
  for (const auto& [w, c] : terms_)
    if (order.less(*best, w)) best = &w;
  return *best;
}

const Q& NCPolynomial::coefficient(const Word& w) const {
  static const Q zero = 0;
  auto it = terms_.find(w);
  return it == terms_.end() ? zero : it->second;
}

NCPolynomial NCPolynomial::scaled(const Q& c) const {
  NCPolynomial r;
  if (c == 0) return r;
  for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
  return r;
}

NCPolynomial NCPolynomial::wrapped(const Word& u, const Word& v) const {
  NCPolynomial r;
  for (const auto& [w, x] : terms_) r.terms_.emplace(u + w + v, x);
  return r;
}

NCPolynomial operator+(const NCPolynomial& a, const NCPolynomial& b) {
  NCPolynomial r = a;
  for (const auto& [w, x] : b.terms_) r.add_term(w, x);
  return r;
}

NCPolynomial operator-(const NCPolynomial& a, const NCPolynomial& b) {
  NCPolynomial r = a;
  for (const auto& [w, x] : b.terms_) r.add_term(w, -x);
  return r;
}

std::string NCPolynomial::to_string(const Alphabet& alphabet, const MonomialOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Word, Q>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Q c = v[i].second;
    if (i > 0) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    c = abs(c);
    std::string word = format_word(v[i].first, alphabet);
    if (c != 1 || v[i].first.empty()) s += c.get_str() + (v[i].first.empty() ? "" : " ");
    if (!v[i].first.empty()) s += word;
  }
  return s;
}

namespace {

// Leading monomials of a basis, indexed for factor lookup.
class LeadIndex {
 public:
  LeadIndex(const std::vector<NCPolynomial>& basis, const MonomialOrder& order) {
    for (std::size_t i = 0; i < basis.size(); ++i) add(basis[i].leading_monomial(order), i);
  }

  void add(const Word& lm, std::size_t i) {
    index_.emplace(lm, i);
    if (std::find(lengths_.begin(), lengths_.end(), lm.size()) == lengths_.end()) lengths_.push_back(lm.size());
  }

  /// (basis index, position) of some leading monomial inside m.
  std::optional<std::pair<std::size_t, std::size_t>> find(const Word& m) const {
    for (auto l : lengths_)
      for (std::size_t p = 0; p + l <= m.size(); ++p)
        if (auto it = index_.find(m.substr(p, l)); it != index_.end()) return std::pair{it->second, p};
    return std::nullopt;
  }

 private:
  std::unordered_map<Word, std::size_t, WordHash> index_;
  std::vector<std::size_t> lengths_;
};

NCPolynomial reduce_with(const NCPolynomial& f, const std::vector<NCPolynomial>& basis, const LeadIndex& index,
                         const MonomialOrder& order) {
  auto cmp = [&](const Word& a, const Word& b) { return order.less(a, b); };
  std::map<Word, Q, decltype(cmp)> work(cmp);
  for (const auto& [w, c] : f.terms()) work.emplace(w, c);
  NCPolynomial r;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    Word m = top->first;
    Q c = top->second;
    auto hit = index.find(m);
    if (!hit) {
      r.add_term(m, c);
      work.erase(top);
      continue;
    }
    const auto& g = basis[hit->first];
    Word lm = g.leading_monomial(order);
    Q k = c / g.coefficient(lm);
    Word u = m.prefix(hit->second), v = m.substr(hit->second + lm.size());
    for (const auto& [w, x] : g.terms()) {
      Word t = u + w + v;
      auto [it, fresh] = work.emplace(t, -k * x);
      if (fresh) continue;
      it->second -= k * x;
      if (it->second == 0) work.erase(it);
    }
  }
  return r;
}

NCPolynomial monic(const NCPolynomial& f, const MonomialOrder& order) {
  return f.scaled(1 / f.coefficient(f.leading_monomial(order)));
}

// All compositions of leading words a = lm(g), b = lm(h) with ambiguity word of length
// `len`: overlaps a v = u b, and inclusions a = u b v.
template <class F>
void compositions(const NCPolynomial& g, const Word& a, const NCPolynomial& h, const Word& b, std::size_t len,
                  F emit) {
  Q ga = g.coefficient(a), hb = h.coefficient(b);
  for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
    if (a.size() + b.size() - k != len) continue;
    if (a.suffix(k) == b.prefix(k))
      emit(g.wrapped({}, b.substr(k)).scaled(1 / ga) - h.wrapped(a.prefix(a.size() - k), {}).scaled(1 / hb));
  }
  if (a.size() == len && b.size() < a.size())
    for (std::size_t p = 0; p + b.size() <= a.size(); ++p)
      if (a.substr(p, b.size()) == b)
        emit(g.scaled(1 / ga) - h.wrapped(a.prefix(p), a.substr(p + b.size())).scaled(1 / hb));
}

}  // namespace

NCPolynomial nc_reduce(const NCPolynomial& f, const std::vector<NCPolynomial>& basis, const MonomialOrder& order) {
  for (const auto& g : basis)
    if (g.is_zero()) throw InputError("basis elements must be nonzero");
  return reduce_with(f, basis, LeadIndex(basis, order), order);
}

std::vector<NCPolynomial> gs_complete(const std::vector<NCPolynomial>& relations, const MonomialOrder& order,
                                      std::size_t d, const GsOptions& options) {
  std::map<std::size_t, std::vector<NCPolynomial>> input;
  for (const auto& f : relations) {
    if (f.is_zero()) continue;
    auto deg = f.homogeneous_degree();
    if (!deg) throw InputError("relations must be homogeneous");
    if (*deg == 0) throw InputError("a nonzero constant relation generates the whole algebra");
    input[*deg].push_back(f);
  }
  std::vector<NCPolynomial> basis;
  std::vector<Word> leads;
  LeadIndex index(basis, order);
  std::mt19937_64 rng(options.shuffle_seed.value_or(0));
  for (std::size_t deg = 1; deg <= d; ++deg) {
    std::vector<NCPolynomial> cands;
    if (auto it = input.find(deg); it != input.end()) cands = it->second;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (leads[i].size() + leads[j].size() <= deg) continue;
        compositions(basis[i], leads[i], basis[j], leads[j], deg,
                     [&](NCPolynomial s) { cands.push_back(std::move(s)); });
      }
    std::size_t terms = 0;
    for (const auto& c : cands) terms += c.terms().size();
    if (terms > options.term_cap)
      throw ResourceError("completion at degree " + std::to_string(deg) + " needs " + std::to_string(terms) +
                          " terms");
    if (options.shuffle_seed) std::shuffle(cands.begin(), cands.end(), rng);
    // new elements are appended as found and kept in reduced echelon form
    std::size_t base = basis.size();
    for (const auto& c : cands) {
      auto r = reduce_with(c, basis, index, order);
      if (r.is_zero()) continue;
      r = monic(r, order);
      Word lm = r.leading_monomial(order);
      for (std::size_t k = base; k < basis.size(); ++k)
        if (auto x = basis[k].coefficient(lm); x != 0) basis[k] = basis[k] - r.scaled(x);
      index.add(lm, basis.size());
      basis.push_back(std::move(r));
    }
    std::sort(basis.begin() + static_cast<std::ptrdiff_t>(base), basis.end(),
              [&](const NCPolynomial& a, const NCPolynomial& b) {
                return order.less(a.leading_monomial(order), b.leading_monomial(order));
              });
    leads.clear();
    for (const auto& g : basis) leads.push_back(g.leading_monomial(order));
    index = LeadIndex(basis, order);
  }
  return basis;
}

FiniteLanguage leading_language(const std::vector<NCPolynomial>& basis, const MonomialOrder& order) {
  std::vector<Word> v;
  for (const auto& g : basis) v.push_back(g.leading_monomial(order));
  FiniteLanguage l(std::move(v));
  if (l.size() != basis.size() || !is_antichain(l))
    throw MathError("leading monomials are not an antichain: the basis is not reduced");
  return l;
}

bool overlaps_resolve(const std::vector<NCPolynomial>& basis, const MonomialOrder& order, std::size_t d) {
  LeadIndex index(basis, order);
  std::vector<Word> leads;
  for (const auto& g : basis) leads.push_back(g.leading_monomial(order));
  bool ok = true;
  for (std::size_t len = 1; len <= d && ok; ++len)
    for (std::size_t i = 0; i < basis.size() && ok; ++i)
      for (std::size_t j = 0; j < basis.size() && ok; ++j)
        compositions(basis[i], leads[i], basis[j], leads[j], len, [&](const NCPolynomial& s) {
          if (ok && !reduce_with(s, basis, index, order).is_zero()) ok = false;
        });
  return ok;
}

LeadingComparison compare_leading(const FiniteLanguage& predicted, const FiniteLanguage& computed, std::size_t d) {
  std::set<Word> want, have;
  for (const auto& w : predicted)
    if (w.size() <= d) want.insert(w);
  for (const auto& w : computed)
    if (w.size() <= d) have.insert(w);
  LeadingComparison r;
  std::set_difference(want.begin(), want.end(), have.begin(), have.end(), std::back_inserter(r.missing));
  std::set_difference(have.begin(), have.end(), want.begin(), want.end(), std::back_inserter(r.extra));
  return r;
}

LeadingComparison compare_leading(const CFGrammar& predicted, const FiniteLanguage& finite,
                                  const FiniteLanguage& computed, std::size_t d) {
  auto generated = enumerate(predicted, d);
  std::vector<Word> v(generated.words().begin(), generated.words().end());
  v.insert(v.end(), finite.begin(), finite.end());
  return compare_leading(FiniteLanguage(std::move(v)), computed, d);
}

Presentation parse_presentation(std::string_view input) {
  Presentation p;
  bool have_alphabet = false;
  static const std::regex number(R"(-?[0-9]+(/[0-9]+)?)");
  for (const auto& line : text::content_lines(input)) {
    std::string rest;
    if (text::take_key(line, "alphabet", rest)) {
      if (have_alphabet) throw InputError("presentation: repeated alphabet line");
      p.alphabet = Alphabet(text::split_ws(rest));
      p.order = MonomialOrder::by_index(p.alphabet.size());
      have_alphabet = true;
      continue;
    }
    if (!have_alphabet) throw InputError("presentation: the alphabet line must come first");
    NCPolynomial f;
    int sign = 1;
    Q coeff = 1;
    bool have_coeff = false;
    Word w;
    auto flush = [&] {
      if (w.empty() && !have_coeff) return;
      f.add_term(w, coeff * sign);
      w = Word();
      coeff = 1;
      have_coeff = false;
      sign = 1;
    };
    bool expect_term = true, started = false;
    for (const auto& tok : text::split_ws(line)) {
      if (tok == "+" || tok == "-") {
        if (expect_term && started) throw InputError("presentation: misplaced '" + tok + "' in '" + line + "'");
        started = true;
        flush();
        sign = tok == "-" ? -1 : 1;
        expect_term = true;
        continue;
      }
      if (std::regex_match(tok, number)) {
        if (!w.empty() || have_coeff) throw InputError("presentation: coefficient '" + tok + "' must start a term");
        coeff = Q(tok);
        if (coeff.get_den() == 0) throw InputError("presentation: zero denominator");
        coeff.canonicalize();
        have_coeff = true;
        expect_term = false;
        started = true;
        continue;
      }
      auto s = p.alphabet.find(tok);
      if (!s) throw InputError("presentation: unknown symbol '" + tok + "'");
      w.push_back(*s);
      expect_term = false;
      started = true;
    }
    if (expect_term) throw InputError("presentation: relation ends with a sign: '" + line + "'");
    flush();
    p.relations.push_back(std::move(f));
  }
  if (!have_alphabet) throw InputError("presentation: missing alphabet line");
  return p;
}

Presentation load_presentation(const std::filesystem::path& path) { return parse_presentation(text::read_file(path)); }

}  // namespace nchs
