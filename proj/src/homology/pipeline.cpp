#include <algorithm>
#include <map>

#include "nchs/error.hpp"
#include "nchs/homology.hpp"
#include "nchs/text.hpp"

namespace nchs {

namespace {

std::string name_at(const std::filesystem::path& base, std::string_view name) {
  return (base / std::string(text::trim(name))).string();
}

FiniteLanguage load_words(const std::string& path, const std::optional<Alphabet>& a) {
  return parse_language(text::read_file(path), a ? &*a : nullptr).words;
}

TruncatedSeries census_series(const FiniteLanguage& l, std::size_t d) {
  std::vector<Q> c(d + 1, 0);
  for (const auto& w : l)
    if (w.size() <= d) c[w.size()] += 1;
  return TruncatedSeries(std::move(c));
}

RationalFunction census_polynomial(const FiniteLanguage& l) {
  std::vector<Q> c(l.max_length() + 1, 0);
  for (const auto& w : l) c[w.size()] += 1;
  return RationalFunction(UPoly(std::move(c)));
}

// Square-free decomposition f = lc * prod a_i^i (Yun).
std::vector<UPoly> squarefree_factors(const UPoly& f) {
  std::vector<UPoly> out{UPoly(1)};
  UPoly fm = f.monic();
  UPoly a0 = UPoly::gcd(fm, fm.derivative());
  UPoly b = UPoly::divmod(fm, a0).first;
  UPoly c = UPoly::divmod(fm.derivative(), a0).first;
  UPoly dd = c - b.derivative();
  while (b.degree() > 0) {
    UPoly a = UPoly::gcd(b, dd);
    out.push_back(a);
    b = UPoly::divmod(b, a).first;
    c = UPoly::divmod(dd, a).first;
    dd = c - b.derivative();
  }
  return out;
}

bool rational_sqrt(const Q& q, Q& root) {
  if (q < 0) return false;
  mpz_class n = q.get_num(), d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  root = Q(sqrt(n), sqrt(d));
  return true;
}

// E = p0 +- g * sqrt(r) for a quadratic a E^2 + b E + c, the sign fixed by the series of E.
std::optional<std::string> quadratic_closed_form(const AlgebraicPoly& p, const TruncatedSeries& e) {
  if (p.degree() != 2) return std::nullopt;
  auto c = p.cleared();
  UPoly disc = c[1] * c[1] - c[2] * c[0] * Q(4);
  RationalFunction p0 = RationalFunction(-c[1]) / RationalFunction(c[2] * Q(2));
  if (disc.is_zero()) return "E = " + p0.to_string();
  auto parts = squarefree_factors(disc);
  UPoly g(1), r(1);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    g *= parts[i].pow(static_cast<unsigned>(i / 2));
    if (i % 2) r *= parts[i];
  }
  Q lead = disc.lc(), root;
  if (r.coeff(0) != 0) {
    lead *= r.coeff(0);
    r *= Q(1) / r.coeff(0);
  }
  RationalFunction gcoef = RationalFunction(g) / RationalFunction(c[2] * Q(2));
  if (rational_sqrt(lead, root)) {
    gcoef = gcoef * RationalFunction(root);
  } else {
    r *= lead;
  }
  std::string sign = "+-";
  std::size_t d = e.bound();
  if (r.coeff(0) != 0 && rational_sqrt(r.coeff(0), root)) {
    auto sr = rational_eval_series(RationalFunction(r), d).sqrt();
    auto base = rational_eval_series(p0, d);
    auto off = rational_eval_series(gcoef, d) * sr;
    if (base + off == e) sign = "+";
    else if (base - off == e) sign = "-";
  }
  return "E = " + p0.to_string() + " " + sign + " (" + gcoef.to_string() + ")*sqrt(" + r.to_string() + ")";
}

// Coarsest partition of unknowns whose equations coincide after renaming by class.
std::vector<std::size_t> bisimulation_classes(const std::vector<MultiPolynomial>& rhs, std::size_t first) {
  std::size_t m = rhs.size();
  std::vector<std::size_t> cls(m, 0);
  for (std::size_t i = 0; i < first; ++i) cls[i] = i + 1;
  std::size_t count = 0;
  for (;;) {
    std::map<std::pair<std::size_t, std::string>, std::size_t> ids;
    std::vector<std::size_t> next(m);
    for (std::size_t v = 0; v < m; ++v) {
      std::string sig;
      if (v >= first) {
        std::map<std::vector<std::pair<std::size_t, unsigned>>, RationalFunction> folded;
        for (const auto& [e, c] : rhs[v].terms()) {
          std::map<std::size_t, unsigned> k;
          for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) k[cls[i]] += e[i];
          folded[{k.begin(), k.end()}] += c;
        }
        for (const auto& [k, c] : folded) {
          if (c.is_zero()) continue;
          sig += c.to_string() + "*";
          for (auto [x, y] : k) sig += std::to_string(x) + "^" + std::to_string(y) + ".";
          sig += ";";
        }
      } else {
        sig = "#" + std::to_string(v);
      }
      next[v] = ids.emplace(std::pair{cls[v], sig}, ids.size()).first->second;
    }
    cls = next;
    if (ids.size() == count) return cls;
    count = ids.size();
  }
}

}  // namespace

HomologySpec parse_homology_spec(std::string_view input, const std::filesystem::path& base) {
  HomologySpec s;
  std::map<std::size_t, std::string> chain_lines;
  std::optional<std::string> gldim, oracle;
  for (const auto& line : text::content_lines(input)) {
    std::string rest;
    if (text::take_key(line, "n", rest)) {
      s.n = std::stoul(rest);
    } else if (text::take_key(line, "alphabet", rest)) {
      s.alphabet = Alphabet(text::split_ws(rest));
    } else if (text::take_key(line, "gldim", rest)) {
      gldim = rest;
    } else if (text::take_key(line, "oracle", rest)) {
      oracle = rest;
    } else if (line.starts_with("chain ")) {
      auto colon = line.find(':');
      if (colon == std::string::npos) throw InputError("chain line without ':'");
      std::size_t i = std::stoul(line.substr(6, colon - 6));
      if (i == 0 || !chain_lines.emplace(i, std::string(text::trim(line.substr(colon + 1)))).second)
        throw InputError("bad or repeated chain index " + std::to_string(i));
    } else {
      throw InputError("homology spec: unrecognised line '" + line + "'");
    }
  }
  if (s.n == 0) throw InputError("homology spec: missing n");
  if (s.alphabet && s.alphabet->size() != s.n) throw InputError("homology spec: n differs from the alphabet size");
  std::size_t expect = 1;
  for (const auto& [i, body] : chain_lines) {
    if (i != expect++) throw InputError("chain indices must be 1, 2, ... without gaps");
    auto f = text::split_ws(body);
    if (f.size() < 2) throw InputError("chain " + std::to_string(i) + ": expected a kind and an argument");
    ChainDescriptor c;
    c.source = body;
    std::string arg = body.substr(body.find(f[0]) + f[0].size());
    if (f[0] == "grammar") {
      c.kind = ChainDescriptor::Kind::Grammar;
      c.grammar = load_grammar(name_at(base, arg));
      if (s.alphabet) c.grammar = with_terminals(c.grammar, *s.alphabet);
    } else if (f[0] == "finite") {
      c.kind = ChainDescriptor::Kind::Finite;
      c.words = load_words(name_at(base, arg), s.alphabet);
    } else if (f[0] == "rational") {
      c.kind = ChainDescriptor::Kind::Rational;
      c.value = parse_t_expression(arg);
    } else {
      throw InputError("chain " + std::to_string(i) + ": unknown kind '" + f[0] + "'");
    }
    s.chains.push_back(std::move(c));
  }
  if (!gldim) throw InputError("homology spec: missing gldim");
  auto g = text::split_ws(*gldim);
  if (!g.empty() && g[0] == "infinite-uchain2") {
    if (!s.alphabet) throw InputError("uchain2 needs the alphabet line");
    std::map<std::string, std::string> kv;
    for (std::size_t i = 1; i < g.size(); ++i) {
      auto eq = g[i].find('=');
      if (eq == std::string::npos) throw InputError("uchain2: expected key=value, got '" + g[i] + "'");
      kv[g[i].substr(0, eq)] = g[i].substr(eq + 1);
    }
    for (const char* key : {"R", "Rp", "L"})
      if (!kv.count(key)) throw InputError(std::string("uchain2: missing ") + key);
    Uchain2Descriptor u;
    u.l = load_grammar(name_at(base, kv["L"]));
    std::vector<std::string> xs;
    for (const auto& name : s.alphabet->names())
      if (!u.l.terminals().find(name)) xs.push_back(name);
    for (const auto& name : u.l.terminals().names())
      if (!s.alphabet->find(name)) throw InputError("uchain2: terminal '" + name + "' of L is not in the alphabet");
    u.x = Alphabet(xs);
    u.r = load_words(name_at(base, kv["R"]), u.x);
    u.rp = load_words(name_at(base, kv["Rp"]), u.x);
    s.uchain2 = std::move(u);
  } else {
    if (g.size() != 1) throw InputError("gldim: expected a number or infinite-uchain2");
    s.global_dimension = std::stoul(g[0]);
    if (*s.global_dimension < 1 || s.chains.size() + 1 != *s.global_dimension)
      throw InputError("gldim " + g[0] + " does not match " + std::to_string(s.chains.size()) + " chain descriptors");
  }
  if (oracle) {
    s.oracle = load_relations(name_at(base, *oracle));
    if (s.oracle->alphabet.size() != s.n) throw InputError("oracle alphabet size differs from n");
  }
  return s;
}

HomologySpec load_homology_spec(const std::filesystem::path& path) {
  return parse_homology_spec(text::read_file(path), path.parent_path());
}

HilbertResult hilbert_from_homology(const HomologySpec& spec, std::size_t d, std::size_t cert_deg,
                                    std::size_t oracle_deg) {
  if (spec.uchain2) throw InputError("this homology spec has infinite global dimension; use the uchain2 route");
  HilbertResult res;
  std::size_t k = spec.chains.size();
  std::vector<std::string> names{"E"};
  for (std::size_t i = 1; i <= k; ++i) names.push_back("E" + std::to_string(i));
  std::vector<std::vector<std::size_t>> index(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = spec.chains[i];
    if (c.kind != ChainDescriptor::Kind::Grammar) continue;
    auto report = validate(c.grammar);
    require_finite_counts(c.grammar, report);
    for (std::size_t v = 0; v < c.grammar.num_variables(); ++v) {
      if (v == c.grammar.start()) {
        index[i].push_back(i + 1);
      } else {
        index[i].push_back(names.size());
        names.push_back(c.grammar.variables().name(static_cast<Symbol>(v)) + "_" + std::to_string(i + 1));
      }
    }
    auto cert = certify_unambiguous(c.grammar, cert_deg);
    res.certified = res.certified && cert.unambiguous;
    res.certificates.push_back(std::move(cert));
  }
  auto all = MultiPolynomial::make_names(names);
  std::size_t m = names.size();
  RationalFunction t = RationalFunction::t();
  std::vector<MultiPolynomial> rhs(m, MultiPolynomial(all));
  rhs[0] = MultiPolynomial::constant(all, RationalFunction(1) - t * RationalFunction(static_cast<int>(spec.n)));
  for (std::size_t i = 1; i <= k; ++i) {
    auto ei = MultiPolynomial::variable(all, i);
    rhs[0] += i % 2 ? ei : ei.scaled(-1);
  }
  // series of each E_i, used to seed and check the lifted root
  auto e_series = rational_eval_series(RationalFunction(1) - t * RationalFunction(static_cast<int>(spec.n)), d);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = spec.chains[i];
    TruncatedSeries s;
    switch (c.kind) {
      case ChainDescriptor::Kind::Grammar:
        for (const auto& p : c.grammar.productions()) {
          Exps e(m, 0);
          std::size_t terminals = 0;
          for (const auto& x : p.rhs) {
            if (x.is_var) ++e[index[i][x.id]];
            else ++terminals;
          }
          rhs[index[i][p.lhs]].add_term(e, RationalFunction(UPoly::monomial(1, terminals)));
        }
        s = derivation_series(c.grammar, d)[c.grammar.start()];
        break;
      case ChainDescriptor::Kind::Finite:
        rhs[i + 1] = MultiPolynomial::constant(all, census_polynomial(c.words));
        s = census_series(c.words, d);
        break;
      case ChainDescriptor::Kind::Rational:
        rhs[i + 1] = MultiPolynomial::constant(all, c.value);
        s = rational_eval_series(c.value, d);
        break;
    }
    e_series = (i % 2 == 0) ? e_series + s : e_series - s;
  }
  for (std::size_t v = 0; v < m; ++v) res.system += names[v] + " = " + rhs[v].to_string() + "\n";

  auto cls = bisimulation_classes(rhs, 1);
  std::vector<std::size_t> rep(m);
  std::map<std::size_t, std::size_t> first_of;
  for (std::size_t v = 0; v < m; ++v) {
    rep[v] = first_of.emplace(cls[v], v).first->second;
    if (rep[v] != v) res.merged.push_back(names[v] + "=" + names[rep[v]]);
  }
  std::vector<std::string> kept;
  for (std::size_t v = 0; v < m; ++v)
    if (rep[v] == v) kept.push_back(names[v]);
  auto small = MultiPolynomial::make_names(kept);
  std::vector<MultiPolynomial> gens;
  for (std::size_t v = 0; v < m; ++v) {
    if (rep[v] != v) continue;
    auto f = MultiPolynomial::variable(all, v) - rhs[v];
    for (std::size_t u = 0; u < m; ++u)
      if (rep[u] != u) f = f.substitute(u, MultiPolynomial::variable(all, rep[u]));
    gens.push_back(f.rename_into(small));
  }
  res.elimination = eliminate_univariate(gens, 0);
  if (!res.elimination.groebner.verified) throw MathError("Groebner basis failed its postconditions");
  res.p = res.elimination.poly;
  res.q = reciprocal_poly(res.p, "H");

  auto direct = e_series.inverse();
  auto lifted = newton_series(res.q, direct.truncate(std::min<std::size_t>(d, 8)), d);
  if (lifted.series != direct) throw MathError("the root of q(H) disagrees with the chain series");
  res.series = lifted.series;
  res.closed_form = quadratic_closed_form(res.p, e_series);
  if (spec.oracle) {
    std::size_t od = std::min(d, oracle_deg);
    auto o = hilbert_oracle(*spec.oracle, od);
    res.oracle = o;
    for (std::size_t i = 0; i <= od; ++i)
      if (o[i] != res.series[i])
        throw MathError("oracle mismatch at degree " + std::to_string(i) + ": the homology spec looks wrong");
  }
  return res;
}

Uchain2Result hilbert_uchain2(const RegularLanguage& r, const RegularLanguage& rp, const CFGrammar& l, std::size_t nm,
                              std::size_t d, std::size_t cert_deg) {
  if (!(r.alphabet() == rp.alphabet())) throw InputError("R and R' must share one alphabet");
  for (const auto& name : l.terminals().names())
    if (r.alphabet().find(name)) throw InputError("the alphabet of L must be disjoint from X");
  auto rd = minimize(r.to_dfa()), rpd = minimize(rp.to_dfa());
  std::size_t check = std::max<std::size_t>(d, 8);
  auto rw = rd.words_upto(check), rpw = rpd.words_upto(check);
  std::vector<Word> both(rw.begin(), rw.end());
  both.insert(both.end(), rpw.begin(), rpw.end());
  for (const auto& w : both)
    if (w.empty()) throw InputError("R and R' must not contain the empty word");
  if (!is_antichain(FiniteLanguage(both))) throw InputError("R and R' together are not an antichain");
  Uchain2Result u;
  u.gamma_r = gamma_automaton(rd);
  u.gamma_rp = gamma_automaton(rpd);
  u.gamma_q = gamma_automaton(overlap_language(rd, rpd));
  u.gamma_l = gamma_algebraic(l, d, cert_deg);
  if (u.gamma_l.series[0] != 0) {
    // with the empty word in L, relation words r r' may overlap beyond R and R'
    auto longer = [](const Dfa& a) {
      for (const auto& w : a.words_upto(a.size() + 1))
        if (w.size() > 1) return true;
      return false;
    };
    if (longer(rd) || longer(rpd))
      throw InputError("L contains the empty word, so R and R' may only contain single letters");
  }
  auto c1 = u.gamma_r * u.gamma_rp;
  auto base = RationalFunction(1) - RationalFunction::t() * RationalFunction(static_cast<int>(nm));
  u.closed_form = "HS^-1 = " + base.to_string() + " + (" + c1.to_string() + ")*G/(1 + (" + u.gamma_q.to_string() +
                  ")*G), " + u.gamma_l.poly.cleared_poly().to_string() + " = 0 at " + u.gamma_l.variable + " = G";
  const auto& g = u.gamma_l.series;
  u.inverse_series = rational_eval_series(base, d) +
                     rational_eval_series(c1, d) * g / (TruncatedSeries::constant(1, d) + rational_eval_series(u.gamma_q, d) * g);
  u.series = u.inverse_series.inverse();
  return u;
}

std::vector<ChainCheck> verify_chains(const HomologySpec& spec, std::size_t c) {
  if (!spec.alphabet) throw InputError("chain verification needs the alphabet line");
  if (spec.chains.empty()) return {};
  auto words_of = [&](const ChainDescriptor& x) -> std::optional<FiniteLanguage> {
    if (x.kind == ChainDescriptor::Kind::Grammar) return enumerate(x.grammar, c).words();
    if (x.kind == ChainDescriptor::Kind::Finite) {
      std::vector<Word> v;
      for (const auto& w : x.words)
        if (w.size() <= c) v.push_back(w);
      return FiniteLanguage(std::move(v));
    }
    return std::nullopt;
  };
  auto l1 = words_of(spec.chains[0]);
  if (!l1) throw InputError("chain 1 must be given by words or a grammar to verify chains");
  TruncatedLanguage base(c, *l1);
  std::vector<ChainCheck> out;
  std::size_t last = spec.chains.size() + (spec.global_dimension ? 1 : 0);
  for (std::size_t i = 1; i <= last; ++i) {
    std::optional<FiniteLanguage> declared =
        i <= spec.chains.size() ? words_of(spec.chains[i - 1]) : std::optional<FiniteLanguage>(FiniteLanguage{});
    auto computed = govorov_chains_trunc(base, spec.n, i, c).words();
    ChainCheck r;
    r.index = i;
    r.computed = computed.size();
    if (!declared) {
      // only the length profile is known for a rational chain
      auto s = rational_eval_series(spec.chains[i - 1].value, c);
      std::vector<Q> by_len(c + 1, 0);
      for (const auto& w : computed) by_len[w.size()] += 1;
      r.agrees = TruncatedSeries(by_len) == s;
      Q total = 0;
      for (const auto& x : s.coeffs()) total += x;
      r.declared = static_cast<std::size_t>(total.get_num().get_ui());
      out.push_back(r);
      continue;
    }
    r.declared = declared->size();
    r.agrees = *declared == computed;
    if (!r.agrees) {
      for (const auto& w : computed)
        if (!declared->contains(w)) {
          r.witness = w;
          break;
        }
      if (!r.witness)
        for (const auto& w : *declared)
          if (!computed.contains(w)) {
            r.witness = w;
            break;
          }
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace nchs
