#include "nchs/grammar.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "nchs/error.hpp"
#include "nchs/text.hpp"

namespace nchs {

CFGrammar::CFGrammar(Alphabet terminals, Alphabet variables, std::size_t start,
                     std::vector<Production> productions)
    : terminals_(std::move(terminals)),
      variables_(std::move(variables)),
      start_(start),
      productions_(std::move(productions)) {
  for (const auto& v : variables_.names())
    if (terminals_.find(v)) throw InputError("symbol is both terminal and variable: '" + v + "'");
  if (variables_.empty()) throw InputError("grammar has no variables");
  if (start_ >= variables_.size()) throw InputError("start variable out of range");
  by_lhs_.assign(variables_.size(), {});
  std::set<std::pair<std::size_t, std::vector<GSym>>> seen;
  for (std::size_t i = 0; i < productions_.size(); ++i) {
    const auto& p = productions_[i];
    if (p.lhs >= variables_.size()) throw InputError("production for unknown variable");
    for (const auto& s : p.rhs)
      if ((s.is_var && s.id >= variables_.size()) || (!s.is_var && s.id >= terminals_.size()))
        throw InputError("production uses an unknown symbol");
    if (!seen.emplace(p.lhs, p.rhs).second)
      throw InputError("duplicate production for '" + variables_.name(static_cast<Symbol>(p.lhs)) + "'");
    by_lhs_[p.lhs].push_back(i);
  }
  for (std::size_t v = 0; v < variables_.size(); ++v)
    if (by_lhs_[v].empty())
      throw InputError("variable '" + variables_.name(static_cast<Symbol>(v)) + "' has no production");
}

CFGrammar CFGrammar::with_start(std::size_t start) const {
  return CFGrammar(terminals_, variables_, start, productions_);
}

CFGrammar with_terminals(const CFGrammar& g, const Alphabet& alphabet) {
  std::vector<Production> prods = g.productions();
  for (auto& p : prods)
    for (auto& x : p.rhs)
      if (!x.is_var) x = GSym::term(alphabet.index(g.terminals().name(static_cast<Symbol>(x.id))));
  return CFGrammar(alphabet, g.variables(), g.start(), std::move(prods));
}

CFGrammar parse_grammar(std::string_view input) {
  std::optional<Alphabet> terms, vars;
  std::optional<std::string> start_name;
  std::vector<std::pair<std::string, std::string>> rules;
  for (const auto& line : text::content_lines(input)) {
    std::string rest;
    if (text::take_key(line, "terminals", rest)) {
      terms = Alphabet(text::split_ws(rest));
    } else if (text::take_key(line, "variables", rest)) {
      vars = Alphabet(text::split_ws(rest));
    } else if (text::take_key(line, "start", rest)) {
      start_name = rest;
    } else {
      auto arrow = line.find("->");
      if (arrow == std::string::npos) throw InputError("grammar: cannot parse line: " + line);
      rules.emplace_back(std::string(text::trim(std::string_view(line).substr(0, arrow))), line.substr(arrow + 2));
    }
  }
  if (!terms) throw InputError("grammar: missing 'terminals:' line");
  if (!vars) throw InputError("grammar: missing 'variables:' line");
  if (!start_name) throw InputError("grammar: missing 'start:' line");
  auto start = vars->find(*start_name);
  if (!start) throw InputError("grammar: start symbol is not a variable: " + *start_name);
  std::vector<Production> prods;
  for (const auto& [lhs, body] : rules) {
    auto l = vars->find(lhs);
    if (!l) throw InputError("grammar: left-hand side is not a variable: " + lhs);
    for (const auto& alt : text::split(body, '|')) {
      auto toks = text::split_ws(alt);
      if (toks.empty()) throw InputError("grammar: empty alternative for " + lhs + " (use eps)");
      Production p{*l, {}};
      if (!(toks.size() == 1 && toks[0] == "eps")) {
        for (const auto& t : toks) {
          if (auto v = vars->find(t)) {
            p.rhs.push_back(GSym::var(*v));
          } else if (auto x = terms->find(t)) {
            p.rhs.push_back(GSym::term(*x));
          } else {
            throw InputError("grammar: unknown symbol '" + t + "'");
          }
        }
      }
      prods.push_back(std::move(p));
    }
  }
  return CFGrammar(*terms, *vars, *start, std::move(prods));
}

CFGrammar load_grammar(const std::string& path) { return parse_grammar(text::read_file(path)); }

std::string format_rhs(const CFGrammar& g, const std::vector<GSym>& rhs) {
  if (rhs.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < rhs.size(); ++i) {
    if (i) out += ' ';
    const auto& s = rhs[i];
    out += s.is_var ? g.variables().name(static_cast<Symbol>(s.id)) : g.terminals().name(static_cast<Symbol>(s.id));
  }
  return out;
}

std::string format_grammar(const CFGrammar& g) {
  std::string out = "terminals:";
  for (const auto& n : g.terminals().names()) out += " " + n;
  out += "\nvariables:";
  for (const auto& n : g.variables().names()) out += " " + n;
  out += "\nstart: " + g.variables().name(static_cast<Symbol>(g.start())) + "\n";
  for (std::size_t v = 0; v < g.num_variables(); ++v) {
    out += g.variables().name(static_cast<Symbol>(v)) + " ->";
    bool first = true;
    for (auto pi : g.productions_of(v)) {
      out += first ? " " : " | ";
      first = false;
      out += format_rhs(g, g.productions()[pi].rhs);
    }
    out += '\n';
  }
  return out;
}

namespace {

// Same-length dependency order: B comes before A whenever A -> alpha B beta with
// alpha, beta nullable, restricted to productive variables and productions.
struct LengthOrder {
  std::vector<std::size_t> order;     // computable variables
  std::vector<bool> computable;       // productive and not on/through a cycle
  std::vector<std::size_t> min_len;   // shortest derivable word (productive vars)
};

bool production_productive(const Production& p, const std::vector<bool>& productive) {
  return std::all_of(p.rhs.begin(), p.rhs.end(), [&](const GSym& s) { return !s.is_var || productive[s.id]; });
}

std::vector<std::vector<std::size_t>> same_length_edges(const CFGrammar& g, const GrammarReport& r) {
  std::vector<std::vector<std::size_t>> deps(g.num_variables());
  for (const auto& p : g.productions()) {
    if (!r.productive[p.lhs] || !production_productive(p, r.productive)) continue;
    for (std::size_t j = 0; j < p.rhs.size(); ++j) {
      if (!p.rhs[j].is_var) continue;
      bool others_nullable = true;
      for (std::size_t k = 0; k < p.rhs.size() && others_nullable; ++k)
        if (k != j) others_nullable = p.rhs[k].is_var && r.nullable[p.rhs[k].id];
      if (others_nullable) deps[p.lhs].push_back(p.rhs[j].id);
    }
  }
  return deps;
}

LengthOrder length_order(const CFGrammar& g, const GrammarReport& r) {
  require_finite_counts(g, r);
  std::size_t n = g.num_variables();
  auto deps = same_length_edges(g, r);
  LengthOrder lo;
  lo.computable.assign(n, false);
  // Kahn on the reversed edges: a variable is ready once all its dependencies are.
  std::vector<std::size_t> pending(n, 0);
  std::vector<std::vector<std::size_t>> users(n);
  for (std::size_t a = 0; a < n; ++a)
    for (auto b : deps[a]) {
      ++pending[a];
      users[b].push_back(a);
    }
  std::deque<std::size_t> ready;
  for (std::size_t a = 0; a < n; ++a)
    if (r.productive[a] && pending[a] == 0) ready.push_back(a);
  while (!ready.empty()) {
    auto a = ready.front();
    ready.pop_front();
    lo.order.push_back(a);
    lo.computable[a] = true;
    for (auto u : users[a])
      if (--pending[u] == 0 && r.productive[u]) ready.push_back(u);
  }
  // Minimum lengths by Bellman-style relaxation.
  constexpr std::size_t inf = static_cast<std::size_t>(-1);
  lo.min_len.assign(n, inf);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g.productions()) {
      std::size_t len = 0;
      for (const auto& s : p.rhs) {
        std::size_t l = s.is_var ? lo.min_len[s.id] : 1;
        if (l == inf) {
          len = inf;
          break;
        }
        len += l;
      }
      if (len < lo.min_len[p.lhs]) {
        lo.min_len[p.lhs] = len;
        changed = true;
      }
    }
  }
  return lo;
}

}  // namespace

GrammarReport validate(const CFGrammar& g) {
  std::size_t n = g.num_variables();
  GrammarReport r;
  r.productive.assign(n, false);
  r.nullable.assign(n, false);
  r.reachable.assign(n, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g.productions()) {
      if (!r.productive[p.lhs] && production_productive(p, r.productive)) r.productive[p.lhs] = changed = true;
      bool null = std::all_of(p.rhs.begin(), p.rhs.end(), [&](const GSym& s) { return s.is_var && r.nullable[s.id]; });
      if (!r.nullable[p.lhs] && null) r.nullable[p.lhs] = changed = true;
    }
  }
  std::vector<std::size_t> stack{g.start()};
  r.reachable[g.start()] = true;
  while (!stack.empty()) {
    auto a = stack.back();
    stack.pop_back();
    for (auto pi : g.productions_of(a))
      for (const auto& s : g.productions()[pi].rhs)
        if (s.is_var && !r.reachable[s.id]) {
          r.reachable[s.id] = true;
          stack.push_back(s.id);
        }
  }
  // A variable is on a cycle iff it can reach itself in the dependency graph.
  auto deps = same_length_edges(g, r);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> st(deps[a].begin(), deps[a].end());
    bool cyc = false;
    while (!st.empty() && !cyc) {
      auto b = st.back();
      st.pop_back();
      if (b == a) cyc = true;
      if (seen[b]) continue;
      seen[b] = true;
      for (auto c : deps[b]) st.push_back(c);
    }
    if (cyc) r.cycle_variables.push_back(a);
  }
  r.has_unit_or_epsilon_cycle = !r.cycle_variables.empty();
  r.is_right_linear = std::all_of(g.productions().begin(), g.productions().end(), [](const Production& p) {
    return p.rhs.empty() || (p.rhs.size() == 2 && !p.rhs[0].is_var && p.rhs[1].is_var);
  });
  return r;
}

void require_finite_counts(const CFGrammar& g, const GrammarReport& report) {
  for (auto a : report.cycle_variables)
    if (report.reachable[a] && report.productive[a])
      throw InputError("grammar has a unit/epsilon derivation cycle through '" +
                       g.variables().name(static_cast<Symbol>(a)) + "'; counts diverge");
}

Enumeration enumerate_all(const CFGrammar& g, std::size_t d, std::size_t cap) {
  auto report = validate(g);
  auto lo = length_order(g, report);
  std::size_t nv = g.num_variables();
  Enumeration e;
  e.bound = d;
  e.words.assign(nv, std::vector<std::vector<Word>>(d + 1));
  std::size_t stored = 0;
  std::vector<Word> acc;
  for (std::size_t k = 0; k <= d; ++k) {
    for (auto a : lo.order) {
      acc.clear();
      for (auto pi : g.productions_of(a)) {
        const auto& rhs = g.productions()[pi].rhs;
        if (!production_productive(g.productions()[pi], report.productive)) continue;
        bool usable = std::all_of(rhs.begin(), rhs.end(), [&](const GSym& s) { return !s.is_var || lo.computable[s.id]; });
        if (!usable) continue;
        // suffix minimum lengths for pruning
        std::vector<std::size_t> tail(rhs.size() + 1, 0);
        for (std::size_t j = rhs.size(); j-- > 0;)
          tail[j] = tail[j + 1] + (rhs[j].is_var ? lo.min_len[rhs[j].id] : 1);
        if (tail[0] > k) continue;
        Word cur;
        auto rec = [&](auto&& self, std::size_t j, std::size_t remaining) -> void {
          if (j == rhs.size()) {
            if (remaining == 0) acc.push_back(cur);
            return;
          }
          const auto& s = rhs[j];
          if (!s.is_var) {
            if (remaining < 1 + tail[j + 1]) return;
            cur.push_back(static_cast<Symbol>(s.id));
            self(self, j + 1, remaining - 1);
            cur.pop_back();
            return;
          }
          for (std::size_t l = lo.min_len[s.id]; l + tail[j + 1] <= remaining; ++l) {
            std::size_t mark = cur.size();
            for (const auto& w : e.words[s.id][l]) {
              cur += w;
              self(self, j + 1, remaining - l);
              cur = cur.prefix(mark);
            }
          }
        };
        rec(rec, 0, k);
      }
      std::sort(acc.begin(), acc.end());
      acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
      stored += acc.size();
      if (stored > cap)
        throw ResourceError("grammar enumeration exceeded the cap of " + std::to_string(cap) + " words");
      e.words[a][k] = acc;
    }
  }
  return e;
}

TruncatedLanguage enumerate(const CFGrammar& g, std::size_t d, std::size_t cap) {
  auto e = enumerate_all(g, d, cap);
  std::vector<Word> all;
  for (const auto& layer : e.words[g.start()]) all.insert(all.end(), layer.begin(), layer.end());
  return TruncatedLanguage(d, FiniteLanguage(std::move(all)));
}

std::vector<std::vector<mpz_class>> count_derivations(const CFGrammar& g, std::size_t d) {
  auto report = validate(g);
  auto lo = length_order(g, report);
  std::size_t nv = g.num_variables();
  std::vector<std::vector<mpz_class>> c(nv, std::vector<mpz_class>(d + 1, 0));
  for (std::size_t k = 0; k <= d; ++k) {
    for (auto a : lo.order) {
      mpz_class total = 0;
      for (auto pi : g.productions_of(a)) {
        const auto& rhs = g.productions()[pi].rhs;
        bool usable = std::all_of(rhs.begin(), rhs.end(), [&](const GSym& s) { return !s.is_var || lo.computable[s.id]; });
        if (!usable) continue;
        // f[l]: derivation count of the processed prefix of rhs yielding length l
        std::vector<mpz_class> f(k + 1, 0);
        f[0] = 1;
        for (const auto& s : rhs) {
          std::vector<mpz_class> nf(k + 1, 0);
          for (std::size_t l = 0; l <= k; ++l) {
            if (f[l] == 0) continue;
            if (!s.is_var) {
              if (l + 1 <= k) nf[l + 1] += f[l];
              continue;
            }
            for (std::size_t m = 0; l + m <= k; ++m)
              if (c[s.id][m] != 0) nf[l + m] += f[l] * c[s.id][m];
          }
          f = std::move(nf);
        }
        total += f[k];
      }
      c[a][k] = total;
    }
  }
  return c;
}

mpz_class count_parses(const CFGrammar& g, const Word& w) {
  auto report = validate(g);
  auto lo = length_order(g, report);
  std::size_t n = w.size(), nv = g.num_variables();
  // N[a][i][len]
  std::vector<std::vector<std::vector<mpz_class>>> N(
      nv, std::vector<std::vector<mpz_class>>(n + 1, std::vector<mpz_class>(n + 1, 0)));
  for (std::size_t len = 0; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      for (auto a : lo.order) {
        mpz_class total = 0;
        for (auto pi : g.productions_of(a)) {
          const auto& rhs = g.productions()[pi].rhs;
          bool usable = std::all_of(rhs.begin(), rhs.end(), [&](const GSym& s) { return !s.is_var || lo.computable[s.id]; });
          if (!usable) continue;
          // f[p]: ways the processed prefix derives w[i, i+p)
          std::vector<mpz_class> f(len + 1, 0);
          f[0] = 1;
          for (const auto& s : rhs) {
            std::vector<mpz_class> nf(len + 1, 0);
            for (std::size_t p = 0; p <= len; ++p) {
              if (f[p] == 0) continue;
              if (!s.is_var) {
                if (p < len && w[i + p] == s.id) nf[p + 1] += f[p];
                continue;
              }
              for (std::size_t q = p; q <= len; ++q)
                if (N[s.id][i + p][q - p] != 0) nf[q] += f[p] * N[s.id][i + p][q - p];
            }
            f = std::move(nf);
          }
          total += f[len];
        }
        N[a][i][len] = total;
      }
    }
  }
  return N[g.start()][0][n];
}

AmbiguityReport certify_unambiguous(const CFGrammar& g, std::size_t d) {
  AmbiguityReport rep;
  rep.bound = d;
  auto counts = count_derivations(g, d);
  auto e = enumerate_all(g, d);
  for (std::size_t k = 0; k <= d; ++k) {
    const auto& words = e.words[g.start()][k];
    if (counts[g.start()][k] == words.size()) continue;
    rep.unambiguous = false;
    for (const auto& w : words) {
      auto p = count_parses(g, w);
      if (p >= 2) {
        rep.counterexample = w;
        rep.counterexample_parses = p;
        break;
      }
    }
    break;
  }
  return rep;
}

CykParser::CykParser(const CFGrammar& g) {
  std::size_t nv = g.num_variables(), nt = g.num_terminals();
  std::uint32_t next = static_cast<std::uint32_t>(nv + nt);
  start_ = static_cast<std::uint32_t>(g.start());
  by_terminal_.assign(nt, {});
  for (std::size_t x = 0; x < nt; ++x) by_terminal_[x].push_back(static_cast<std::uint32_t>(nv + x));
  auto sym = [&](const GSym& s) { return static_cast<std::uint32_t>(s.is_var ? s.id : nv + s.id); };
  std::vector<std::uint32_t> eps_lhs;
  for (const auto& p : g.productions()) {
    auto lhs = static_cast<std::uint32_t>(p.lhs);
    const auto& r = p.rhs;
    if (r.empty()) {
      eps_lhs.push_back(lhs);
    } else if (r.size() == 1) {
      unary_.push_back({lhs, sym(r[0])});
    } else {
      std::uint32_t cur = lhs;
      for (std::size_t j = 0; j + 2 < r.size(); ++j) {
        std::uint32_t fresh = next++;
        binary_.push_back({cur, sym(r[j]), fresh});
        cur = fresh;
      }
      binary_.push_back({cur, sym(r[r.size() - 2]), sym(r.back())});
    }
  }
  num_symbols_ = next;
  nullable_.assign(num_symbols_, false);
  for (auto a : eps_lhs) nullable_[a] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& b : binary_)
      if (!nullable_[b.lhs] && nullable_[b.left] && nullable_[b.right]) nullable_[b.lhs] = changed = true;
    for (const auto& u : unary_)
      if (!nullable_[u.lhs] && nullable_[u.child]) nullable_[u.lhs] = changed = true;
  }
}

bool CykParser::accepts(const Word& w, std::size_t from, std::size_t to) const {
  return chart(w, from, to)[from];
}

std::vector<bool> CykParser::chart(const Word& w, std::size_t from, std::size_t to) const {
  std::size_t n = to - from, ns = num_symbols_;
  // chart[(i * (n + 1) + j) * ns + s], for 0 <= i <= j <= n
  std::vector<char> chart((n + 1) * (n + 1) * ns, 0);
  auto cell = [&](std::size_t i, std::size_t j) { return chart.data() + (i * (n + 1) + j) * ns; };
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t s = 0; s < ns; ++s) cell(i, i)[s] = nullable_[s];
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      std::size_t j = i + len;
      char* c = cell(i, j);
      if (len == 1)
        for (auto s : by_terminal_[w[from + i]]) c[s] = 1;
      for (bool changed = true; changed;) {
        changed = false;
        for (const auto& b : binary_) {
          if (c[b.lhs]) continue;
          for (std::size_t p = i; p <= j; ++p)
            if (cell(i, p)[b.left] && cell(p, j)[b.right]) {
              c[b.lhs] = 1;
              changed = true;
              break;
            }
        }
        for (const auto& u : unary_)
          if (!c[u.lhs] && c[u.child]) c[u.lhs] = changed = true;
      }
    }
  }
  std::vector<bool> r(to + 1, false);
  for (std::size_t i = 0; i <= n; ++i) r[from + i] = cell(i, n)[start_];
  return r;
}

bool cyk_member(const CFGrammar& g, const Word& w) { return CykParser(g).accepts(w); }

CFGrammar trim(const CFGrammar& g) {
  auto r = validate(g);
  std::size_t nv = g.num_variables();
  // Reachability is recomputed through productive productions only.
  std::vector<bool> keep(nv, false);
  keep[g.start()] = true;
  std::vector<std::size_t> st{g.start()};
  while (!st.empty()) {
    auto a = st.back();
    st.pop_back();
    for (auto pi : g.productions_of(a)) {
      const auto& p = g.productions()[pi];
      if (!production_productive(p, r.productive)) continue;
      for (const auto& s : p.rhs)
        if (s.is_var && !keep[s.id]) {
          keep[s.id] = true;
          st.push_back(s.id);
        }
    }
  }
  std::vector<std::size_t> remap(nv, nv);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < nv; ++a)
    if (keep[a]) {
      remap[a] = names.size();
      names.push_back(g.variables().name(static_cast<Symbol>(a)));
    }
  std::vector<Production> prods;
  for (const auto& p : g.productions()) {
    if (!keep[p.lhs] || !production_productive(p, r.productive)) continue;
    Production q{remap[p.lhs], {}};
    for (const auto& s : p.rhs) q.rhs.push_back(s.is_var ? GSym::var(remap[s.id]) : s);
    prods.push_back(std::move(q));
  }
  // An unproductive start keeps a self-loop so the grammar stays well formed.
  if (!r.productive[g.start()] && g.num_terminals() > 0)
    prods.push_back({remap[g.start()], {GSym::term(0), GSym::var(remap[g.start()])}});
  return CFGrammar(g.terminals(), Alphabet(names), remap[g.start()], std::move(prods));
}

}  // namespace nchs
