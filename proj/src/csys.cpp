#include "nchs/csys.hpp"

#include <algorithm>

#include "nchs/error.hpp"

namespace nchs {

std::string AlgebraicSystem::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rhs.size(); ++i) out += (*unknowns)[i] + " = " + rhs[i].to_string() + "\n";
  return out;
}

AlgebraicSystem build_system(const CFGrammar& g) {
  AlgebraicSystem s;
  s.unknowns = MultiPolynomial::make_names(g.variables().names());
  std::size_t m = g.num_variables();
  s.rhs.assign(m, MultiPolynomial(s.unknowns));
  for (const auto& p : g.productions()) {
    Exps e(m, 0);
    std::size_t terminals = 0;
    for (const auto& x : p.rhs) {
      if (x.is_var) ++e[x.id];
      else ++terminals;
    }
    s.rhs[p.lhs].add_term(e, RationalFunction(UPoly::monomial(1, terminals)));
  }
  for (std::size_t i = 0; i < m; ++i) s.equations.push_back(MultiPolynomial::variable(s.unknowns, i) - s.rhs[i]);
  return s;
}

RationalFunction gamma_linear(const CFGrammar& g) {
  std::size_t m = g.num_variables();
  std::vector<std::vector<RationalFunction>> a(m, std::vector<RationalFunction>(m));
  std::vector<RationalFunction> b(m);
  for (std::size_t i = 0; i < m; ++i) a[i][i] = 1;
  for (const auto& p : g.productions()) {
    std::size_t terminals = 0, vars = 0, v = 0;
    for (const auto& x : p.rhs) {
      if (x.is_var) {
        ++vars;
        v = x.id;
      } else {
        ++terminals;
      }
    }
    if (vars > 1) throw InputError("grammar is not linear: a right-hand side has two variables");
    RationalFunction tk(UPoly::monomial(1, terminals));
    if (vars == 0) b[p.lhs] += tk;
    else a[p.lhs][v] -= tk;
  }
  return gaussian_solve(std::move(a), std::move(b))[g.start()];
}

RationalFunction gamma_rational(const CFGrammar& g) {
  if (!validate(g).is_right_linear) throw InputError("grammar is not right-linear");
  return gamma_linear(g);
}

RationalFunction gamma_automaton(const Dfa& a) {
  // g_q = [q accepting] + t * sum over symbols of g_delta(q, x)
  std::size_t m = a.size();
  std::vector<std::vector<RationalFunction>> mat(m, std::vector<RationalFunction>(m));
  std::vector<RationalFunction> b(m);
  RationalFunction t(UPoly::monomial(1, 1));
  for (std::size_t q = 0; q < m; ++q) {
    mat[q][q] += RationalFunction(1);
    for (auto r : a.delta[q]) mat[q][r] -= t;
    if (a.accepting[q]) b[q] = 1;
  }
  return gaussian_solve(std::move(mat), std::move(b))[a.initial];
}

std::vector<TruncatedSeries> derivation_series(const CFGrammar& g, std::size_t d) {
  std::vector<TruncatedSeries> out;
  for (const auto& row : count_derivations(g, d)) {
    std::vector<Q> c;
    for (const auto& x : row) c.emplace_back(x);
    out.emplace_back(std::move(c));
  }
  return out;
}

GammaResult gamma_algebraic(const CFGrammar& g, std::size_t d, std::size_t cert_deg, std::optional<std::size_t> keep) {
  std::size_t k = keep.value_or(g.start());
  if (k >= g.num_variables()) throw InputError("unknown variable to keep");
  auto report = validate(g);
  require_finite_counts(g, report);
  GammaResult r;
  r.variable = g.variables().name(static_cast<Symbol>(k));
  auto gk = g.with_start(k);
  r.certificate = certify_unambiguous(gk, cert_deg);
  auto system = build_system(g);
  r.elimination = eliminate_univariate(system.equations, k);
  r.poly = r.elimination.poly;
  std::size_t reach = std::max(d, std::min<std::size_t>(cert_deg, 12));
  auto counts = derivation_series(g, reach)[k];
  r.series = newton_series(r.poly, counts.truncate(std::min<std::size_t>(reach, 8)), reach).series;
  for (std::size_t i = 0; i <= reach; ++i)
    if (r.series[i] != counts[i])
      throw MathError("series of " + r.variable + " disagrees with derivation counts at degree " + std::to_string(i));
  if (r.certified()) {
    std::size_t e = std::min<std::size_t>(reach, cert_deg);
    auto words = enumerate_all(gk, e).words[k];
    for (std::size_t i = 0; i <= e; ++i)
      if (r.series[i] != Q(static_cast<unsigned long>(words[i].size())))
        throw MathError("series of " + r.variable + " disagrees with the word census at degree " + std::to_string(i));
  }
  r.series = r.series.truncate(d);
  return r;
}

bool system_vanishes(const AlgebraicSystem& s, const std::vector<TruncatedSeries>& values, std::size_t d) {
  return std::all_of(s.equations.begin(), s.equations.end(),
                     [&](const MultiPolynomial& f) { return series_valuation(f.evaluate(values, d)) > d; });
}

}  // namespace nchs
