#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <new>
#include <optional>
#include <sstream>

#include "nchs/csys.hpp"
#include "nchs/error.hpp"
#include "nchs/gsb.hpp"
#include "nchs/homology.hpp"
#include "nchs/regular.hpp"
#include "nchs/text.hpp"

namespace nchs::cli {

namespace fs = std::filesystem;

std::string data_dir() {
  if (const char* env = std::getenv("NCHS_DATA")) return env;
  return NCHS_DATA_DIR;
}

namespace {

struct Config {
  std::string input;
  std::size_t max_deg = 12;
  std::size_t cert_deg = kDefaultCertDegree;
  std::size_t k = 2;
  std::size_t max_k = 6;
  std::optional<std::size_t> alphabet_size;
  std::optional<std::size_t> verify_chains;
  std::uint64_t cap = kDefaultOracleCap;
  std::string keep;
  std::string predict, finite;
  bool ideal = false;
  bool basis = false;
  std::string format = "text";
};

// Key/value output: `key: value` for people, `key=value` for machines.
class Report {
 public:
  Report(std::ostream& os, bool structured) : os_(os), structured_(structured) {}

  void put(const std::string& key, const std::string& value) {
    if (structured_) {
      std::string v = value;
      while (!v.empty() && v.back() == '\n') v.pop_back();
      for (auto& c : v)
        if (c == '\n') c = ';';
      os_ << key << '=' << v << '\n';
      return;
    }
    if (value.find('\n') == std::string::npos) {
      os_ << key << ": " << value << '\n';
      return;
    }
    os_ << key << ":\n";
    for (const auto& line : text::split(value, '\n'))
      if (!line.empty()) os_ << "  " << line << '\n';
  }
  void put(const std::string& key, std::size_t v) { put(key, std::to_string(v)); }
  void flag(const std::string& key, bool v) { put(key, v ? "true" : "false"); }

  /// A series with its validity bound and certification status.
  void series(const std::string& key, const TruncatedSeries& s, bool certified) {
    if (structured_) {
      put(key, s.to_string());
      put(key + ".bound", s.bound());
      flag(key + ".certified", certified);
      return;
    }
    os_ << key << " (exact to degree " << s.bound() << (certified ? ", certified" : ", not certified")
        << "): " << s.to_string() << '\n';
  }

  void check(const std::string& name, bool ok) {
    put("check." + name, ok ? "pass" : "FAIL");
    all_ok_ = all_ok_ && ok;
  }
  bool all_ok() const { return all_ok_; }

 private:
  std::ostream& os_;
  bool structured_;
  bool all_ok_ = true;
};

std::string words_text(const FiniteLanguage& l, const Alphabet& a) {
  std::string s;
  for (const auto& w : l) s += (s.empty() ? "" : " | ") + format_word(w, a);
  return s.empty() ? "(none)" : s;
}

bool is_grammar_file(const std::string& path) { return fs::path(path).extension() == ".gf"; }

// ---- subcommands ----

void cmd_gamma(const Config& c, Report& r) {
  auto g = load_grammar(c.input);
  auto report = validate(g);
  if (report.is_right_linear && c.keep.empty()) {
    auto f = gamma_rational(g);
    auto cert = certify_unambiguous(g, c.cert_deg);
    r.put("method", "rational");
    r.put("gamma", f.to_string());
    r.series("series", rational_eval_series(f, c.max_deg), cert.unambiguous);
    r.put("certificate.bound", cert.bound);
    return;
  }
  std::optional<std::size_t> keep;
  if (!c.keep.empty()) {
    auto v = g.variables().find(c.keep);
    if (!v) throw InputError("unknown variable '" + c.keep + "'");
    keep = *v;
  }
  auto res = gamma_algebraic(g, c.max_deg, c.cert_deg, keep);
  r.put("method", "algebraic");
  r.put("system", build_system(g).to_string());
  r.put("variable", res.variable);
  r.put("poly", res.poly.cleared_poly().to_string());
  r.series("series", res.series, res.certified());
  r.put("certificate.bound", res.certificate.bound);
  if (res.certificate.counterexample)
    r.put("certificate.counterexample", format_word(*res.certificate.counterexample, g.terminals()));
}

void cmd_ambiguity(const Config& c, Report& r) {
  auto g = load_grammar(c.input);
  require_finite_counts(g, validate(g));
  auto a = certify_unambiguous(g, c.max_deg);
  r.flag("unambiguous", a.unambiguous);
  r.put("bound", a.bound);
  if (a.counterexample) {
    r.put("counterexample", format_word(*a.counterexample, g.terminals()));
    r.put("parses", a.counterexample_parses.get_str());
  }
}

RegularLanguage regular_input(const Config& c) {
  if (c.ideal) {
    auto l = parse_language(text::read_file(c.input));
    return RegularLanguage::ideal(l.alphabet, l.words);
  }
  return RegularLanguage::grammar(load_grammar(c.input));
}

void cmd_quotient_grammar(const Config& c, Report& r) {
  auto l = regular_input(c);
  auto g = myhill_nerode_grammar(l);
  r.put("variables", g.num_variables());
  r.put("grammar", format_grammar(g));
  auto dfa = minimize(l.to_dfa());
  auto expect = dfa.words_upto(c.max_deg);
  auto got = enumerate(g, c.max_deg).words();
  r.check("enumeration_to_" + std::to_string(c.max_deg), expect == got);
}

void cmd_chains(const Config& c, Report& r) {
  auto l = parse_language(text::read_file(c.input));
  auto res = chains_finite(l.words, c.max_k);
  for (std::size_t i = 1; i <= res.chains.size(); ++i)
    r.put("L" + std::to_string(i), words_text(res.language(i), l.alphabet));
  if (res.global_dimension)
    r.put("gldim", *res.global_dimension);
  else
    r.put("gldim", "> " + std::to_string(c.max_k));
}

void cmd_govorov(const Config& c, Report& r) {
  TruncatedLanguage l1;
  Alphabet a;
  if (is_grammar_file(c.input)) {
    auto g = load_grammar(c.input);
    l1 = enumerate(g, c.max_deg);
    a = g.terminals();
  } else {
    auto l = parse_language(text::read_file(c.input));
    l1 = TruncatedLanguage::finite(l.words);
    a = l.alphabet;
  }
  std::size_t n = c.alphabet_size.value_or(a.size());
  if (n < a.size()) throw InputError("alphabet size is smaller than the alphabet of L1");
  auto lk = govorov_chains_trunc(l1, n, c.k, c.max_deg);
  r.put("k", c.k);
  r.put("bound", c.max_deg);
  r.put("count", lk.words().size());
  r.put("L" + std::to_string(c.k), words_text(lk.words(), a));
}

void report_uchain2(const HomologySpec& s, const Config& c, Report& r) {
  const auto& u = *s.uchain2;
  auto rl = RegularLanguage::automaton(u.x, finite_dfa(u.r, u.x.size()));
  auto rpl = RegularLanguage::automaton(u.x, finite_dfa(u.rp, u.x.size()));
  auto res = hilbert_uchain2(rl, rpl, u.l, s.n, c.max_deg, c.cert_deg);
  r.put("route", "uchain2");
  r.put("gamma_R", res.gamma_r.to_string());
  r.put("gamma_Rp", res.gamma_rp.to_string());
  r.put("gamma_Q", res.gamma_q.to_string());
  r.put("closed_form", res.closed_form);
  r.series("inverse_series", res.inverse_series, res.gamma_l.certified());
  r.series("series", res.series, res.gamma_l.certified());
  if (s.oracle) {
    std::size_t od = std::min<std::size_t>(c.max_deg, 10);
    auto o = hilbert_oracle(*s.oracle, od, c.cap);
    r.series("oracle", o, true);
    r.check("oracle_to_" + std::to_string(od), o == res.series.truncate(od));
  }
}

void cmd_hilbert(const Config& c, Report& r, bool uchain2_only) {
  auto s = load_homology_spec(c.input);
  if (s.uchain2) {
    report_uchain2(s, c, r);
  } else {
    if (uchain2_only) throw InputError("the homology spec does not describe an infinite-uchain2 algebra");
    auto h = hilbert_from_homology(s, c.max_deg, c.cert_deg);
    r.put("route", "homology");
    r.put("system", h.system);
    for (const auto& m : h.merged) r.put("merged", m);
    r.put("p", h.p.cleared_poly().to_string());
    r.put("q", h.q.cleared_poly().to_string());
    if (h.closed_form) r.put("closed_form", *h.closed_form);
    r.series("series", h.series, h.certified);
    if (h.oracle) {
      r.series("oracle", *h.oracle, true);
      r.check("oracle_to_" + std::to_string(h.oracle->bound()), true);
    }
  }
  if (c.verify_chains) {
    for (const auto& k : verify_chains(s, *c.verify_chains)) {
      std::string key = "chain" + std::to_string(k.index);
      r.put(key + ".declared", k.declared);
      r.put(key + ".computed", k.computed);
      if (k.witness) r.put(key + ".witness", format_word(*k.witness, *s.alphabet));
      r.check(key + "_to_" + std::to_string(*c.verify_chains), k.agrees);
    }
  }
}

void cmd_oracle(const Config& c, Report& r) {
  auto rel = load_relations(c.input);
  r.series("series", hilbert_oracle(rel, c.max_deg, c.cap), true);
}

void cmd_gsb(const Config& c, Report& r) {
  auto p = load_presentation(c.input);
  auto b = gs_complete(p.relations, p.order, c.max_deg);
  auto lm = leading_language(b, p.order);
  r.put("max_deg", c.max_deg);
  r.put("basis_size", b.size());
  if (c.basis) {
    std::string s;
    for (const auto& g : b) s += g.to_string(p.alphabet, p.order) + "\n";
    r.put("basis", s);
  }
  r.put("leading", words_text(lm, p.alphabet));
  r.check("overlaps_resolve", overlaps_resolve(b, p.order, c.max_deg));
  if (!c.predict.empty()) {
    auto g = with_terminals(load_grammar(c.predict), p.alphabet);
    FiniteLanguage fin;
    if (!c.finite.empty()) fin = parse_language(text::read_file(c.finite), &p.alphabet).words;
    auto cmp = compare_leading(g, fin, lm, c.max_deg);
    r.put("missing", words_text(FiniteLanguage(cmp.missing), p.alphabet));
    r.put("extra", words_text(FiniteLanguage(cmp.extra), p.alphabet));
    r.check("prediction", cmp.agrees());
  }
}

// ---- bundled examples ----

std::string data(const std::string& name) { return (fs::path(data_dir()) / name).string(); }

void example_grammar(Report& r, const std::string& file, const std::vector<long>& expect) {
  auto g = load_grammar(data(file));
  auto res = gamma_algebraic(g, expect.size() - 1);
  r.put("system", build_system(g).to_string());
  r.put("p_" + res.variable, res.poly.cleared_poly().to_string());
  r.series("series", res.series, res.certified());
  r.check("certified", res.certified());
  r.check("series", res.series == TruncatedSeries::from_ints(expect));
}

void example_palindromes(Report& r) {
  for (int n : {2, 3}) {
    auto f = gamma_linear(load_grammar(data("palindromes" + std::to_string(n) + ".gf")));
    std::size_t d = 12;
    auto s = rational_eval_series(f, d);
    r.put("gamma_" + std::to_string(n), f.to_string());
    r.series("series_" + std::to_string(n), s, true);
    bool ok = true;
    for (std::size_t k = 0; k <= d; ++k) {
      // palindromes of length k are fixed by their first ceil(k/2) letters
      mpz_class count;
      mpz_ui_pow_ui(count.get_mpz_t(), n, (k + 1) / 2);
      ok = ok && s[k] == Q(count);
    }
    r.check("palindromes_" + std::to_string(n), ok);
  }
}

void example_xstarystar(Report& r) {
  auto l = RegularLanguage::grammar(load_grammar(data("xstarystar.gf")));
  auto g = myhill_nerode_grammar(l);
  r.put("grammar", format_grammar(g));
  r.check("three_variables", g.num_variables() == 3);
  r.check("enumeration_to_10", enumerate(g, 10).words() == minimize(l.to_dfa()).words_upto(10));
}

void example_homology(Report& r, const std::string& spec, std::size_t d, const std::vector<long>& expect) {
  Config c;
  c.input = data(spec);
  c.max_deg = d;
  cmd_hilbert(c, r, false);
  auto h = hilbert_from_homology(load_homology_spec(c.input), d);
  r.check("reference_series", h.series.truncate(expect.size() - 1) == TruncatedSeries::from_ints(expect));
}

void example_countex(Report& r) {
  auto l1 = enumerate(load_grammar(data("countex_L1.gf")), 12);
  auto l2 = govorov_chains_trunc(l1, 3, 2, 12).words();
  r.put("L2", words_text(l2, Alphabet({"x", "y", "z"})));
  r.check("L2_three_words", l2.size() == 3);
  auto h = hilbert_from_homology(load_homology_spec(data("countex.hs")), 10);
  auto o = hilbert_oracle(load_relations(data("countex.rel")), 10);
  r.put("p", h.p.cleared_poly().to_string());
  r.series("series", h.series, h.certified);
  r.check("rational", h.p.degree() == 1);
  r.check("oracle_to_10", o == h.series);
}

void example_ex3(Report& r) {
  Config c;
  c.input = data("ex3.hs");
  c.max_deg = 10;
  cmd_hilbert(c, r, true);
}

void example_gsb(Report& r, const std::string& stem, std::size_t d, const std::vector<long>& expect) {
  Config g;
  g.input = data(stem + ".pres");
  g.max_deg = 8;
  g.predict = data(stem + "_predict.gf");
  g.finite = data(stem + "_finite.txt");
  cmd_gsb(g, r);
  auto h = hilbert_from_homology(load_homology_spec(data(stem + ".hs")), d);
  r.put("p", h.p.cleared_poly().to_string());
  if (h.closed_form) r.put("closed_form", *h.closed_form);
  r.series("series", h.series, h.certified);
  r.check("reference_series", h.series == TruncatedSeries::from_ints(expect));
  if (h.oracle) r.check("oracle_to_" + std::to_string(h.oracle->bound()), true);
  // the leading ideal counts the same normal words
  auto p = load_presentation(g.input);
  RelationSet rel{p.alphabet, leading_language(gs_complete(p.relations, p.order, d + 1), p.order), {}, {}};
  r.check("leading_ideal_series", hilbert_oracle(rel, d) == h.series);
}

const std::map<std::string, std::function<void(Report&)>>& examples() {
  static const std::map<std::string, std::function<void(Report&)>> m = {
      {"ifthenelse", [](Report& r) { example_grammar(r, "ifthenelse.gf", {1, 1, 2, 3, 6, 10, 20, 35}); }},
      {"dyck", [](Report& r) { example_grammar(r, "dyck.gf", {1, 0, 1, 0, 2, 0, 5, 0, 14}); }},
      {"lukasiewicz", [](Report& r) { example_grammar(r, "lukasiewicz.gf", {0, 1, 0, 1, 0, 2, 0, 5, 0, 14}); }},
      {"palindromes", example_palindromes},
      {"xstarystar", example_xstarystar},
      {"countex", example_countex},
      {"ex1", [](Report& r) { example_homology(r, "ex1.hs", 7, {1, 6, 36, 210, 1228, 7175, 41929, 245017}); }},
      {"ex2", [](Report& r) { example_homology(r, "ex2.hs", 7, {1, 7, 49, 343, 2401, 16801, 117565, 822655}); }},
      {"ex3", example_ex3},
      {"fpex", [](Report& r) { example_gsb(r, "fpex", 7, {1, 7, 36, 166, 730, 3139, 13350, 56466}); }},
      {"aprime", [](Report& r) { example_gsb(r, "aprime", 6, {1, 9, 69, 516, 3844, 28620, 213070}); }},
  };
  return m;
}

void cmd_verify_example(const std::string& id, Report& r) {
  std::string key = id == "fpex-variant" ? "aprime" : id;
  auto it = examples().find(key);
  if (it == examples().end()) {
    std::string known;
    for (const auto& [k, v] : examples()) known += " " + k;
    throw InputError("unknown example '" + id + "'; known:" + known + " fpex-variant");
  }
  r.put("example", key);
  it->second(r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Hilbert series of noncommutative monomial algebras from grammars and chains", "nchs");
  app.require_subcommand(1);
  app.fallthrough();
  Config c;
  std::string example;
  app.add_option("--format", c.format, "text or structured (key=value lines)")
      ->check(CLI::IsMember({"text", "structured"}));

  auto input = [&](CLI::App* s, const char* what) { s->add_option("input", c.input, what)->required(); };
  auto deg = [&](CLI::App* s) { s->add_option("--max-deg,-d", c.max_deg, "degree bound")->capture_default_str(); };
  auto cert = [&](CLI::App* s) {
    s->add_option("--cert-deg", c.cert_deg, "unambiguity certification bound")->capture_default_str();
  };

  auto* gamma = app.add_subcommand("gamma", "generating function of a grammar");
  input(gamma, "grammar file");
  deg(gamma);
  cert(gamma);
  gamma->add_option("--keep", c.keep, "variable whose language to count (default: start)");

  auto* amb = app.add_subcommand("ambiguity", "search for a word with two parse trees");
  input(amb, "grammar file");
  deg(amb);

  auto* qg = app.add_subcommand("quotient-grammar", "right-quotient grammar of a regular language");
  input(qg, "right-linear grammar, or language file with --ideal");
  deg(qg);
  qg->add_flag("--ideal", c.ideal, "input lists an antichain; the language is its ideal");

  auto* ch = app.add_subcommand("chains", "chains of a finite antichain");
  input(ch, "language file");
  ch->add_option("--max-k", c.max_k, "highest chain index")->capture_default_str();

  auto* gov = app.add_subcommand("govorov-chains", "k-chains from set formulas, truncated");
  input(gov, "language file or grammar (.gf) for L1");
  deg(gov);
  gov->add_option("-k", c.k, "chain index")->capture_default_str();
  gov->add_option("--alphabet-size", c.alphabet_size, "size of X (default: symbols of L1)");

  auto* hil = app.add_subcommand("hilbert", "Hilbert series from a homology spec");
  input(hil, "homology spec");
  deg(hil);
  cert(hil);
  hil->add_option("--verify-chains", c.verify_chains, "check declared chains up to this length");

  auto* orc = app.add_subcommand("oracle", "count normal words");
  input(orc, "relations file");
  deg(orc);
  orc->add_option("--cap", c.cap, "words visited before giving up")->capture_default_str();

  auto* uc = app.add_subcommand("uchain2", "closed form for relations R L R'");
  input(uc, "homology spec with an infinite-uchain2 line");
  deg(uc);
  cert(uc);

  auto* gsb = app.add_subcommand("gsb", "truncated Groebner-Shirshov completion");
  input(gsb, "presentation file");
  deg(gsb);
  gsb->add_option("--predict", c.predict, "grammar of the predicted leading words");
  gsb->add_option("--finite", c.finite, "language file with the predicted finite part");
  gsb->add_flag("--basis", c.basis, "print the basis elements");

  auto* ve = app.add_subcommand("verify-example", "rerun a bundled example and its cross-checks");
  ve->add_option("id", example, "example id")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream buf;
  Report r(buf, c.format == "structured");
  int status = 0;
  try {
    if (gamma->parsed()) cmd_gamma(c, r);
    else if (amb->parsed()) cmd_ambiguity(c, r);
    else if (qg->parsed()) cmd_quotient_grammar(c, r);
    else if (ch->parsed()) cmd_chains(c, r);
    else if (gov->parsed()) cmd_govorov(c, r);
    else if (hil->parsed()) cmd_hilbert(c, r, false);
    else if (orc->parsed()) cmd_oracle(c, r);
    else if (uc->parsed()) cmd_hilbert(c, r, true);
    else if (gsb->parsed()) cmd_gsb(c, r);
    else if (ve->parsed()) cmd_verify_example(example, r);
    if (!r.all_ok()) status = 1;
  } catch (const Error& e) {
    out << buf.str();
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::bad_alloc&) {
    out << buf.str();
    err << "error: out of memory\n";
    return 3;
  }
  out << buf.str();
  if (status != 0) err << "error: a cross-check failed\n";
  return status;
}

}  // namespace nchs::cli
