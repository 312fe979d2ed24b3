#include "nchs/regular.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "nchs/error.hpp"

namespace nchs {

std::uint32_t Dfa::run(std::uint32_t state, const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) state = delta[state][w[i]];
  return state;
}

std::vector<mpz_class> Dfa::census(std::size_t d) const {
  std::vector<mpz_class> cur(size(), 0), out(d + 1, 0);
  cur[initial] = 1;
  for (std::size_t k = 0; k <= d; ++k) {
    for (std::size_t s = 0; s < size(); ++s)
      if (accepting[s]) out[k] += cur[s];
    if (k == d) break;
    std::vector<mpz_class> next(size(), 0);
    for (std::size_t s = 0; s < size(); ++s) {
      if (cur[s] == 0) continue;
      for (auto t : delta[s]) next[t] += cur[s];
    }
    cur = std::move(next);
  }
  return out;
}

FiniteLanguage Dfa::words_upto(std::size_t d) const {
  // Prune states from which no accepting state is reachable.
  std::vector<bool> live(accepting);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t s = 0; s < size(); ++s)
      if (!live[s] && std::any_of(delta[s].begin(), delta[s].end(), [&](auto t) { return live[t]; }))
        live[s] = changed = true;
  }
  std::vector<Word> out;
  Word cur;
  auto rec = [&](auto&& self, std::uint32_t s) -> void {
    if (accepting[s]) out.push_back(cur);
    if (cur.size() == d) return;
    for (std::size_t x = 0; x < num_symbols; ++x) {
      auto t = delta[s][x];
      if (!live[t]) continue;
      cur.push_back(static_cast<Symbol>(x));
      self(self, t);
      cur.pop_back();
    }
  };
  if (live[initial]) rec(rec, initial);
  return FiniteLanguage(std::move(out));
}

std::uint32_t Nfa::add_state(bool accept) {
  edges.emplace_back();
  accepting.push_back(accept);
  return static_cast<std::uint32_t>(edges.size() - 1);
}

Nfa Nfa::from_dfa(const Dfa& d) {
  Nfa n;
  n.num_symbols = d.num_symbols;
  for (std::size_t s = 0; s < d.size(); ++s) n.add_state(d.accepting[s]);
  for (std::size_t s = 0; s < d.size(); ++s)
    for (std::size_t x = 0; x < d.num_symbols; ++x)
      n.edges[s].push_back({static_cast<std::uint32_t>(x), d.delta[s][x]});
  n.initial = {d.initial};
  return n;
}

namespace {

std::vector<std::uint32_t> eps_closure(const Nfa& n, std::vector<std::uint32_t> set) {
  std::vector<bool> in(n.edges.size(), false);
  for (auto s : set) in[s] = true;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (const auto& e : n.edges[set[i]])
      if (e.symbol == Nfa::kEps && !in[e.target]) {
        in[e.target] = true;
        set.push_back(e.target);
      }
  std::sort(set.begin(), set.end());
  return set;
}

}  // namespace

Dfa determinize(const Nfa& n, std::size_t cap) {
  Dfa d;
  d.num_symbols = n.num_symbols;
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  std::deque<std::vector<std::uint32_t>> queue;
  auto intern = [&](std::vector<std::uint32_t> set) {
    auto [it, fresh] = index.emplace(set, static_cast<std::uint32_t>(d.delta.size()));
    if (fresh) {
      if (d.delta.size() >= cap)
        throw ResourceError("subset construction exceeded the cap of " + std::to_string(cap) + " states");
      d.delta.emplace_back(n.num_symbols, 0);
      d.accepting.push_back(std::any_of(set.begin(), set.end(), [&](auto s) { return n.accepting[s]; }));
      queue.push_back(std::move(set));
    }
    return it->second;
  };
  d.initial = intern(eps_closure(n, n.initial));
  for (std::uint32_t id = 0; !queue.empty(); ++id) {
    auto set = std::move(queue.front());
    queue.pop_front();
    for (std::size_t x = 0; x < n.num_symbols; ++x) {
      std::vector<std::uint32_t> next;
      for (auto s : set)
        for (const auto& e : n.edges[s])
          if (e.symbol == x) next.push_back(e.target);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      auto t = intern(eps_closure(n, std::move(next)));
      d.delta[id][x] = t;
    }
  }
  return d;
}

Dfa minimize(const Dfa& d) {
  // reachable states
  std::vector<std::int64_t> reach(d.size(), -1);
  std::vector<std::uint32_t> order{d.initial};
  reach[d.initial] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto t : d.delta[order[i]])
      if (reach[t] < 0) {
        reach[t] = static_cast<std::int64_t>(order.size());
        order.push_back(t);
      }
  std::size_t n = order.size(), k = d.num_symbols;
  // Moore refinement on the reachable part.
  std::vector<std::uint32_t> cls(n);
  for (std::size_t i = 0; i < n; ++i) cls[i] = d.accepting[order[i]] ? 1 : 0;
  std::size_t num_classes = 0;
  for (;;) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> sig;
    std::vector<std::uint32_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint32_t> key{cls[i]};
      for (std::size_t x = 0; x < k; ++x) key.push_back(cls[reach[d.delta[order[i]][x]]]);
      next[i] = sig.emplace(std::move(key), static_cast<std::uint32_t>(sig.size())).first->second;
    }
    cls = std::move(next);
    if (sig.size() == num_classes) break;
    num_classes = sig.size();
  }
  // Renumber classes in BFS order from the initial state.
  std::vector<std::size_t> rep(num_classes, n);
  for (std::size_t i = 0; i < n; ++i)
    if (rep[cls[i]] == n) rep[cls[i]] = i;
  std::vector<std::int64_t> id(num_classes, -1);
  std::vector<std::uint32_t> bfs{cls[0]};
  id[cls[0]] = 0;
  Dfa m;
  m.num_symbols = k;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    auto c = bfs[i];
    auto s = order[rep[c]];
    for (std::size_t x = 0; x < k; ++x) {
      auto tc = cls[reach[d.delta[s][x]]];
      if (id[tc] < 0) {
        id[tc] = static_cast<std::int64_t>(bfs.size());
        bfs.push_back(tc);
      }
    }
  }
  m.delta.assign(bfs.size(), std::vector<std::uint32_t>(k));
  m.accepting.assign(bfs.size(), false);
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    auto s = order[rep[bfs[i]]];
    m.accepting[i] = d.accepting[s];
    for (std::size_t x = 0; x < k; ++x) m.delta[i][x] = static_cast<std::uint32_t>(id[cls[reach[d.delta[s][x]]]]);
  }
  m.initial = 0;
  return m;
}

bool equivalent(const Dfa& a, const Dfa& b) {
  if (a.num_symbols != b.num_symbols) return false;
  auto x = product(a, b, SetOp::Difference);
  auto y = product(b, a, SetOp::Difference);
  auto nonempty = [](const Dfa& d) {
    std::vector<bool> seen(d.size(), false);
    std::vector<std::uint32_t> st{d.initial};
    seen[d.initial] = true;
    while (!st.empty()) {
      auto s = st.back();
      st.pop_back();
      if (d.accepting[s]) return true;
      for (auto t : d.delta[s])
        if (!seen[t]) {
          seen[t] = true;
          st.push_back(t);
        }
    }
    return false;
  };
  return !nonempty(x) && !nonempty(y);
}

Dfa universal_dfa(std::size_t k) {
  Dfa d;
  d.num_symbols = k;
  d.delta = {std::vector<std::uint32_t>(k, 0)};
  d.accepting = {true};
  return d;
}

Dfa empty_dfa(std::size_t k) {
  Dfa d = universal_dfa(k);
  d.accepting = {false};
  return d;
}

Dfa finite_dfa(const FiniteLanguage& words, std::size_t k) {
  // Trie with a dead state 0.
  Dfa d;
  d.num_symbols = k;
  d.delta = {std::vector<std::uint32_t>(k, 0), std::vector<std::uint32_t>(k, 0)};
  d.accepting = {false, false};
  d.initial = 1;
  for (const auto& w : words) {
    std::uint32_t s = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] >= k) throw InputError("word uses a symbol outside the alphabet");
      if (d.delta[s][w[i]] == 0) {
        d.delta[s][w[i]] = static_cast<std::uint32_t>(d.size());
        d.delta.emplace_back(k, 0);
        d.accepting.push_back(false);
      }
      s = d.delta[s][w[i]];
    }
    d.accepting[s] = true;
  }
  return d;
}

Dfa complement(const Dfa& d) {
  Dfa c = d;
  c.accepting.flip();
  return c;
}

Dfa product(const Dfa& a, const Dfa& b, SetOp op) {
  if (a.num_symbols != b.num_symbols) throw InputError("automata over different alphabets");
  Dfa d;
  d.num_symbols = a.num_symbols;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> states;
  auto intern = [&](std::uint32_t p, std::uint32_t q) {
    std::uint64_t key = (std::uint64_t(p) << 32) | q;
    auto [it, fresh] = index.emplace(key, static_cast<std::uint32_t>(states.size()));
    if (fresh) {
      states.emplace_back(p, q);
      bool x = a.accepting[p], y = b.accepting[q];
      d.accepting.push_back(op == SetOp::Union ? (x || y) : op == SetOp::Intersection ? (x && y) : (x && !y));
      d.delta.emplace_back(d.num_symbols, 0);
    }
    return it->second;
  };
  d.initial = intern(a.initial, b.initial);
  for (std::size_t i = 0; i < states.size(); ++i)
    for (std::size_t x = 0; x < d.num_symbols; ++x) {
      auto [p, q] = states[i];
      auto t = intern(a.delta[p][x], b.delta[q][x]);
      d.delta[i][x] = t;
    }
  return d;
}

Dfa concat(const Dfa& a, const Dfa& b, std::size_t cap) {
  Nfa n = Nfa::from_dfa(a);
  auto offset = static_cast<std::uint32_t>(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) n.accepting[s] = false;
  for (std::size_t s = 0; s < b.size(); ++s) n.add_state(b.accepting[s]);
  for (std::size_t s = 0; s < b.size(); ++s)
    for (std::size_t x = 0; x < b.num_symbols; ++x)
      n.edges[offset + s].push_back({static_cast<std::uint32_t>(x), offset + b.delta[s][x]});
  for (std::size_t s = 0; s < a.size(); ++s)
    if (a.accepting[s]) n.edges[s].push_back({Nfa::kEps, offset + b.initial});
  return minimize(determinize(n, cap));
}

IdealAutomaton ideal_automaton(const FiniteLanguage& basis, std::size_t k) {
  // Trie nodes, then Aho-Corasick failure links.
  std::vector<std::vector<std::int64_t>> child{std::vector<std::int64_t>(k, -1)};
  std::vector<bool> terminal{false};
  std::vector<Word> label{Word{}};
  for (const auto& w : basis) {
    std::size_t s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] >= k) throw InputError("basis word uses a symbol outside the alphabet");
      if (child[s][w[i]] < 0) {
        child[s][w[i]] = static_cast<std::int64_t>(child.size());
        child.emplace_back(k, -1);
        terminal.push_back(false);
        label.push_back(label[s] + Word{w[i]});
      }
      s = static_cast<std::size_t>(child[s][w[i]]);
    }
    terminal[s] = true;
  }
  std::size_t m = child.size();
  std::vector<std::size_t> fail(m, 0);
  std::vector<bool> out(terminal);
  std::vector<std::vector<std::size_t>> go(m, std::vector<std::size_t>(k, 0));
  std::deque<std::size_t> queue;
  for (std::size_t x = 0; x < k; ++x) {
    if (child[0][x] >= 0) {
      go[0][x] = static_cast<std::size_t>(child[0][x]);
      queue.push_back(go[0][x]);
    }
  }
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    out[u] = out[u] || out[fail[u]];
    for (std::size_t x = 0; x < k; ++x) {
      if (child[u][x] >= 0) {
        auto v = static_cast<std::size_t>(child[u][x]);
        fail[v] = go[fail[u]][x];
        go[u][x] = v;
        queue.push_back(v);
      } else {
        go[u][x] = go[fail[u]][x];
      }
    }
  }
  // Automaton states: non-absorbed trie nodes reachable from the root, plus the sink.
  IdealAutomaton ia;
  Dfa& d = ia.dfa;
  d.num_symbols = k;
  std::vector<std::int64_t> id(m, -1);
  std::vector<std::size_t> nodes;
  std::int64_t sink = -1;
  auto intern = [&](std::size_t node) -> std::uint32_t {
    if (out[node]) {
      if (sink < 0) {
        sink = static_cast<std::int64_t>(nodes.size());
        nodes.push_back(m);
        QuotientState q;
        q.absorbed = true;
        ia.states.push_back(q);
      }
      return static_cast<std::uint32_t>(sink);
    }
    if (id[node] < 0) {
      id[node] = static_cast<std::int64_t>(nodes.size());
      nodes.push_back(node);
      QuotientState q;
      for (std::size_t s = node; s != 0; s = fail[s]) q.active.push_back(label[s]);
      std::sort(q.active.begin(), q.active.end());
      ia.states.push_back(std::move(q));
    }
    return static_cast<std::uint32_t>(id[node]);
  };
  d.initial = intern(0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    d.delta.emplace_back(k, 0);
    if (nodes[i] == m) {
      for (std::size_t x = 0; x < k; ++x) d.delta[i][x] = static_cast<std::uint32_t>(i);
      continue;
    }
    for (std::size_t x = 0; x < k; ++x) {
      auto t = intern(go[nodes[i]][x]);
      d.delta[i][x] = t;
    }
  }
  d.accepting.assign(nodes.size(), false);
  if (sink >= 0) d.accepting[sink] = true;
  return ia;
}

RegularLanguage::RegularLanguage(Alphabet alphabet, Form form) : alphabet_(std::move(alphabet)), form_(std::move(form)) {
  if (auto* g = std::get_if<CFGrammar>(&form_)) {
    if (!validate(*g).is_right_linear) throw InputError("regular language grammar is not right-linear");
  } else if (auto* d = std::get_if<Dfa>(&form_)) {
    if (d->num_symbols != alphabet_.size() || d->accepting.size() != d->size() || d->initial >= d->size())
      throw InputError("malformed automaton");
    for (const auto& row : d->delta) {
      if (row.size() != alphabet_.size()) throw InputError("automaton is not total");
      for (auto t : row)
        if (t >= d->size()) throw InputError("automaton transition to unknown state");
    }
  }
}

RegularLanguage RegularLanguage::ideal(Alphabet alphabet, FiniteLanguage basis) {
  if (!is_antichain(basis)) throw InputError("ideal basis is not an antichain");
  return RegularLanguage(std::move(alphabet), Ideal{std::move(basis)});
}

RegularLanguage RegularLanguage::grammar(CFGrammar g) {
  Alphabet a = g.terminals();
  return RegularLanguage(std::move(a), std::move(g));
}

RegularLanguage RegularLanguage::automaton(Alphabet alphabet, Dfa d) {
  return RegularLanguage(std::move(alphabet), std::move(d));
}

Nfa right_linear_nfa(const CFGrammar& g) {
  Nfa n;
  n.num_symbols = g.num_terminals();
  for (std::size_t v = 0; v < g.num_variables(); ++v) n.add_state(false);
  for (const auto& p : g.productions()) {
    if (p.rhs.empty()) {
      n.accepting[p.lhs] = true;
    } else if (p.rhs.size() == 2 && !p.rhs[0].is_var && p.rhs[1].is_var) {
      n.edges[p.lhs].push_back({p.rhs[0].id, p.rhs[1].id});
    } else {
      throw InputError("production is not of the form A -> eps or A -> x B");
    }
  }
  n.initial = {static_cast<std::uint32_t>(g.start())};
  return n;
}

Dfa RegularLanguage::to_dfa(std::size_t cap) const {
  return std::visit(
      [&](const auto& f) -> Dfa {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Ideal>) {
          return ideal_automaton(f.basis, alphabet_.size()).dfa;
        } else if constexpr (std::is_same_v<T, CFGrammar>) {
          return determinize(right_linear_nfa(f), cap);
        } else {
          return f;
        }
      },
      form_);
}

bool RegularLanguage::contains(const Word& w) const {
  if (const auto* i = std::get_if<Ideal>(&form_)) return !is_normal(w, i->basis);
  return to_dfa().accepts(w);
}

RegularLanguage right_quotient(const RegularLanguage& l, const Word& w) {
  Dfa d = l.to_dfa();
  d.initial = d.run(d.initial, w);
  return RegularLanguage::automaton(l.alphabet(), std::move(d));
}

CFGrammar myhill_nerode_grammar(const RegularLanguage& l, std::size_t cap) {
  // Each state of the minimal automaton is one right quotient; BFS in FIFO order
  // discovers them in the order the quotient search would.
  Dfa m = minimize(l.to_dfa(cap));
  std::size_t k = l.alphabet().size();
  std::vector<std::int64_t> var(m.size(), -1);
  std::deque<std::uint32_t> queue{m.initial};
  std::vector<std::uint32_t> visited;
  var[m.initial] = 0;
  std::vector<Production> prods;
  while (!queue.empty()) {
    auto s = queue.front();
    queue.pop_front();
    visited.push_back(s);
    if (visited.size() > cap)
      throw ResourceError("quotient search exceeded the cap of " + std::to_string(cap) + " states");
    auto a = static_cast<std::size_t>(var[s]);
    if (m.accepting[s]) prods.push_back({a, {}});
    for (std::size_t x = 0; x < k; ++x) {
      auto t = m.delta[s][x];
      if (var[t] < 0) {
        var[t] = static_cast<std::int64_t>(visited.size() + queue.size());
        queue.push_back(t);
      }
      prods.push_back({a, {GSym::term(x), GSym::var(static_cast<std::size_t>(var[t]))}});
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < visited.size(); ++i) {
    std::string n = "A" + std::to_string(i + 1);
    while (l.alphabet().find(n)) n += "'";
    names.push_back(n);
  }
  return CFGrammar(l.alphabet(), Alphabet(names), 0, std::move(prods));
}

Dfa overlap_language(const Dfa& r, const Dfa& rp, std::size_t cap) {
  std::size_t k = r.num_symbols;
  Dfa all = universal_dfa(k);
  Dfa r_x = concat(r, all, cap);
  Dfa x_rp = concat(all, rp, cap);
  Dfa r_x_rp = concat(r_x, rp, cap);
  return minimize(product(product(r_x, x_rp, SetOp::Intersection), r_x_rp, SetOp::Difference));
}

std::string dump_automaton(const Dfa& d, const Alphabet& alphabet) {
  std::string out;
  for (std::size_t s = 0; s < d.size(); ++s)
    for (std::size_t x = 0; x < d.num_symbols; ++x)
      out += std::to_string(s) + " " + alphabet.name(static_cast<Symbol>(x)) + " -> " + std::to_string(d.delta[s][x]) + "\n";
  out += "accepting:";
  for (std::size_t s = 0; s < d.size(); ++s)
    if (d.accepting[s]) out += " " + std::to_string(s);
  out += "\ninitial: " + std::to_string(d.initial) + "\n";
  return out;
}

}  // namespace nchs
