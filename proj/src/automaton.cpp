#include "hk/automaton.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "hk/detail/scc.hpp"
#include "hk/errors.hpp"

namespace hk {

ForbiddenPatternSet leading_term_language(const Digraph& g,
                                          const GenOrder& ord) {
  const int n = g.vertex_count();
  const std::uint32_t full = n == 32 ? 0xffffffffu : (1u << n) - 1;
  ForbiddenPatternSet out;
  out.alphabet = n;
  for (Letter t = 1; t <= n; ++t) {
    const std::uint32_t self = 1u << (t - 1);
    out.patterns.push_back(
        {RuleFamily::Ti, t, full & ~(g.in_mask(t) | self), t});
  }
  for (Letter t = 1; t <= n; ++t) {
    const std::uint32_t self = 1u << (t - 1);
    out.patterns.push_back(
        {RuleFamily::Tii, t, full & ~(g.out_mask(t) | self), t});
  }
  for (Letter x = 1; x <= n; ++x) {
    const std::uint32_t x_bit = 1u << (x - 1);
    const std::uint32_t around = g.in_mask(x) | g.out_mask(x) | x_bit;
    for (Letter z = 1; z <= n; ++z) {
      if (z == x || !ord.less(x, z)) continue;
      if (around & (1u << (z - 1))) continue;  // connected or equal
      out.patterns.push_back({RuleFamily::Tiii, z, full & ~around, x});
    }
  }
  return out;
}

std::string schema_text(const ForbiddenPatternSet& p) {
  std::ostringstream out;
  auto letter = [&](Letter x) -> std::string {
    if (p.alphabet <= 26) return std::string(1, static_cast<char>('a' + x - 1));
    return std::to_string(x);
  };
  for (const ForbiddenPattern& pat : p.patterns) {
    out << family_name(pat.family) << ": " << letter(pat.first) << "<";
    bool first = true;
    for (Letter x = 1; x <= p.alphabet; ++x) {
      if ((pat.middle >> (x - 1)) & 1u) {
        if (!first) out << ",";
        out << letter(x);
        first = false;
      }
    }
    out << ">" << letter(pat.last) << "\n";
  }
  return out.str();
}

NormalWordDfa build_normal_dfa(const ForbiddenPatternSet& p,
                               std::size_t state_cap) {
  const int n = p.alphabet;
  const std::size_t k = p.patterns.size();
  if (k > 64) {
    throw BudgetError("more than 64 forbidden patterns (" +
                      std::to_string(k) + "); graph too large");
  }

  // per letter: which patterns it starts, may continue, or completes
  std::vector<std::uint64_t> starts(n, 0), continues(n, 0), completes(n, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const ForbiddenPattern& pat = p.patterns[i];
    starts[pat.first - 1] |= std::uint64_t{1} << i;
    completes[pat.last - 1] |= std::uint64_t{1} << i;
    for (Letter a = 1; a <= n; ++a) {
      if ((pat.middle >> (a - 1)) & 1u) continues[a - 1] |= std::uint64_t{1} << i;
    }
  }

  constexpr std::uint32_t kDead = 0xffffffffu;
  std::unordered_map<std::uint64_t, std::uint32_t> ids;
  std::vector<std::uint64_t> masks;
  std::vector<std::uint32_t> delta;
  ids.emplace(0, 0);
  masks.push_back(0);
  for (std::uint32_t s = 0; s < masks.size(); ++s) {
    const std::uint64_t active = masks[s];
    for (Letter a = 1; a <= n; ++a) {
      std::uint32_t target;
      if (active & completes[a - 1]) {
        target = kDead;
      } else {
        const std::uint64_t next_mask =
            starts[a - 1] | (active & continues[a - 1]);
        auto [it, inserted] =
            ids.emplace(next_mask, static_cast<std::uint32_t>(masks.size()));
        if (inserted) {
          masks.push_back(next_mask);
          if (masks.size() > state_cap) {
            throw BudgetError("normal-word automaton exceeds the state cap");
          }
        }
        target = it->second;
      }
      delta.push_back(target);
    }
  }

  NormalWordDfa dfa;
  dfa.n_ = n;
  dfa.dead_ = static_cast<std::uint32_t>(masks.size());
  dfa.delta_.resize((masks.size() + 1) * n);
  for (std::uint32_t s = 0; s < masks.size(); ++s) {
    for (int a = 0; a < n; ++a) {
      const std::uint32_t t = delta[static_cast<std::size_t>(s) * n + a];
      dfa.delta_[static_cast<std::size_t>(s) * n + a] =
          t == kDead ? dfa.dead_ : t;
    }
  }
  for (int a = 0; a < n; ++a) {
    dfa.delta_[static_cast<std::size_t>(dfa.dead_) * n + a] = dfa.dead_;
  }
  return dfa;
}

bool NormalWordDfa::accepts(const Word& w) const {
  std::uint32_t s = start();
  for (Letter a : w) {
    if (a < 1 || a > n_) {
      throw std::invalid_argument("letter outside the automaton alphabet");
    }
    s = next(s, a);
    if (s == dead_) return false;
  }
  return true;
}

NormalWordDfa NormalWordDfa::minimized() const {
  const std::uint32_t m = state_count();
  // Moore refinement: start from {live, dead}, split by transition classes.
  std::vector<std::uint32_t> cls(m);
  for (std::uint32_t s = 0; s < m; ++s) cls[s] = alive(s) ? 0 : 1;
  std::uint32_t classes = 2;
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> signature_ids;
    std::vector<std::uint32_t> next_cls(m);
    std::vector<std::uint32_t> sig(n_ + 1);
    for (std::uint32_t s = 0; s < m; ++s) {
      sig[0] = cls[s];
      for (int a = 1; a <= n_; ++a) sig[a] = cls[next(s, a)];
      auto [it, inserted] =
          signature_ids.emplace(sig, static_cast<std::uint32_t>(
                                         signature_ids.size()));
      next_cls[s] = it->second;
    }
    const auto new_count = static_cast<std::uint32_t>(signature_ids.size());
    cls.swap(next_cls);
    if (new_count == classes) break;
    classes = new_count;
  }

  // relabel classes in breadth-first order from the start, dead last
  constexpr std::uint32_t kUnset = 0xffffffffu;
  std::vector<std::uint32_t> rep(classes, kUnset);
  for (std::uint32_t s = 0; s < m; ++s) {
    if (rep[cls[s]] == kUnset) rep[cls[s]] = s;
  }
  std::vector<std::uint32_t> relabel(classes, kUnset);
  std::vector<std::uint32_t> order;
  relabel[cls[start()]] = 0;
  order.push_back(cls[start()]);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::uint32_t c = order[i];
    for (int a = 1; a <= n_; ++a) {
      const std::uint32_t d = cls[next(rep[c], a)];
      if (relabel[d] == kUnset && d != cls[dead_]) {
        relabel[d] = static_cast<std::uint32_t>(order.size());
        order.push_back(d);
      }
    }
  }
  const auto live_classes = static_cast<std::uint32_t>(order.size());
  relabel[cls[dead_]] = live_classes;

  NormalWordDfa out;
  out.n_ = n_;
  out.dead_ = live_classes;
  out.delta_.resize((static_cast<std::size_t>(live_classes) + 1) * n_);
  for (std::uint32_t c = 0; c < live_classes; ++c) {
    const std::uint32_t s = rep[order[c]];
    for (int a = 1; a <= n_; ++a) {
      out.delta_[static_cast<std::size_t>(c) * n_ + (a - 1)] =
          relabel[cls[next(s, a)]];
    }
  }
  for (int a = 0; a < n_; ++a) {
    out.delta_[static_cast<std::size_t>(out.dead_) * n_ + a] = out.dead_;
  }
  return out;
}

std::string NormalWordDfa::to_dot() const {
  std::ostringstream out;
  out << "digraph normal_words {\n  rankdir=LR;\n"
      << "  node [shape=doublecircle];\n"
      << "  init [shape=point];\n  init -> s0;\n";
  for (std::uint32_t s = 0; s < state_count(); ++s) {
    if (!alive(s)) continue;
    for (int a = 1; a <= n_; ++a) {
      const std::uint32_t t = next(s, a);
      if (!alive(t)) continue;  // the dead sink is left implicit
      out << "  s" << s << " -> s" << t << " [label=\"";
      if (n_ <= 26) {
        out << static_cast<char>('a' + a - 1);
      } else {
        out << a;
      }
      out << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::vector<BigUint> count_normal_words(const NormalWordDfa& dfa,
                                        int max_len) {
  if (max_len < 0) throw std::invalid_argument("max_len must be >= 0");
  const std::uint32_t m = dfa.state_count();
  std::vector<BigUint> occ(m), next_occ(m);
  occ[dfa.start()] = BigUint(1);
  std::vector<BigUint> counts;
  counts.reserve(max_len + 1);
  for (int len = 0;; ++len) {
    BigUint total;
    for (std::uint32_t s = 0; s < m; ++s) {
      if (dfa.alive(s)) total += occ[s];
    }
    counts.push_back(std::move(total));
    if (len == max_len) break;
    for (auto& b : next_occ) b = BigUint();
    for (std::uint32_t s = 0; s < m; ++s) {
      if (!dfa.alive(s) || occ[s].is_zero()) continue;
      for (int a = 1; a <= dfa.alphabet(); ++a) {
        const std::uint32_t t = dfa.next(s, a);
        if (dfa.alive(t)) next_occ[t] += occ[s];
      }
    }
    occ.swap(next_occ);
  }
  return counts;
}

std::string to_string(const Classification& c) {
  switch (c.kind) {
    case Classification::Kind::Finite: return "finite";
    case Classification::Kind::Polynomial:
      return "gk=" + std::to_string(c.gk);
    case Classification::Kind::Exponential: return "exponential";
  }
  return "?";
}

Classification classify_growth(const NormalWordDfa& dfa) {
  const std::uint32_t m = dfa.state_count();
  // live states reachable from the start
  std::vector<bool> seen(m, false);
  std::vector<std::uint32_t> order;
  if (dfa.alive(dfa.start())) {
    seen[dfa.start()] = true;
    order.push_back(dfa.start());
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int a = 1; a <= dfa.alphabet(); ++a) {
      const std::uint32_t t = dfa.next(order[i], a);
      if (dfa.alive(t) && !seen[t]) {
        seen[t] = true;
        order.push_back(t);
      }
    }
  }
  const int live = static_cast<int>(order.size());
  std::vector<std::uint32_t> local(m, 0);
  for (int i = 0; i < live; ++i) local[order[i]] = i;

  std::vector<std::vector<int>> adj(live);
  for (int i = 0; i < live; ++i) {
    for (int a = 1; a <= dfa.alphabet(); ++a) {
      const std::uint32_t t = dfa.next(order[i], a);
      if (dfa.alive(t)) adj[i].push_back(static_cast<int>(local[t]));
    }
  }
  int comp_count = 0;
  const std::vector<int> comp = detail::scc_ids(adj, &comp_count);

  std::vector<int> size(comp_count, 0), edges(comp_count, 0);
  std::vector<bool> self_loop(comp_count, false);
  for (int v = 0; v < live; ++v) {
    ++size[comp[v]];
    for (int w : adj[v]) {
      if (comp[w] == comp[v]) {
        ++edges[comp[v]];
        if (w == v) self_loop[comp[v]] = true;
      }
    }
  }
  std::vector<bool> cyclic(comp_count, false);
  for (int c = 0; c < comp_count; ++c) {
    cyclic[c] = size[c] >= 2 || self_loop[c];
    if (cyclic[c] && edges[c] > size[c]) {
      return {Classification::Kind::Exponential, 0};
    }
  }

  // component ids are reverse topological: successors come first
  std::vector<std::vector<int>> succs(comp_count);
  for (int v = 0; v < live; ++v) {
    for (int w : adj[v]) {
      if (comp[w] != comp[v]) succs[comp[v]].push_back(comp[w]);
    }
  }
  std::vector<int> best(comp_count, 0);
  for (int c = 0; c < comp_count; ++c) {
    int succ_best = 0;
    for (int d : succs[c]) succ_best = std::max(succ_best, best[d]);
    best[c] = succ_best + (cyclic[c] ? 1 : 0);
  }
  const int degree = live == 0 ? 0 : best[comp[local[dfa.start()]]];
  if (degree == 0) return {Classification::Kind::Finite, 0};
  return {Classification::Kind::Polynomial, degree};
}

std::vector<Word> enumerate_normal_words(const NormalWordDfa& dfa,
                                         int max_len, std::uint64_t cap) {
  std::vector<Word> out;
  Word current;
  std::uint64_t emitted = 0;
  auto dfs = [&](auto&& self, std::uint32_t s) -> void {
    if (++emitted > cap) {
      throw BudgetError("normal-word listing exceeds the budget of " +
                        std::to_string(cap));
    }
    out.push_back(current);
    if (current.size() == static_cast<std::size_t>(max_len)) return;
    for (Letter a = 1; a <= dfa.alphabet(); ++a) {
      const std::uint32_t t = dfa.next(s, a);
      if (!dfa.alive(t)) continue;
      current.push_back(a);
      self(self, t);
      current.pop_back();
    }
  };
  if (max_len >= 0) dfs(dfs, dfa.start());
  std::stable_sort(out.begin(), out.end(), [](const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    return u < v;
  });
  return out;
}

std::vector<Word> minimal_forbidden_words(const Digraph& g,
                                          const GenOrder& ord, int max_len,
                                          std::uint64_t cap) {
  const NormalWordDfa dfa = build_normal_dfa(leading_term_language(g, ord));
  std::vector<Word> out;
  Word current;
  std::uint64_t visited = 0;

  auto tail_is_normal = [&](const Word& w) {
    std::uint32_t s = dfa.start();
    for (std::size_t k = 1; k < w.size(); ++k) {
      s = dfa.next(s, w[k]);
      if (!dfa.alive(s)) return false;
    }
    return true;
  };

  // walk the normal words; a forbidden extension whose tail is normal has
  // no forbidden proper factor at all
  auto dfs = [&](auto&& self, std::uint32_t s) -> void {
    if (++visited > cap) {
      throw BudgetError("obstruction search exceeds the budget of " +
                        std::to_string(cap));
    }
    if (current.size() == static_cast<std::size_t>(max_len)) return;
    for (Letter a = 1; a <= dfa.alphabet(); ++a) {
      const std::uint32_t t = dfa.next(s, a);
      current.push_back(a);
      if (dfa.alive(t)) {
        self(self, t);
      } else if (tail_is_normal(current)) {
        out.push_back(current);
      }
      current.pop_back();
    }
  };
  if (max_len >= 1) dfs(dfs, dfa.start());
  std::sort(out.begin(), out.end(), [&](const Word& u, const Word& v) {
    return deglex_less(u, v, ord);
  });
  return out;
}

GrowthReport growth_report(const Digraph& g, const GenOrder& ord,
                           int max_len) {
  const NormalWordDfa dfa = build_normal_dfa(leading_term_language(g, ord));
  GrowthReport report;
  report.counts = count_normal_words(dfa, max_len);
  report.classification = classify_growth(dfa);
  return report;
}

}  // namespace hk
