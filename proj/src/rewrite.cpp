#include "hk/rewrite.hpp"

#include <algorithm>
#include <stdexcept>

#include "hk/cycle_basis.hpp"
#include "hk/word_space.hpp"

namespace hk {

const char* family_name(RuleFamily f) {
  switch (f) {
    case RuleFamily::Ti: return "T-i";
    case RuleFamily::Tii: return "T-ii";
    case RuleFamily::Tiii: return "T-iii";
    case RuleFamily::S1: return "S-1";
    case RuleFamily::S2: return "S-2";
    case RuleFamily::S3: return "S-3";
    case RuleFamily::S4: return "S-4";
    case RuleFamily::S5: return "S-5";
    case RuleFamily::S4Once: return "S-4'";
    case RuleFamily::S5Once: return "S-5'";
    case RuleFamily::S5Block: return "S-5''";
  }
  return "?";
}

bool RuleSystem::has(RuleFamily f) const {
  return std::find(families.begin(), families.end(), f) != families.end();
}

RuleSystem build_T(const Digraph& g, const GenOrder& ord) {
  return RuleSystem{g, ord,
                    {RuleFamily::Ti, RuleFamily::Tii, RuleFamily::Tiii}};
}

RuleSystem build_T(const Digraph& g) {
  return build_T(g, GenOrder::identity(g.vertex_count()));
}

namespace {

// Emitting raw spans keeps the scan allocation-free; replacements are built
// afterwards only for the spans that survive.
struct Span {
  RuleFamily family;
  std::size_t begin;
  std::size_t end;
};

// wraps to n for i = 1
inline Letter pred_letter(Letter i, int n) { return i == 1 ? n : i - 1; }
// wraps to 1 for i = n
inline Letter succ_letter(Letter i, int n) { return i == n ? 1 : i + 1; }

// Spans between consecutive occurrences of the same letter carry every
// family of shape t..t.  A farther-apart pair of t's always contains t in
// between, so consecutive pairs are the only candidates.
template <typename Emit>
bool scan_equal_ends(const RuleSystem& sys, const Word& w, Emit&& emit) {
  const int n = sys.alphabet();
  const Digraph& g = sys.graph;
  const bool ti = sys.has(RuleFamily::Ti), tii = sys.has(RuleFamily::Tii);
  const bool s4 = sys.has(RuleFamily::S4), s5 = sys.has(RuleFamily::S5);
  const bool s4o = sys.has(RuleFamily::S4Once);
  const bool s5o = sys.has(RuleFamily::S5Once);
  const bool s5b = sys.has(RuleFamily::S5Block);
  if (!(ti || tii || s4 || s5 || s4o || s5o || s5b)) return true;

  std::vector<int> last(n, -1);
  for (std::size_t q = 0; q < w.size(); ++q) {
    const Letter t = w[q];
    const int p = last[t - 1];
    last[t - 1] = static_cast<int>(q);
    if (p < 0) continue;
    const std::size_t begin = static_cast<std::size_t>(p);

    std::uint32_t inner = 0;
    bool once = true;  // every inner letter occurs at most once
    for (std::size_t k = begin + 1; k < q; ++k) {
      const std::uint32_t bit = 1u << (w[k] - 1);
      if (inner & bit) once = false;
      inner |= bit;
    }
    const bool inner_empty = q == begin + 1;

    if (ti && (inner & g.in_mask(t)) == 0) {
      if (!emit(Span{RuleFamily::Ti, begin, q + 1})) return false;
    }
    if (tii && (inner & g.out_mask(t)) == 0) {
      if (!emit(Span{RuleFamily::Tii, begin, q + 1})) return false;
    }
    if (!inner_empty) {
      const std::uint32_t prev_bit = 1u << (pred_letter(t, n) - 1);
      const std::uint32_t next_bit = 1u << (succ_letter(t, n) - 1);
      if ((s4 || s4o) && (inner & prev_bit) == 0) {
        if (s4 && !emit(Span{RuleFamily::S4, begin, q + 1})) return false;
        if (s4o && once &&
            !emit(Span{RuleFamily::S4Once, begin, q + 1}))
          return false;
      }
      if ((s5 || s5o) && (inner & next_bit) == 0) {
        if (s5 && !emit(Span{RuleFamily::S5, begin, q + 1})) return false;
        if (s5o && once &&
            !emit(Span{RuleFamily::S5Once, begin, q + 1}))
          return false;
      }
      if (s5b && t < n && (inner & (1u << t)) == 0) {
        // shape: x_t (block staircase) x_n x_1 .. x_{t-1} x_t
        const std::size_t len = q - begin - 1;
        if (len >= static_cast<std::size_t>(t)) {
          const std::size_t tail = begin + 1 + len - t;  // position of x_n
          bool shape = w[tail] == n;
          for (Letter x = 1; shape && x < t; ++x) {
            shape = w[tail + x] == x;
          }
          if (shape) {
            Word prefix(w.begin() + begin + 1, w.begin() + tail);
            bool staircase = true;
            for (Letter x : prefix) {
              if (x >= n) {
                staircase = false;
                break;
              }
            }
            staircase = staircase && is_block_staircase(prefix, n);
            if (staircase &&
                !emit(Span{RuleFamily::S5Block, begin, q + 1}))
              return false;
          }
        }
      }
    }
  }
  return true;
}

template <typename Emit>
bool scan_commute(const RuleSystem& sys, const Word& w, Emit&& emit) {
  if (!sys.has(RuleFamily::Tiii)) return true;
  const Digraph& g = sys.graph;
  const GenOrder& ord = sys.order;
  if (w.size() < 2) return true;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    const Letter t1 = w[p];
    std::uint32_t seen = 1u << (t1 - 1);  // support of w[p..q)
    for (std::size_t q = p + 1; q < w.size(); ++q) {
      const Letter t2 = w[q];
      const std::uint32_t t2_bit = 1u << (t2 - 1);
      if (ord.less(t2, t1) && (seen & t2_bit) == 0 &&
          (seen & (g.in_mask(t2) | g.out_mask(t2))) == 0) {
        if (!emit(Span{RuleFamily::Tiii, p, q + 1})) return false;
      }
      seen |= t2_bit;
    }
  }
  return true;
}

template <typename Emit>
bool scan_cycle_short(const RuleSystem& sys, const Word& w, Emit&& emit) {
  const int n = sys.alphabet();
  const bool s1 = sys.has(RuleFamily::S1), s2 = sys.has(RuleFamily::S2);
  const bool s3 = sys.has(RuleFamily::S3);
  if (!(s1 || s2 || s3)) return true;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (p + 1 < w.size()) {
      if (s1 && w[p] == w[p + 1]) {
        if (!emit(Span{RuleFamily::S1, p, p + 2})) return false;
      }
      if (s2 && w[p] - w[p + 1] > 1 && w[p] - w[p + 1] < n - 1) {
        if (!emit(Span{RuleFamily::S2, p, p + 2})) return false;
      }
    }
    if (s3 && w[p] == n) {
      // x_n 1 2 .. i j with i+1 < j < n-1
      std::size_t k = p + 1;
      while (k < w.size() && w[k] == static_cast<Letter>(k - p)) ++k;
      const int run = static_cast<int>(k - p - 1);
      for (int i = 1; i <= run; ++i) {
        const std::size_t jq = p + static_cast<std::size_t>(i) + 1;
        if (jq >= w.size()) break;
        const Letter j = w[jq];
        if (j > i + 1 && j < n - 1) {
          if (!emit(Span{RuleFamily::S3, p, jq + 1})) return false;
        }
      }
    }
  }
  return true;
}

template <typename Emit>
bool scan_all(const RuleSystem& sys, const Word& w, Emit&& emit) {
  if (!scan_equal_ends(sys, w, emit)) return false;
  if (!scan_commute(sys, w, emit)) return false;
  return scan_cycle_short(sys, w, emit);
}

Word make_replacement(const Word& w, const Span& s, int n) {
  switch (s.family) {
    case RuleFamily::Ti:
    case RuleFamily::S1:
    case RuleFamily::S4:
    case RuleFamily::S4Once:
      // drop the trailing anchor letter
      return Word(w.begin() + s.begin, w.begin() + s.end - 1);
    case RuleFamily::Tii:
    case RuleFamily::S5:
    case RuleFamily::S5Once:
    case RuleFamily::S5Block:
      // drop the leading anchor letter
      return Word(w.begin() + s.begin + 1, w.begin() + s.end);
    case RuleFamily::Tiii: {
      Word repl;
      repl.reserve(s.end - s.begin);
      repl.push_back(w[s.end - 1]);
      repl.insert(repl.end(), w.begin() + s.begin, w.begin() + s.end - 1);
      return repl;
    }
    case RuleFamily::S2:
      return Word{w[s.begin + 1], w[s.begin]};
    case RuleFamily::S3: {
      Word repl;
      repl.reserve(s.end - s.begin);
      repl.push_back(w[s.end - 1]);
      repl.push_back(n);
      for (Letter x = 1; x <= static_cast<Letter>(s.end - s.begin) - 2; ++x) {
        repl.push_back(x);
      }
      return repl;
    }
  }
  return {};
}

bool span_order(const Span& a, const Span& b) {
  if (a.begin != b.begin) return a.begin < b.begin;
  if (a.end != b.end) return a.end < b.end;
  return static_cast<int>(a.family) < static_cast<int>(b.family);
}

std::vector<Match> collect_matches(const RuleSystem& sys, const Word& w,
                                   std::vector<Span> spans) {
  std::sort(spans.begin(), spans.end(), span_order);
  std::vector<Match> out;
  out.reserve(spans.size());
  for (const Span& s : spans) {
    Word repl = make_replacement(w, s, sys.alphabet());
    if (!out.empty() && out.back().begin == s.begin &&
        out.back().end == s.end && out.back().replacement == repl) {
      continue;  // same span, same effect: report once
    }
    out.push_back(Match{s.family, s.begin, s.end, std::move(repl)});
  }
  return out;
}

}  // namespace

std::vector<Match> find_matches(const RuleSystem& sys, const Word& w) {
  std::vector<Span> spans;
  scan_all(sys, w, [&](const Span& s) {
    spans.push_back(s);
    return true;
  });
  return collect_matches(sys, w, std::move(spans));
}

std::vector<Match> find_family_matches(const RuleSystem& sys, const Word& w,
                                       RuleFamily f) {
  RuleSystem one{sys.graph, sys.order, {f}};
  std::vector<Span> spans;
  scan_all(one, w, [&](const Span& s) {
    spans.push_back(s);
    return true;
  });
  std::vector<Match> out;
  out.reserve(spans.size());
  for (const Span& s : spans) {
    out.push_back(Match{s.family, s.begin, s.end,
                        make_replacement(w, s, sys.alphabet())});
  }
  return out;
}

std::optional<Match> first_match(const RuleSystem& sys, const Word& w) {
  bool found = false;
  Span best{RuleFamily::Ti, 0, 0};
  scan_all(sys, w, [&](const Span& s) {
    if (!found || span_order(s, best)) {
      best = s;
      found = true;
    }
    return true;
  });
  if (!found) return std::nullopt;
  return Match{best.family, best.begin, best.end,
               make_replacement(w, best, sys.alphabet())};
}

Word apply_match(const Word& w, const Match& m) {
  if (m.begin > m.end || m.end > w.size()) {
    throw std::invalid_argument("match span does not fit the word");
  }
  Word out;
  out.reserve(w.size() - (m.end - m.begin) + m.replacement.size());
  out.insert(out.end(), w.begin(), w.begin() + m.begin);
  out.insert(out.end(), m.replacement.begin(), m.replacement.end());
  out.insert(out.end(), w.begin() + m.end, w.end());
  return out;
}

Word normal_form(const RuleSystem& sys, Word w) {
  while (auto m = first_match(sys, w)) {
    w = apply_match(w, *m);
  }
  return w;
}

bool is_reduced(const RuleSystem& sys, const Word& w) {
  bool any = false;
  scan_all(sys, w, [&](const Span&) {
    any = true;
    return false;
  });
  return !any;
}

bool equal_in_monoid(const Digraph& g, const Word& u, const Word& v) {
  RuleSystem sys = build_T(g);
  return normal_form(sys, u) == normal_form(sys, v);
}

std::set<Word> one_step_reducts(const RuleSystem& sys, const Word& w) {
  std::set<Word> out;
  for (const Match& m : find_matches(sys, w)) {
    out.insert(apply_match(w, m));
  }
  return out;
}

ConfluenceReport check_local_confluence(const RuleSystem& sys, int max_len,
                                        std::uint64_t budget) {
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  constexpr std::size_t kMaxCounterexamples = 20;
  const WordSpace space(sys.alphabet(), max_len, budget);
  constexpr std::uint32_t kUnknown = 0xffffffffu;
  std::vector<std::uint32_t> nf(space.size(), kUnknown);

  // normal form by the deterministic strategy, following the reduction
  // chain and then writing it back
  Word buf;
  std::vector<std::uint64_t> chain;
  auto nf_of = [&](std::uint64_t id) {
    chain.clear();
    std::uint64_t cur = id;
    while (nf[cur] == kUnknown) {
      space.decode_into(cur, buf);
      auto m = first_match(sys, buf);
      if (!m) {
        nf[cur] = static_cast<std::uint32_t>(cur);
        break;
      }
      chain.push_back(cur);
      cur = space.encode(apply_match(buf, *m));
    }
    const std::uint32_t result = nf[cur];
    for (std::uint64_t v : chain) nf[v] = result;
    return result;
  };

  ConfluenceReport report;
  report.words_checked = space.size();
  Word w;
  std::vector<Span> spans;
  for (std::uint64_t id = 0; id < space.size(); ++id) {
    space.decode_into(id, w);
    spans.clear();
    scan_all(sys, w, [&](const Span& s) {
      spans.push_back(s);
      return true;
    });
    if (spans.size() < 2) {
      if (spans.size() == 1) nf_of(id);
      continue;
    }
    std::vector<std::uint32_t> forms;
    for (const Span& s : spans) {
      Word reduct = apply_match(
          w, Match{s.family, s.begin, s.end,
                   make_replacement(w, s, sys.alphabet())});
      forms.push_back(nf_of(space.encode(reduct)));
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    if (forms.size() > 1) {
      report.ok = false;
      if (report.counterexamples.size() < kMaxCounterexamples) {
        ConfluenceCounterexample ce;
        ce.word = w;
        for (std::uint32_t f : forms) ce.normal_forms.push_back(space.decode(f));
        report.counterexamples.push_back(std::move(ce));
      }
    }
  }
  return report;
}

}  // namespace hk
