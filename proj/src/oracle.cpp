#include "hk/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "hk/automaton.hpp"
#include "hk/errors.hpp"
#include "hk/rewrite.hpp"

namespace hk {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::uint64_t size) : parent_(size) {
    for (std::uint64_t i = 0; i < size; ++i) {
      parent_[i] = static_cast<std::uint32_t>(i);
    }
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // keeps the smaller id as the root
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) {
      parent_[b] = a;
    } else {
      parent_[a] = b;
    }
  }

  std::vector<std::uint32_t> take() && { return std::move(parent_); }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

CongruenceTable::CongruenceTable(const Digraph& g, int max_len, int slack,
                                 std::uint64_t budget)
    : space_(g.vertex_count(), max_len + slack, budget),
      max_len_(max_len),
      slack_(slack) {
  if (max_len < 0 || slack < 0) {
    throw std::invalid_argument("max_len and slack must be nonnegative");
  }
  if (space_.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw BudgetError("congruence table would exceed 32-bit word ids");
  }
  const int ceiling = max_len + slack;
  UnionFind uf(space_.size());

  // Every relation either preserves or shrinks the length when read in the
  // contracting direction, so generating contractions, braid moves and
  // swaps from each word covers each congruence edge from its longer side.
  Word w, other;
  for (std::uint64_t id = 0; id < space_.size(); ++id) {
    space_.decode_into(id, w);
    const std::size_t len = w.size();
    for (std::size_t p = 0; p + 1 < len; ++p) {
      const Letter a = w[p], b = w[p + 1];
      if (a == b) {
        other.assign(w.begin(), w.end());
        other.erase(other.begin() + p);
        uf.unite(static_cast<std::uint32_t>(id),
                 static_cast<std::uint32_t>(space_.encode(other)));
      } else if (g.connected(a, b)) {
        if (p + 2 < len && w[p + 2] == a) {
          // a b a  <->  b a b  <->  (source target)
          other.assign(w.begin(), w.end());
          other[p] = b;
          other[p + 1] = a;
          other[p + 2] = b;
          uf.unite(static_cast<std::uint32_t>(id),
                   static_cast<std::uint32_t>(space_.encode(other)));
          other.assign(w.begin(), w.end());
          other.erase(other.begin() + p + 2);
          if (!g.has_arrow(a, b)) std::swap(other[p], other[p + 1]);
          uf.unite(static_cast<std::uint32_t>(id),
                   static_cast<std::uint32_t>(space_.encode(other)));
        }
      } else {
        other.assign(w.begin(), w.end());
        std::swap(other[p], other[p + 1]);
        uf.unite(static_cast<std::uint32_t>(id),
                 static_cast<std::uint32_t>(space_.encode(other)));
      }
    }
  }

  parent_ = std::move(uf).take();
  // full compression: with union-by-min every parent link points down, so
  // one ascending sweep suffices
  for (std::uint64_t id = 0; id < parent_.size(); ++id) {
    parent_[id] = parent_[parent_[id]];
  }

  flagged_.assign(parent_.size(), false);
  for (std::uint64_t id = space_.offset(ceiling); id < space_.size(); ++id) {
    flagged_[parent_[id]] = true;
  }
  for (std::uint64_t id = 0; id < parent_.size(); ++id) {
    if (parent_[id] == id) ++class_count_;
  }
}

std::vector<std::uint64_t> CongruenceTable::cumulative_class_counts(
    int up_to) const {
  std::vector<std::uint64_t> cum(up_to + 1, 0);
  for (std::uint64_t id = 0; id < parent_.size(); ++id) {
    if (parent_[id] != id) continue;
    const int len = space_.length_of(id);
    if (len <= up_to) ++cum[len];
  }
  for (int l = 1; l <= up_to; ++l) cum[l] += cum[l - 1];
  return cum;
}

CongruenceTable congruence_closure(const Digraph& g, int max_len, int slack,
                                   std::uint64_t budget) {
  return CongruenceTable(g, max_len, slack, budget);
}

CrosscheckReport crosscheck(const Digraph& g, int max_len, int slack,
                            std::uint64_t budget) {
  constexpr std::size_t kMaxViolations = 20;
  const CongruenceTable table(g, max_len, slack, budget);
  const WordSpace& space = table.words();
  const RuleSystem sys = build_T(g);
  const GenOrder ord = GenOrder::identity(g.vertex_count());

  CrosscheckReport report;
  report.classes = table.class_count();
  auto violation = [&](std::string msg) {
    report.ok = false;
    if (report.violations.size() < kMaxViolations) {
      report.violations.push_back(std::move(msg));
    }
  };
  auto show = [&](std::uint64_t id) {
    return to_string(space.decode(id), g.vertex_count());
  };

  // normal forms of every word in the table; reducts are deg-lex smaller,
  // so their ids are smaller and already filled in
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};
  std::vector<std::uint64_t> nf(space.size(), kUnset);
  Word w;
  for (std::uint64_t id = 0; id < space.size(); ++id) {
    space.decode_into(id, w);
    auto m = first_match(sys, w);
    if (!m) {
      nf[id] = id;
    } else {
      const std::uint64_t reduct = space.encode(apply_match(w, *m));
      nf[id] = nf[reduct];
    }
  }

  // (a) one normal form per class, distinct across unflagged classes
  std::vector<std::uint64_t> class_nf(space.size(), kUnset);
  for (std::uint64_t id = 0; id < space.size(); ++id) {
    const std::uint32_t root = table.class_of_id(id);
    if (class_nf[root] == kUnset) {
      class_nf[root] = nf[id];
    } else if (class_nf[root] != nf[id]) {
      violation("class of " + show(root) + " mixes normal forms " +
                show(class_nf[root]) + " and " + show(nf[id]));
    }
  }
  {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> by_nf;
    for (std::uint64_t id = 0; id < space.size(); ++id) {
      if (table.class_of_id(id) == id && !table.flagged(id)) {
        by_nf.emplace_back(class_nf[id], static_cast<std::uint32_t>(id));
      }
    }
    std::sort(by_nf.begin(), by_nf.end());
    for (std::size_t k = 1; k < by_nf.size(); ++k) {
      if (by_nf[k].first == by_nf[k - 1].first) {
        violation("distinct classes of " + show(by_nf[k - 1].second) +
                  " and " + show(by_nf[k].second) +
                  " share the normal form " + show(by_nf[k].first));
      }
    }
  }

  // (b) unflagged classes contain exactly one reduced word: the least one
  {
    std::vector<std::uint32_t> reduced_in_class(space.size(), 0);
    for (std::uint64_t id = 0; id < space.size(); ++id) {
      space.decode_into(id, w);
      if (is_reduced(sys, w)) ++reduced_in_class[table.class_of_id(id)];
    }
    for (std::uint64_t root = 0; root < space.size(); ++root) {
      if (table.class_of_id(root) != root || table.flagged(root)) continue;
      if (reduced_in_class[root] != 1) {
        violation("class of " + show(root) + " has " +
                  std::to_string(reduced_in_class[root]) +
                  " reduced members");
      }
      space.decode_into(root, w);
      if (!is_reduced(sys, w)) {
        violation("least member " + show(root) + " of its class is not "
                  "reduced");
      }
    }
  }

  // (c) class counts against the automaton
  {
    const NormalWordDfa dfa = build_normal_dfa(leading_term_language(g, ord));
    const std::vector<BigUint> counts = count_normal_words(dfa, max_len);
    const std::vector<std::uint64_t> cum =
        table.cumulative_class_counts(max_len);
    BigUint dfa_cum;
    for (int l = 0; l <= max_len; ++l) {
      dfa_cum += counts[l];
      if (dfa_cum != BigUint(cum[l])) {
        violation("at length " + std::to_string(l) + ": " +
                  std::to_string(cum[l]) + " classes vs " +
                  dfa_cum.to_string() + " normal words");
      }
    }
  }

  return report;
}

}  // namespace hk
