#include "hk/cycle_basis.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "hk/errors.hpp"

namespace hk {

BlockDecomposition block_decompose(const Word& w) {
  BlockDecomposition blocks;
  if (w.empty()) return blocks;
  Letter first = w[0];
  Letter prev = w[0];
  int dir = 0;
  for (std::size_t k = 1; k < w.size(); ++k) {
    const int step = w[k] - prev;
    if (dir == 0 && (step == 1 || step == -1)) {
      dir = step;
      prev = w[k];
    } else if (step == dir && dir != 0) {
      prev = w[k];
    } else {
      blocks.push_back({first, prev});
      first = prev = w[k];
      dir = 0;
    }
  }
  blocks.push_back({first, prev});
  return blocks;
}

bool is_block_staircase(const Word& w, int n) {
  for (Letter x : w) {
    if (x == n) {
      throw std::invalid_argument(
          "is_block_staircase requires a word avoiding the top generator");
    }
  }
  const BlockDecomposition blocks = block_decompose(w);
  for (std::size_t k = 1; k < blocks.size(); ++k) {
    if (blocks[k - 1].first >= blocks[k].first) return false;
    if (blocks[k - 1].last >= blocks[k].last) return false;
  }
  return true;
}

namespace {

RuleSystem cycle_system(int n, std::vector<RuleFamily> families) {
  if (n < 3) throw std::invalid_argument("cycle systems require n >= 3");
  return RuleSystem{cycle_graph(n), GenOrder::identity(n),
                    std::move(families)};
}

}  // namespace

RuleSystem build_S(int n) {
  return cycle_system(n, {RuleFamily::S1, RuleFamily::S2, RuleFamily::S3,
                          RuleFamily::S4, RuleFamily::S5});
}

RuleSystem build_Sprime(int n) {
  return cycle_system(n, {RuleFamily::S1, RuleFamily::S2, RuleFamily::S3,
                          RuleFamily::S4Once, RuleFamily::S5Once,
                          RuleFamily::S5Block});
}

namespace {

void emit_distinct_letter_words(const std::vector<Letter>& alphabet,
                                Word& current, std::uint32_t used,
                                const std::function<void(const Word&)>& fn) {
  for (Letter x : alphabet) {
    const std::uint32_t bit = 1u << (x - 1);
    if (used & bit) continue;
    current.push_back(x);
    fn(current);
    emit_distinct_letter_words(alphabet, current, used | bit, fn);
    current.pop_back();
  }
}

void append_run(Word& w, Letter from, Letter to) {
  if (from <= to) {
    for (Letter x = from; x <= to; ++x) w.push_back(x);
  } else {
    for (Letter x = from; x >= to; --x) w.push_back(x);
  }
}

// Block staircases over the letters admitted by `allowed`, all bounds below
// n: block starts and ends both strictly increasing.
void emit_staircases(int n, std::uint32_t allowed, Letter min_first,
                     Letter min_last, Word& current,
                     const std::function<void(const Word&)>& fn) {
  for (Letter first = min_first; first < n; ++first) {
    for (Letter last = 1; last < n; ++last) {
      if (last < min_last) continue;
      const Letter lo = std::min(first, last), hi = std::max(first, last);
      bool ok = true;
      for (Letter x = lo; x <= hi && ok; ++x) {
        ok = (allowed >> (x - 1)) & 1u;
      }
      if (!ok) continue;
      const std::size_t mark = current.size();
      append_run(current, first, last);
      fn(current);
      emit_staircases(n, allowed, first + 1, last + 1, current, fn);
      current.resize(mark);
    }
  }
}

}  // namespace

std::vector<Rule> enumerate_sprime_rules(int n, int cap) {
  if (n < 3) throw std::invalid_argument("cycle systems require n >= 3");
  if (n > cap) {
    throw BudgetError("explicit rule list for n = " + std::to_string(n) +
                      " exceeds the cap of " + std::to_string(cap));
  }
  std::vector<Rule> rules;

  for (Letter i = 1; i <= n; ++i) {
    rules.push_back({{i, i}, {i}});
  }
  for (Letter j = 1; j <= n; ++j) {
    for (Letter i = 1; i < j; ++i) {
      if (j - i > 1 && j - i < n - 1) {
        rules.push_back({{j, i}, {i, j}});
      }
    }
  }
  for (Letter i = 1; i <= n; ++i) {
    for (Letter j = i + 2; j < n - 1; ++j) {
      Word lhs{n};
      append_run(lhs, 1, i);
      lhs.push_back(j);
      Word rhs{j, n};
      append_run(rhs, 1, i);
      rules.push_back({std::move(lhs), std::move(rhs)});
    }
  }

  for (Letter i = 1; i <= n; ++i) {
    const Letter before = i == 1 ? n : i - 1;
    const Letter after = i == n ? 1 : i + 1;
    std::vector<Letter> four, five;
    for (Letter x = 1; x <= n; ++x) {
      if (x != i && x != before) four.push_back(x);
      if (x != i && x != after) five.push_back(x);
    }
    Word u;
    emit_distinct_letter_words(four, u, 0, [&](const Word& body) {
      Word lhs{i};
      lhs.insert(lhs.end(), body.begin(), body.end());
      Word rhs = lhs;
      lhs.push_back(i);
      rules.push_back({std::move(lhs), std::move(rhs)});
    });
    Word v;
    emit_distinct_letter_words(five, v, 0, [&](const Word& body) {
      Word rhs = body;
      rhs.push_back(i);
      Word lhs{i};
      lhs.insert(lhs.end(), rhs.begin(), rhs.end());
      rules.push_back({std::move(lhs), std::move(rhs)});
    });
  }

  // S-5'' shapes: x_i (staircase) x_n x_1 .. x_{i-1} x_i with the staircase
  // avoiding x_i and x_{i+1}; i = n-1 is impossible since the segment would
  // contain x_{i+1} = x_n.
  for (Letter i = 1; i + 1 < n; ++i) {
    std::uint32_t allowed = 0;
    for (Letter x = 1; x < n; ++x) {
      if (x != i && x != i + 1) allowed |= 1u << (x - 1);
    }
    auto push_rule = [&](const Word& staircase) {
      Word rhs = staircase;
      rhs.push_back(n);
      append_run(rhs, 1, i);  // x_1 .. x_{i-1} then the final x_i
      Word lhs{i};
      lhs.insert(lhs.end(), rhs.begin(), rhs.end());
      rules.push_back({std::move(lhs), std::move(rhs)});
    };
    Word empty_staircase;
    push_rule(empty_staircase);
    Word current;
    emit_staircases(n, allowed, 1, 1, current, push_rule);
  }

  const GenOrder ord = GenOrder::identity(n);
  std::sort(rules.begin(), rules.end(), [&](const Rule& a, const Rule& b) {
    Cmp c = deglex_compare(a.lhs, b.lhs, ord);
    if (c != Cmp::Equal) return c == Cmp::Less;
    return deglex_less(a.rhs, b.rhs, ord);
  });
  rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
  return rules;
}

}  // namespace hk
