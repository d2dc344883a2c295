#ifndef HK_CYCLE_BASIS_HPP
#define HK_CYCLE_BASIS_HPP

#include <vector>

#include "hk/rewrite.hpp"
#include "hk/word.hpp"

namespace hk {

// A maximal run of consecutive generator indices stepping by +1 or -1,
// recorded by its first and last letter.  Singletons have first == last.
struct Block {
  Letter first;
  Letter last;

  int length() const { return (first <= last ? last - first : first - last) + 1; }
  bool increasing() const { return first < last; }
  bool decreasing() const { return first > last; }
  bool singleton() const { return first == last; }

  friend bool operator==(const Block&, const Block&) = default;
};

using BlockDecomposition = std::vector<Block>;

// Unique decomposition into leftmost-maximal runs.  Concatenating the
// blocks reproduces the word.
BlockDecomposition block_decompose(const Word& w);

// True iff the block decomposition of w has strictly increasing block
// starts and strictly increasing block ends (a single block qualifies).
// Requires that x_n does not occur in w; throws std::invalid_argument
// otherwise.
bool is_block_staircase(const Word& w, int n);

// The cycle systems on C_n under the natural order; n >= 3.
RuleSystem build_S(int n);
RuleSystem build_Sprime(int n);

struct Rule {
  Word lhs;
  Word rhs;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// The complete explicit rule list behind build_Sprime(n), sorted by
// deg-lex on (lhs, rhs) and deduplicated.  The list grows combinatorially,
// so n is capped; throws BudgetError above the cap.
std::vector<Rule> enumerate_sprime_rules(int n, int cap = 8);

}  // namespace hk

#endif  // HK_CYCLE_BASIS_HPP
