#ifndef HK_AUTOMATON_HPP
#define HK_AUTOMATON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hk/bigint.hpp"
#include "hk/digraph.hpp"
#include "hk/rewrite.hpp"
#include "hk/word.hpp"

namespace hk {

// One forbidden-factor shape a<B>c: the letter a, then any word over the
// set B, then the letter c.  The family records which reduction family the
// leading terms come from; neither a nor c ever lies in B.
struct ForbiddenPattern {
  RuleFamily family;
  Letter first;
  std::uint32_t middle;  // bit k-1 set iff generator k may appear inside
  Letter last;

  friend bool operator==(const ForbiddenPattern&,
                         const ForbiddenPattern&) = default;
};

struct ForbiddenPatternSet {
  int alphabet = 0;
  std::vector<ForbiddenPattern> patterns;
};

// The leading terms of the system T as a finite union of a<B>c shapes:
// family Ti contributes t<Y_t>t with Y_t the letters with no arrow into t,
// family Tii contributes t<Z_t>t with Z_t the letters t has no arrow into,
// and family Tiii contributes z<X_x>x for every disconnected pair x < z,
// with X_x the letters disconnected from x.
ForbiddenPatternSet leading_term_language(const Digraph& g,
                                          const GenOrder& ord);

// Human-readable pattern listing, one shape per line.
std::string schema_text(const ForbiddenPatternSet& p);

// Deterministic complete automaton accepting exactly the words with no
// factor matching any forbidden pattern.  Every non-dead state is
// accepting; the language is factor closed.  State ids are stable across
// runs (breadth-first discovery order; the dead state comes last).
class NormalWordDfa {
 public:
  int alphabet() const { return n_; }
  std::uint32_t state_count() const {
    return static_cast<std::uint32_t>(delta_.size() / n_);
  }
  std::uint32_t start() const { return 0; }
  std::uint32_t dead() const { return dead_; }
  bool alive(std::uint32_t s) const { return s != dead_; }
  std::uint32_t next(std::uint32_t s, Letter a) const {
    return delta_[static_cast<std::size_t>(s) * n_ + (a - 1)];
  }

  bool accepts(const Word& w) const;

  // Hopcroft-style partition refinement; the result accepts the same
  // language with the minimum number of states.
  NormalWordDfa minimized() const;

  std::string to_dot() const;

  friend NormalWordDfa build_normal_dfa(const ForbiddenPatternSet& p,
                                        std::size_t state_cap);

 private:
  int n_ = 1;
  std::uint32_t dead_ = 0;
  std::vector<std::uint32_t> delta_;  // state-major, letters 1..n
};

// Subset construction over per-pattern progress bits, trimmed to the
// reachable states.  Throws BudgetError when more than 64 patterns would be
// needed or the state cap is hit.
NormalWordDfa build_normal_dfa(const ForbiddenPatternSet& p,
                               std::size_t state_cap = 1u << 22);

// Exact number of accepted words of each length 0..max_len.
std::vector<BigUint> count_normal_words(const NormalWordDfa& dfa,
                                        int max_len);

struct Classification {
  enum class Kind { Finite, Polynomial, Exponential };
  Kind kind = Kind::Finite;
  int gk = 0;  // meaningful for Polynomial only

  friend bool operator==(const Classification&,
                         const Classification&) = default;
};

std::string to_string(const Classification& c);

// Growth of the accepted language, read off the cycle structure: finite
// when the live part is acyclic, exponential when some strongly connected
// component carries two distinct cycles, otherwise polynomial with degree
// equal to the largest number of cycle components met along one path.
Classification classify_growth(const NormalWordDfa& dfa);

// Accepted words of length <= max_len in deg-lex order; throws BudgetError
// when there are more than cap of them.
std::vector<Word> enumerate_normal_words(const NormalWordDfa& dfa,
                                         int max_len,
                                         std::uint64_t cap = 1000000);

// Forbidden words none of whose proper factors are forbidden, up to the
// given length: the leading terms of the reduced basis.  Sorted deg-lex.
std::vector<Word> minimal_forbidden_words(const Digraph& g,
                                          const GenOrder& ord, int max_len,
                                          std::uint64_t cap = 1000000);

struct GrowthReport {
  std::vector<BigUint> counts;
  Classification classification;
};

GrowthReport growth_report(const Digraph& g, const GenOrder& ord,
                           int max_len);

}  // namespace hk

#endif  // HK_AUTOMATON_HPP
