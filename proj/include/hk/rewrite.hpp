#ifndef HK_REWRITE_HPP
#define HK_REWRITE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "hk/digraph.hpp"
#include "hk/word.hpp"

namespace hk {

// Reduction rule families.  Ti/Tii/Tiii make up the general system T bound
// to an arbitrary oriented digraph:
//
//   Ti:   t w t -> t w    when w has no t and no letter of w points to t
//   Tii:  t w t -> w t    when w has no t and t points to no letter of w
//   Tiii: t1 w t2 -> t2 t1 w   when t1 > t2 and t2 is disconnected from
//                              every letter of t1 w
//
// The S and Sp families specialize T to the oriented cycle 1 -> 2 -> ...
// -> n -> 1 under the natural generator order; Sp (with Sp4/Sp5/Sp5Block
// replacing S4/S5) is the finite subsystem.
enum class RuleFamily {
  Ti,
  Tii,
  Tiii,
  S1,       // x_i x_i -> x_i
  S2,       // x_j x_i -> x_i x_j              for 1 < j-i < n-1
  S3,       // x_n x_1..x_i x_j -> x_j x_n x_1..x_i   for i+1 < j < n-1
  S4,       // x_i u x_i -> x_i u    u nonempty, avoiding x_i and x_{i-1}
  S5,       // x_i v x_i -> v x_i    v nonempty, avoiding x_i and x_{i+1}
  S4Once,   // S4 with every letter of u occurring once
  S5Once,   // S5 with every letter of v occurring once
  S5Block,  // S5 with v = (block staircase) x_n x_1..x_{i-1}, i < n
};

const char* family_name(RuleFamily f);

// One applicable reduction: replace w[begin..end) by replacement.  The
// replacement is strictly deg-lex smaller than the factor it replaces.
struct Match {
  RuleFamily family;
  std::size_t begin;
  std::size_t end;
  Word replacement;

  friend bool operator==(const Match&, const Match&) = default;
};

// A reduction system: a set of rule families bound to a digraph and a
// generator order.  Immutable after construction; all operations are pure.
struct RuleSystem {
  Digraph graph;
  GenOrder order;
  std::vector<RuleFamily> families;

  int alphabet() const { return graph.vertex_count(); }
  bool has(RuleFamily f) const;
};

// The system T = {Ti, Tii, Tiii} for an arbitrary oriented digraph.
RuleSystem build_T(const Digraph& g, const GenOrder& ord);
RuleSystem build_T(const Digraph& g);

// All matches in w, sorted by (start, length, family) and deduplicated when
// two families yield the identical span and replacement (the degenerate
// square x_i x_i is reported once).
std::vector<Match> find_matches(const RuleSystem& sys, const Word& w);

// Matches of a single family, in scan order.
std::vector<Match> find_family_matches(const RuleSystem& sys, const Word& w,
                                       RuleFamily f);

// The first match under the deterministic strategy, if any.
std::optional<Match> first_match(const RuleSystem& sys, const Word& w);

// Throws std::invalid_argument when the span does not fit w.
Word apply_match(const Word& w, const Match& m);

// Applies first_match until none remains.  Terminates because every step
// strictly decreases the deg-lex rank.
Word normal_form(const RuleSystem& sys, Word w);

bool is_reduced(const RuleSystem& sys, const Word& w);

// Word problem: u and v represent the same monoid element iff their
// T-normal forms coincide.
bool equal_in_monoid(const Digraph& g, const Word& u, const Word& v);

// Every word reachable from w by a single reduction.
std::set<Word> one_step_reducts(const RuleSystem& sys, const Word& w);

struct ConfluenceCounterexample {
  Word word;
  std::vector<Word> normal_forms;  // the distinct forms its reducts reach
};

struct ConfluenceReport {
  bool ok = true;
  std::uint64_t words_checked = 0;
  std::vector<ConfluenceCounterexample> counterexamples;  // capped
};

// Checks, for every word of length <= max_len, that all one-step reducts
// share one normal form.  An exhaustive joinability check of the system's
// overlap and inclusion ambiguities up to the given length.
ConfluenceReport check_local_confluence(const RuleSystem& sys, int max_len,
                                        std::uint64_t budget = 80000000);

}  // namespace hk

#endif  // HK_REWRITE_HPP
