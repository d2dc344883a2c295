#ifndef HK_ORACLE_HPP
#define HK_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hk/digraph.hpp"
#include "hk/word.hpp"
#include "hk/word_space.hpp"

namespace hk {

// Ground truth for the word problem on bounded lengths, computed from the
// defining relations alone (idempotent squares, commutation across
// non-edges, and the two-sided braid moves along arrows) with union-find
// over every word of length <= max_len + slack.  None of the reduction
// machinery is involved, so agreement with it is genuine cross-validation.
class CongruenceTable {
 public:
  CongruenceTable(const Digraph& g, int max_len, int slack,
                  std::uint64_t budget);

  const WordSpace& words() const { return space_; }
  int max_len() const { return max_len_; }
  int slack() const { return slack_; }

  // Class id = the id of the deg-lex least member reachable inside the
  // table (ids are deg-lex ordered, and unions keep the smaller root).
  std::uint32_t class_of_id(std::uint64_t id) const { return parent_[id]; }
  std::uint32_t class_of(const Word& w) const {
    return parent_[space_.encode(w)];
  }

  // A class is boundary-touched when some member sits at the length
  // ceiling, where rewrites leading out of the table were skipped; such
  // classes may be incomplete and are excluded from hard assertions.
  bool flagged(std::uint32_t class_id) const { return flagged_[class_id]; }

  std::uint64_t class_count() const { return class_count_; }

  // Number of classes whose least member has length <= l, for l = 0..up_to.
  std::vector<std::uint64_t> cumulative_class_counts(int up_to) const;

 private:
  WordSpace space_;
  int max_len_;
  int slack_;
  std::vector<std::uint32_t> parent_;
  std::vector<bool> flagged_;
  std::uint64_t class_count_ = 0;
};

CongruenceTable congruence_closure(const Digraph& g, int max_len,
                                   int slack = 2,
                                   std::uint64_t budget = 2000000);

struct CrosscheckReport {
  bool ok = true;
  std::uint64_t classes = 0;
  std::vector<std::string> violations;  // capped
};

// Validates the rewriting machinery against the congruence table:
//  - members of one class share one T-normal form, and distinct unflagged
//    classes have distinct normal forms;
//  - every unflagged class contains exactly one T-reduced word, namely its
//    deg-lex least member;
//  - the number of classes with a representative of length <= l equals the
//    automaton's cumulative normal-word count at l, for every l <= max_len.
CrosscheckReport crosscheck(const Digraph& g, int max_len, int slack = 2,
                            std::uint64_t budget = 2000000);

}  // namespace hk

#endif  // HK_ORACLE_HPP
