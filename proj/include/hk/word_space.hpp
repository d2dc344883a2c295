#ifndef HK_WORD_SPACE_HPP
#define HK_WORD_SPACE_HPP

#include <cstdint>
#include <vector>

#include "hk/word.hpp"

namespace hk {

// Dense bijection between all words of length <= max_len over 1..alphabet
// and the range [0, size()).  Ids are in deg-lex order with the natural
// generator order: shorter words first, ties lexicographic.
class WordSpace {
 public:
  // Throws BudgetError when the total number of words would exceed budget.
  WordSpace(int alphabet, int max_len, std::uint64_t budget);

  int alphabet() const { return n_; }
  int max_len() const { return max_len_; }
  std::uint64_t size() const { return offsets_.back(); }
  // First id of a word of the given length.
  std::uint64_t offset(int len) const { return offsets_[len]; }
  int length_of(std::uint64_t id) const;

  std::uint64_t encode(const Word& w) const;
  Word decode(std::uint64_t id) const;
  void decode_into(std::uint64_t id, Word& out) const;

 private:
  int n_;
  int max_len_;
  std::vector<std::uint64_t> offsets_;  // offsets_[l] = # words shorter than l
};

}  // namespace hk

#endif  // HK_WORD_SPACE_HPP
