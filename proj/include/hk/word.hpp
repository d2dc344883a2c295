#ifndef HK_WORD_HPP
#define HK_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hk/digraph.hpp"

namespace hk {

// Generator index, 1-based.  A word is an element of the free monoid: the
// empty vector is the identity.  Alphabet bounds travel with the operations,
// not with the word.
using Letter = int;
using Word = std::vector<Letter>;

enum class Cmp { Less, Equal, Greater };

// Total order on the generators, given as a permutation.  The default
// identity order is x_1 < x_2 < ... < x_n.
class GenOrder {
 public:
  static GenOrder identity(int n);
  // perm lists the generators from smallest to largest, e.g. {3,1,2} says
  // x_3 < x_1 < x_2.  Must be a permutation of 1..n.
  static GenOrder from_permutation(const std::vector<int>& perm);

  int size() const { return static_cast<int>(rank_.size()); }
  int rank(Letter a) const { return rank_[a - 1]; }
  bool less(Letter a, Letter b) const { return rank_[a - 1] < rank_[b - 1]; }

 private:
  std::vector<int> rank_;
};

// Degree-lexicographic comparison: shorter words first, ties broken
// letterwise by ord.
Cmp deglex_compare(const Word& u, const Word& v, const GenOrder& ord);
bool deglex_less(const Word& u, const Word& v, const GenOrder& ord);

// Number of occurrences of x in w.
int occurrences(const Word& w, Letter x);

// Sorted set of generators occurring in w.
std::vector<Letter> support(const Word& w);

// Bit k-1 set iff generator k occurs in w.
std::uint32_t support_mask(const Word& w);

// w has no occurrence of t and no letter of w has an arrow into t.
bool no_arrow_to(const Word& w, Letter t, const Digraph& g);

// w has no occurrence of t and t has no arrow into any letter of w.
bool no_arrow_from(Letter t, const Word& w, const Digraph& g);

// Both of the above: t does not occur in w and is not adjacent to any
// letter of w.
bool disconnected(Letter t, const Word& w, const Digraph& g);

// Word literals: letters a..z map to 1..26 ("aba"), digit strings map one
// digit per letter ("121"), and whitespace- or dot-separated indices cover
// larger alphabets ("1 2 1", "10.2.1").  The empty string is the identity.
Word parse_word(const std::string& text);

// Inverse of parse_word for alphabets of at most 26 letters; larger
// alphabets print as dot-separated indices.  The identity prints as "1".
std::string to_string(const Word& w, int alphabet_size);

}  // namespace hk

#endif  // HK_WORD_HPP
