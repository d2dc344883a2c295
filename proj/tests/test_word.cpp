#include "hk/word.hpp"

#include "doctest.h"
#include "hk/errors.hpp"
#include "hk/word_space.hpp"

using namespace hk;

TEST_CASE("word: deg-lex comparison") {
  GenOrder ord = GenOrder::identity(3);
  CHECK(deglex_compare({1, 2}, {3}, ord) == Cmp::Greater);
  CHECK(deglex_compare({1, 3}, {2, 1}, ord) == Cmp::Less);
  CHECK(deglex_compare({2, 1, 2}, {2, 1, 2}, ord) == Cmp::Equal);
  CHECK(deglex_less({}, {1}, ord));
}

TEST_CASE("word: deg-lex respects a permuted generator order") {
  GenOrder ord = GenOrder::from_permutation({3, 1, 2});
  CHECK(ord.less(3, 1));
  CHECK(ord.less(1, 2));
  CHECK_FALSE(ord.less(2, 3));
  CHECK(deglex_compare({1}, {3}, ord) == Cmp::Greater);
}

TEST_CASE("word: order must be a permutation") {
  CHECK_THROWS_AS(GenOrder::from_permutation({1, 1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(GenOrder::from_permutation({2, 3}), std::invalid_argument);
}

TEST_CASE("word: occurrences and support") {
  CHECK(occurrences({1, 2, 1}, 1) == 2);
  CHECK(occurrences({}, 1) == 0);
  CHECK(occurrences({4, 1, 2, 3}, 4) == 1);
  CHECK(support({1, 2, 1}) == std::vector<Letter>{1, 2});
  CHECK(support({}).empty());
  CHECK(support({3, 3}) == std::vector<Letter>{3});
}

TEST_CASE("word: support agrees with occurrences") {
  WordSpace space(3, 4, 1000);
  for (std::uint64_t id = 0; id < space.size(); ++id) {
    Word w = space.decode(id);
    for (Letter x = 1; x <= 3; ++x) {
      const bool in_support =
          (support_mask(w) >> (x - 1)) & 1u;
      CHECK(in_support == (occurrences(w, x) > 0));
    }
  }
}

TEST_CASE("word: arrow predicates on the three-cycle") {
  Digraph g = cycle_graph(3);
  // arrows into 1 come only from 3
  CHECK(no_arrow_to({2}, 1, g));
  CHECK_FALSE(no_arrow_to({3}, 1, g));
  CHECK(no_arrow_to({}, 1, g));
  CHECK_FALSE(no_arrow_to({2, 1}, 1, g));  // contains 1 itself
  CHECK_FALSE(no_arrow_from(1, {2}, g));
  CHECK(no_arrow_from(2, {1}, g));
  CHECK_FALSE(disconnected(1, {3}, g));
}

TEST_CASE("word: disconnection is inherited by factors") {
  Digraph g = example_s4();
  WordSpace space(4, 4, 1000);
  for (std::uint64_t id = 0; id < space.size(); ++id) {
    Word w = space.decode(id);
    for (Letter t = 1; t <= 4; ++t) {
      if (!disconnected(t, w, g)) continue;
      for (std::size_t b = 0; b < w.size(); ++b) {
        for (std::size_t e = b; e <= w.size(); ++e) {
          Word factor(w.begin() + b, w.begin() + e);
          CHECK(disconnected(t, factor, g));
        }
      }
    }
  }
}

TEST_CASE("word: literal parsing") {
  CHECK(parse_word("1 2 1") == Word{1, 2, 1});
  CHECK(parse_word("aba") == Word{1, 2, 1});
  CHECK(parse_word("121") == Word{1, 2, 1});
  CHECK(parse_word("10.2.1") == Word{10, 2, 1});
  CHECK(parse_word("").empty());
  CHECK_THROWS_AS(parse_word("1a2"), ParseError);
  CHECK_THROWS_AS(parse_word("102"), ParseError);
  CHECK_THROWS_AS(parse_word("1..2"), ParseError);
}

TEST_CASE("word: printing round trip") {
  CHECK(to_string({1, 2, 1}, 3) == "aba");
  CHECK(to_string({}, 3) == "1");  // the identity element
  CHECK(to_string({27, 2}, 30) == "27.2");
  WordSpace space(4, 3, 1000);
  for (std::uint64_t id = 1; id < space.size(); ++id) {
    Word w = space.decode(id);
    CHECK(parse_word(to_string(w, 4)) == w);
  }
}
