#include "hk/cycle_basis.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "doctest.h"
#include "hk/errors.hpp"
#include "hk/word_space.hpp"

using namespace hk;

namespace {

using SpanSet = std::set<std::tuple<std::size_t, std::size_t, Word>>;

SpanSet match_set(const RuleSystem& sys, const Word& w) {
  SpanSet out;
  for (const Match& m : find_matches(sys, w)) {
    out.insert({m.begin, m.end, m.replacement});
  }
  return out;
}

// existential reading of the staircase shape: some factorization into
// consecutive runs with strictly increasing starts and ends
bool staircase_exists(const Word& w, std::size_t from, Letter min_first,
                      Letter min_last) {
  if (from == w.size()) return true;
  if (w[from] < min_first) return false;
  for (std::size_t to = from + 1; to <= w.size(); ++to) {
    if (to - from >= 2) {
      const int step = w[from + 1] - w[from];
      if (step != 1 && step != -1) break;
      if (w[to - 1] - w[to - 2] != step) break;
    }
    if (w[to - 1] >= min_last &&
        staircase_exists(w, to, w[from] + 1, w[to - 1] + 1)) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("cycle basis: block decomposition") {
  CHECK(block_decompose({1, 2, 3}) == BlockDecomposition{{1, 3}});
  CHECK(block_decompose({2, 3, 1}) == BlockDecomposition{{2, 3}, {1, 1}});
  CHECK(block_decompose({}).empty());
  CHECK(block_decompose({5, 4, 6, 5}) ==
        BlockDecomposition{{5, 4}, {6, 5}});
  CHECK(Block{2, 4}.increasing());
  CHECK(Block{4, 2}.decreasing());
  CHECK(Block{3, 3}.singleton());
  CHECK(Block{4, 2}.length() == 3);
}

TEST_CASE("cycle basis: staircase predicate") {
  CHECK(is_block_staircase({1, 2, 3, 4}, 6));
  CHECK_FALSE(is_block_staircase({2, 3, 3}, 6));
  CHECK(is_block_staircase({3, 2, 4, 3}, 6));
  CHECK(is_block_staircase({}, 6));
  CHECK_THROWS_AS(is_block_staircase({3}, 3), std::invalid_argument);
}

TEST_CASE("cycle basis: staircase matches its existential reading") {
  WordSpace space(4, 6, 10000);  // words over 1..4, top generator is 5
  for (std::uint64_t id = 0; id < space.size(); ++id) {
    Word w = space.decode(id);
    CHECK(is_block_staircase(w, 5) == staircase_exists(w, 0, 1, 1));
  }
}

TEST_CASE("cycle basis: S matchers on selected words") {
  CHECK_THROWS_AS(build_S(2), std::invalid_argument);

  auto s5 = build_S(5);
  auto m = find_family_matches(s5, {5, 1, 3}, RuleFamily::S3);
  REQUIRE(m.size() == 1);
  CHECK(m[0].replacement == Word{3, 5, 1});

  auto s4sys = build_S(4);
  auto m4 = find_family_matches(s4sys, {2, 3, 4, 2}, RuleFamily::S4);
  REQUIRE(m4.size() == 1);
  CHECK(m4[0].replacement == Word{2, 3, 4});

  auto m5 = find_family_matches(s4sys, {3, 1, 2, 3}, RuleFamily::S5);
  REQUIRE(m5.size() == 1);
  CHECK(m5[0].replacement == Word{1, 2, 3});
}

TEST_CASE("cycle basis: restricted matchers on selected words") {
  auto sp4 = build_Sprime(4);
  CHECK_FALSE(
      find_family_matches(sp4, {1, 3, 4, 1}, RuleFamily::S5Once).empty());
  CHECK_FALSE(
      find_family_matches(sp4, {1, 3, 4, 1}, RuleFamily::S5Block).empty());

  auto sp7 = build_Sprime(7);
  const Word w{2, 5, 4, 6, 5, 7, 1, 2};
  CHECK(find_family_matches(sp7, w, RuleFamily::S5Once).empty());
  auto blocks = find_family_matches(sp7, w, RuleFamily::S5Block);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].replacement == Word{5, 4, 6, 5, 7, 1, 2});

  auto sp3 = build_Sprime(3);
  auto squares = find_family_matches(sp3, {1, 1}, RuleFamily::S1);
  REQUIRE(squares.size() == 1);
  CHECK(squares[0].replacement == Word{1});
}

TEST_CASE("cycle basis: explicit rule list for n = 3") {
  auto rules = enumerate_sprime_rules(3);
  REQUIRE(rules.size() == 9);
  std::set<std::pair<Word, Word>> got;
  for (const Rule& r : rules) got.insert({r.lhs, r.rhs});
  std::set<std::pair<Word, Word>> expected{
      {{1, 1}, {1}},       {{2, 2}, {2}},       {{3, 3}, {3}},
      {{1, 2, 1}, {1, 2}}, {{2, 3, 2}, {2, 3}}, {{3, 1, 3}, {3, 1}},
      {{1, 3, 1}, {3, 1}}, {{2, 1, 2}, {1, 2}}, {{3, 2, 3}, {2, 3}},
  };
  CHECK(got == expected);
  // no commutation pairs and no long rules anchored at the top generator
  for (const Rule& r : rules) {
    CHECK_FALSE((r.lhs.size() == 2 && r.lhs[0] != r.lhs[1]));
  }
}

TEST_CASE("cycle basis: commutation sublist for n = 4") {
  auto rules = enumerate_sprime_rules(4);
  std::set<std::pair<Word, Word>> pairs;
  for (const Rule& r : rules) {
    if (r.lhs.size() == 2 && r.lhs[0] != r.lhs[1]) {
      pairs.insert({r.lhs, r.rhs});
    }
  }
  CHECK(pairs == std::set<std::pair<Word, Word>>{{{3, 1}, {1, 3}},
                                                 {{4, 2}, {2, 4}}});
}

TEST_CASE("cycle basis: rule list cap") {
  CHECK_THROWS_AS(enumerate_sprime_rules(9), BudgetError);
  CHECK_NOTHROW(enumerate_sprime_rules(6));
}

TEST_CASE("cycle basis: rule list sizes") {
  // pinned after cross-validating the lists against the matchers
  CHECK(enumerate_sprime_rules(4).size() == 39);
  CHECK(enumerate_sprime_rules(5).size() == 167);
  CHECK(enumerate_sprime_rules(6).size() == 815);
}

TEST_CASE("cycle basis: matcher and explicit list agree") {
  for (int n = 3; n <= 5; ++n) {
    RuleSystem sprime = build_Sprime(n);
    auto rules = enumerate_sprime_rules(n);
    WordSpace space(n, 6, 20000);
    for (std::uint64_t id = 0; id < space.size(); ++id) {
      Word w = space.decode(id);
      SpanSet from_list;
      for (const Rule& r : rules) {
        if (r.lhs.size() > w.size()) continue;
        for (std::size_t p = 0; p + r.lhs.size() <= w.size(); ++p) {
          if (std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + p)) {
            from_list.insert({p, p + r.lhs.size(), r.rhs});
          }
        }
      }
      CHECK(match_set(sprime, w) == from_list);
    }
  }
}

TEST_CASE("cycle basis: containment of the three systems") {
  for (int n = 3; n <= 5; ++n) {
    RuleSystem t = build_T(cycle_graph(n));
    RuleSystem s = build_S(n);
    RuleSystem sprime = build_Sprime(n);
    WordSpace space(n, 6, 20000);
    for (std::uint64_t id = 0; id < space.size(); ++id) {
      Word w = space.decode(id);
      SpanSet t_set = match_set(t, w), s_set = match_set(s, w),
              sp_set = match_set(sprime, w);
      CHECK(std::includes(s_set.begin(), s_set.end(), sp_set.begin(),
                          sp_set.end()));
      CHECK(std::includes(t_set.begin(), t_set.end(), s_set.begin(),
                          s_set.end()));
    }
  }
}

TEST_CASE("cycle basis: the three systems have the same reduced words and "
          "normal forms") {
  for (int n = 3; n <= 5; ++n) {
    RuleSystem t = build_T(cycle_graph(n));
    RuleSystem s = build_S(n);
    RuleSystem sprime = build_Sprime(n);
    WordSpace space(n, 6, 20000);
    for (std::uint64_t id = 0; id < space.size(); ++id) {
      Word w = space.decode(id);
      CHECK(is_reduced(t, w) == is_reduced(s, w));
      CHECK(is_reduced(s, w) == is_reduced(sprime, w));
      Word nt = normal_form(t, w);
      CHECK(nt == normal_form(s, w));
      CHECK(nt == normal_form(sprime, w));
    }
  }
}

TEST_CASE("cycle basis: staircase shape of fully restricted words") {
  // words over 1..n-1 with no short forbidden factors decompose as
  // staircases
  for (int n : {4, 5}) {
    RuleSystem partial{cycle_graph(n), GenOrder::identity(n),
                       {RuleFamily::S1, RuleFamily::S2, RuleFamily::S3,
                        RuleFamily::S4Once, RuleFamily::S5Once}};
    WordSpace space(n - 1, 7, 100000);
    for (std::uint64_t id = 1; id < space.size(); ++id) {
      Word w = space.decode(id);
      if (is_reduced(partial, w)) {
        CHECK(is_block_staircase(w, n));
      }
    }
  }
}

TEST_CASE("cycle basis: local confluence of the restricted system") {
  for (int n = 3; n <= 6; ++n) {
    CHECK(check_local_confluence(build_Sprime(n), 7).ok);
  }
}
