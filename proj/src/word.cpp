#include "hk/word.hpp"

#include <algorithm>
#include <stdexcept>

#include "hk/errors.hpp"

namespace hk {

GenOrder GenOrder::identity(int n) {
  GenOrder ord;
  ord.rank_.resize(n);
  for (int i = 0; i < n; ++i) ord.rank_[i] = i;
  return ord;
}

GenOrder GenOrder::from_permutation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  GenOrder ord;
  ord.rank_.assign(n, -1);
  for (int pos = 0; pos < n; ++pos) {
    int g = perm[pos];
    if (g < 1 || g > n || ord.rank_[g - 1] != -1) {
      throw std::invalid_argument(
          "generator order must be a permutation of 1..n");
    }
    ord.rank_[g - 1] = pos;
  }
  return ord;
}

Cmp deglex_compare(const Word& u, const Word& v, const GenOrder& ord) {
  if (u.size() != v.size()) {
    return u.size() < v.size() ? Cmp::Less : Cmp::Greater;
  }
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] != v[k]) {
      return ord.less(u[k], v[k]) ? Cmp::Less : Cmp::Greater;
    }
  }
  return Cmp::Equal;
}

bool deglex_less(const Word& u, const Word& v, const GenOrder& ord) {
  return deglex_compare(u, v, ord) == Cmp::Less;
}

int occurrences(const Word& w, Letter x) {
  return static_cast<int>(std::count(w.begin(), w.end(), x));
}

std::vector<Letter> support(const Word& w) {
  std::uint32_t mask = support_mask(w);
  std::vector<Letter> out;
  while (mask != 0) {
    out.push_back(__builtin_ctz(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

std::uint32_t support_mask(const Word& w) {
  std::uint32_t mask = 0;
  for (Letter x : w) mask |= 1u << (x - 1);
  return mask;
}

bool no_arrow_to(const Word& w, Letter t, const Digraph& g) {
  std::uint32_t s = support_mask(w);
  if ((s >> (t - 1)) & 1u) return false;
  return (s & g.in_mask(t)) == 0;
}

bool no_arrow_from(Letter t, const Word& w, const Digraph& g) {
  std::uint32_t s = support_mask(w);
  if ((s >> (t - 1)) & 1u) return false;
  return (s & g.out_mask(t)) == 0;
}

bool disconnected(Letter t, const Word& w, const Digraph& g) {
  std::uint32_t s = support_mask(w);
  if ((s >> (t - 1)) & 1u) return false;
  return (s & (g.in_mask(t) | g.out_mask(t))) == 0;
}

namespace {

Letter parse_index(const std::string& token) {
  if (token.empty()) throw ParseError("empty letter index in word literal");
  for (char c : token) {
    if (c < '0' || c > '9') {
      throw ParseError("bad letter index '" + token + "' in word literal");
    }
  }
  if (token.size() > 6) {
    throw ParseError("letter index '" + token + "' is too large");
  }
  int value = std::stoi(token);
  if (value < 1) {
    throw ParseError("letter indices are 1-based, got '" + token + "'");
  }
  return value;
}

}  // namespace

Word parse_word(const std::string& text) {
  const bool separated =
      text.find_first_of(" \t.") != std::string::npos;
  Word w;
  if (separated) {
    std::string token;
    auto flush = [&] {
      if (!token.empty()) {
        w.push_back(parse_index(token));
        token.clear();
      }
    };
    for (char c : text) {
      if (c == ' ' || c == '\t' || c == '.') {
        if (c == '.' && token.empty()) {
          throw ParseError("empty letter index in word literal");
        }
        flush();
      } else {
        token.push_back(c);
      }
    }
    flush();
    return w;
  }
  if (text.empty()) return w;
  bool all_digits = true, all_alpha = true;
  for (char c : text) {
    if (c < '0' || c > '9') all_digits = false;
    if (c < 'a' || c > 'z') all_alpha = false;
  }
  if (all_digits) {
    for (char c : text) {
      if (c == '0') throw ParseError("letter indices are 1-based, got '0'");
      w.push_back(c - '0');
    }
    return w;
  }
  if (all_alpha) {
    for (char c : text) w.push_back(c - 'a' + 1);
    return w;
  }
  throw ParseError("word literal '" + text +
                   "' mixes letters and digits; use one style");
}

std::string to_string(const Word& w, int alphabet_size) {
  if (w.empty()) return "1";
  std::string out;
  if (alphabet_size <= 26) {
    for (Letter x : w) out.push_back(static_cast<char>('a' + x - 1));
  } else {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k > 0) out.push_back('.');
      out += std::to_string(w[k]);
    }
  }
  return out;
}

}  // namespace hk
