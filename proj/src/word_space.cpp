#include "hk/word_space.hpp"

#include <string>

#include "hk/errors.hpp"

namespace hk {

WordSpace::WordSpace(int alphabet, int max_len, std::uint64_t budget)
    : n_(alphabet), max_len_(max_len) {
  offsets_.reserve(max_len + 2);
  offsets_.push_back(0);
  std::uint64_t total = 0, layer = 1;
  for (int len = 0; len <= max_len; ++len) {
    if (layer > budget - total) {
      throw BudgetError("word enumeration over " + std::to_string(n_) +
                        " letters up to length " + std::to_string(max_len) +
                        " exceeds the budget of " + std::to_string(budget));
    }
    total += layer;
    offsets_.push_back(total);
    if (len < max_len) layer *= static_cast<std::uint64_t>(n_);
  }
}

int WordSpace::length_of(std::uint64_t id) const {
  int len = 0;
  while (offsets_[len + 1] <= id) ++len;
  return len;
}

std::uint64_t WordSpace::encode(const Word& w) const {
  std::uint64_t code = 0;
  for (Letter x : w) {
    code = code * static_cast<std::uint64_t>(n_) +
           static_cast<std::uint64_t>(x - 1);
  }
  return offsets_[w.size()] + code;
}

Word WordSpace::decode(std::uint64_t id) const {
  Word w;
  decode_into(id, w);
  return w;
}

void WordSpace::decode_into(std::uint64_t id, Word& out) const {
  const int len = length_of(id);
  std::uint64_t code = id - offsets_[len];
  out.assign(len, 1);
  for (int k = len; k-- > 0;) {
    out[k] = static_cast<Letter>(code % n_) + 1;
    code /= n_;
  }
}

}  // namespace hk
