#ifndef HK_ERRORS_HPP
#define HK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hk {

// Malformed external input: graph files, word literals, bad flag values.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or construction would exceed its configured budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hk

#endif  // HK_ERRORS_HPP
