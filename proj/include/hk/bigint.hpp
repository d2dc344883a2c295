#ifndef HK_BIGINT_HPP
#define HK_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hk {

// Unsigned big integer, just enough arithmetic for exact word counting:
// addition, small multiplication, comparison and decimal output.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v);  // NOLINT: implicit on purpose

  BigUint& operator+=(const BigUint& other);
  friend BigUint operator+(BigUint a, const BigUint& b) {
    a += b;
    return a;
  }
  BigUint& mul_small(std::uint32_t m);

  bool is_zero() const { return limbs_.empty(); }
  std::string to_string() const;
  double to_double() const;

  friend bool operator==(const BigUint& a, const BigUint& b) {
    return a.limbs_ == b.limbs_;
  }
  friend bool operator!=(const BigUint& a, const BigUint& b) {
    return !(a == b);
  }
  friend bool operator<(const BigUint& a, const BigUint& b);
  friend bool operator<=(const BigUint& a, const BigUint& b) {
    return !(b < a);
  }
  friend bool operator>(const BigUint& a, const BigUint& b) { return b < a; }
  friend bool operator>=(const BigUint& a, const BigUint& b) {
    return !(a < b);
  }

 private:
  // base 2^32, little endian, no trailing zero limbs
  std::vector<std::uint32_t> limbs_;
};

}  // namespace hk

#endif  // HK_BIGINT_HPP
