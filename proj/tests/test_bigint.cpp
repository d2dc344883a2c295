#include "hk/bigint.hpp"

#include "doctest.h"

using hk::BigUint;

TEST_CASE("bigint: decimal output") {
  CHECK(BigUint().to_string() == "0");
  CHECK(BigUint(7).to_string() == "7");
  CHECK(BigUint(1000000000000ull).to_string() == "1000000000000");
}

TEST_CASE("bigint: addition carries across limbs") {
  BigUint a(0xffffffffffffffffull);
  a += BigUint(1);
  CHECK(a.to_string() == "18446744073709551616");
  BigUint b;
  for (int i = 0; i < 10; ++i) b += BigUint(0xffffffffffffffffull);
  CHECK(b.to_string() == "184467440737095516150");
}

TEST_CASE("bigint: small multiplication") {
  BigUint a(1);
  for (int i = 0; i < 40; ++i) a.mul_small(10);
  CHECK(a.to_string() == "1" + std::string(40, '0'));
  CHECK(BigUint(3).mul_small(0).is_zero());
}

TEST_CASE("bigint: comparisons") {
  CHECK(BigUint(2) < BigUint(3));
  CHECK(BigUint(3) >= BigUint(3));
  CHECK(BigUint(0xffffffffffffffffull) < (BigUint(0xffffffffffffffffull) +
                                          BigUint(1)));
  CHECK(BigUint(5) == BigUint(5));
  CHECK(BigUint(5) != BigUint(6));
}

TEST_CASE("bigint: double approximation") {
  CHECK(BigUint(1 << 20).to_double() == doctest::Approx(1048576.0));
}
