#include <catch2/catch_amalgamated.hpp>

#include "kdm/bigint.hpp"

using namespace kdm;

TEST_CASE("construction and printing", "[bigint]") {
  REQUIRE(BigUint(0).to_string() == "0");
  REQUIRE(BigUint(0).is_zero());
  REQUIRE(BigUint(7).to_string() == "7");
  REQUIRE(BigUint(1000000000ull).to_string() == "1000000000");
  REQUIRE(BigUint(123456789012345678ull).to_string() == "123456789012345678");
}

TEST_CASE("addition and multiplication", "[bigint]") {
  BigUint a(999999999ull);
  REQUIRE((a + BigUint(1)).to_string() == "1000000000");
  BigUint b(123456789ull);
  REQUIRE((b * BigUint(1000000007ull)).to_string() == "123456789864197523");
  REQUIRE((BigUint(0) * b).is_zero());
  REQUIRE((b * BigUint(1)) == b);
}

TEST_CASE("factorial", "[bigint]") {
  REQUIRE(BigUint::factorial(0).to_string() == "1");
  REQUIRE(BigUint::factorial(10).to_string() == "3628800");
  REQUIRE(BigUint::factorial(20).to_string() == "2432902008176640000");
  REQUIRE(BigUint::factorial(25).to_string() == "15511210043330985984000000");
}

TEST_CASE("powers of two", "[bigint]") {
  REQUIRE(BigUint::pow2(0).to_string() == "1");
  REQUIRE(BigUint::pow2(10).to_string() == "1024");
  REQUIRE(BigUint::pow2(64).to_string() == "18446744073709551616");
  REQUIRE(BigUint::pow2(100).to_string() == "1267650600228229401496703205376");
}

TEST_CASE("labeling count formula values", "[bigint]") {
  // 2^(2km) * (2km)! at 2km = 2, 4, 6
  REQUIRE((BigUint::pow2(2) * BigUint::factorial(2)).to_string() == "8");
  REQUIRE((BigUint::pow2(4) * BigUint::factorial(4)).to_string() == "384");
  REQUIRE((BigUint::pow2(6) * BigUint::factorial(6)).to_string() == "46080");
}
