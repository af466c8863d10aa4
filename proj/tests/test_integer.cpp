#include <doctest.h>

#include "oracles.hpp"
#include "padw/error.hpp"
#include "padw/integer.hpp"

using namespace padw;

TEST_CASE("Prime rejects composites and out-of-range values") {
  CHECK(Prime(2).value() == 2);
  CHECK(Prime(2147483647).value() == 2147483647UL);
  CHECK_THROWS_AS(Prime(1), Error);
  CHECK_THROWS_AS(Prime(91), Error);
  CHECK_THROWS_AS(Prime(561), Error);  // Carmichael
  CHECK_THROWS_AS(Prime(1L << 31), Error);
}

TEST_CASE("is_prime agrees with trial division below 20000") {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    bool trial = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        trial = false;
        break;
      }
    }
    REQUIRE_MESSAGE(is_prime(n) == trial, n);
  }
}

TEST_CASE("digit_sum") {
  CHECK(digit_sum(1, Prime(7)) == 1);
  CHECK(digit_sum(72, Prime(3)) == 4);  // 2200 in base 3
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL}) {
    for (unsigned long k = 0; k < 10; ++k) {
      CHECK(digit_sum(Prime(static_cast<long>(p)).pow(k), Prime(static_cast<long>(p))) == 1);
    }
  }
  CHECK_THROWS_AS(digit_sum(0, Prime(3)), Error);
}

TEST_CASE("ord_factorial examples") {
  CHECK(ord_factorial(0, Prime(3)) == 0);
  CHECK(ord_factorial(4, Prime(2)) == 3);    // 24 = 2^3 * 3
  CHECK(ord_factorial(100, Prime(5)) == 24);  // 20 + 4
}

TEST_CASE("ord_factorial matches brute force for small n") {
  for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL}) {
    const Prime prime(static_cast<long>(p));
    long brute = 0;
    for (unsigned long n = 1; n <= 600; ++n) {
      for (unsigned long r = n; r % p == 0; r /= p) ++brute;
      REQUIRE(ord_factorial(n, prime) == brute);
      // Legendre: (n - S_n)/(p-1) is a nonnegative integer
      REQUIRE((n - oracle::digit_sum(n, p)) % (p - 1) == 0);
    }
  }
}

TEST_CASE("ord_p of integers and rationals") {
  CHECK(ord_p(mpz_class(250), Prime(5)) == 3);
  CHECK(ord_p(mpq_class(9, 25), Prime(5)) == -2);
  CHECK(ord_p(mpq_class(-12, 7), Prime(2)) == 2);
  CHECK_THROWS_AS(ord_p(mpz_class(0), Prime(5)), Error);
}

TEST_CASE("ceil") {
  CHECK(padw::ceil(mpq_class(79, 3)) == 27);
  CHECK(padw::ceil(mpq_class(-3, 4)) == 0);
  CHECK(padw::ceil(mpq_class(4)) == 4);
}
