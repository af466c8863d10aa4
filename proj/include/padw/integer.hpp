#pragma once

// Integer and rational helpers: primes, base-p digits, Legendre's formula.

#include <gmpxx.h>

#include <cstdint>

namespace padw {

/// A rational prime below 2^31, validated on construction.
class Prime {
 public:
  explicit Prime(long p);

  unsigned long value() const noexcept { return p_; }
  operator unsigned long() const noexcept { return p_; }

  /// p^k as a big integer (k >= 0).
  mpz_class pow(unsigned long k) const;

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  unsigned long p_;
};

/// Deterministic Miller-Rabin, exact for n < 3.4e14.
bool is_prime(std::uint64_t n);

/// ord_p(n) for n != 0.
unsigned long ord_p(const mpz_class& n, const Prime& p);

/// ord_p(q) for q != 0.
long ord_p(const mpq_class& q, const Prime& p);

/// S_n: sum of the base-p digits of n >= 1.
mpz_class digit_sum(const mpz_class& n, const Prime& p);

/// ord_p(n!) computed as (n - S_n)/(p - 1).
mpz_class ord_factorial(const mpz_class& n, const Prime& p);

/// Inverse of a modulo m; a must be a unit mod m.
mpz_class mod_inverse(const mpz_class& a, const mpz_class& m);

/// ceil(q).
mpz_class ceil(const mpq_class& q);

}  // namespace padw
