#pragma once

// Reference computations for tests. Nothing here calls into padw, so each
// oracle is independent of the code path it checks.

#include <gmpxx.h>

#include <random>

namespace oracle {

inline long count_factor(mpz_class n, unsigned long p) {
  long k = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

/// ord_p(q) by trial division of numerator and denominator.
inline long ord(const mpq_class& q, unsigned long p) {
  return count_factor(q.get_num(), p) - count_factor(q.get_den(), p);
}

/// ord_p(n!) as sum over m <= n of ord_p(m).
inline long ord_factorial_brute(unsigned long n, unsigned long p) {
  long total = 0;
  for (unsigned long m = 2; m <= n; ++m) {
    for (unsigned long r = m; r % p == 0; r /= p) ++total;
  }
  return total;
}

inline long digit_sum(unsigned long n, unsigned long p) {
  long s = 0;
  for (; n != 0; n /= p) s += static_cast<long>(n % p);
  return s;
}

inline mpz_class factorial(unsigned long n) {
  mpz_class f = 1;
  for (unsigned long i = 2; i <= n; ++i) f *= i;
  return f;
}

inline mpz_class power(const mpz_class& b, unsigned long e) {
  mpz_class r = 1;
  for (unsigned long i = 0; i < e; ++i) r *= b;
  return r;
}

/// (-n)^(n-1)/n!
inline mpq_class lambert_coefficient(unsigned long n) {
  mpq_class q(power(mpz_class(-static_cast<long>(n)), n - 1), factorial(n));
  q.canonicalize();
  return q;
}

/// sum_{n=1..M} (-n)^(n-1)/n! x^n in exact rationals.
inline mpq_class lambert_partial_sum(const mpq_class& x, unsigned long M) {
  mpq_class sum = 0;
  mpq_class xn = 1;
  for (unsigned long n = 1; n <= M; ++n) {
    xn *= x;
    sum += lambert_coefficient(n) * xn;
  }
  sum.canonicalize();
  return sum;
}

/// sum_{n=0..M} x^n/n!.
inline mpq_class exp_partial_sum(const mpq_class& x, unsigned long M) {
  mpq_class sum = 0;
  mpq_class xn = 1;
  for (unsigned long n = 0; n <= M; ++n) {
    sum += xn / mpq_class(factorial(n));
    xn *= x;
  }
  sum.canonicalize();
  return sum;
}

/// q mod p^A for a q whose denominator is coprime to p.
inline mpz_class residue(const mpq_class& q, unsigned long p, unsigned long A) {
  const mpz_class m = power(mpz_class(p), A);
  mpz_class inv;
  mpz_class den = q.get_den();
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::runtime_error("denominator not invertible");
  }
  mpz_class r = q.get_num() * inv;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// ord(a_{n+p_nu} - a_n) for a_m = b_m p^(m/(p-1)), by factoring out
/// p^(n/(p-1)) and differencing the coefficients with full factorials.
inline mpq_class direct_cr_difference(unsigned long n, unsigned long nu,
                                      unsigned long p) {
  const mpz_class q = power(mpz_class(p), nu);
  const unsigned long shift = mpz_class(q * (q - 1)).get_ui();
  const mpz_class lift = power(mpz_class(p), shift / (p - 1));
  mpq_class d = lambert_coefficient(n + shift) * mpq_class(lift) -
                lambert_coefficient(n);
  d.canonicalize();
  mpq_class out(ord(d, p));
  out += mpq_class(n, p - 1);
  out.canonicalize();
  return out;
}

/// Random nonzero rational p^v a/b with |a|, |b| <= bound and v >= min_v,
/// a and b coprime to p. Total numerator stays below bound.
inline mpq_class random_rational(std::mt19937_64& rng, unsigned long p,
                                 long min_v, long max_v, long bound) {
  std::uniform_int_distribution<long> vdist(min_v, max_v);
  while (true) {
    const long v = vdist(rng);
    mpz_class pv = power(mpz_class(p), static_cast<unsigned long>(v < 0 ? -v : v));
    if (pv > bound) continue;
    const long limit = v >= 0 ? bound / pv.get_si() : bound;
    if (limit < 1) continue;
    std::uniform_int_distribution<long> adist(-limit, limit);
    std::uniform_int_distribution<long> bdist(1, bound);
    const long a = adist(rng);
    const long b = bdist(rng);
    if (a == 0 || a % static_cast<long>(p) == 0 || b % static_cast<long>(p) == 0) continue;
    mpq_class x = v >= 0 ? mpq_class(pv * a, b) : mpq_class(a, pv * b);
    x.canonicalize();
    return x;
  }
}

}  // namespace oracle
