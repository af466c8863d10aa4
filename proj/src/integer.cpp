#include "padw/integer.hpp"

#include <array>
#include <string>

#include "padw/error.hpp"

namespace padw {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 7> kBases = {2, 3, 5, 7, 11, 13, 17};
  for (auto b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(long p) {
  if (p < 2 || p >= (1L << 31) || !is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::InvalidArgument,
                "not a prime below 2^31: " + std::to_string(p));
  }
  p_ = static_cast<unsigned long>(p);
}

mpz_class Prime::pow(unsigned long k) const {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), p_, k);
  return r;
}

unsigned long ord_p(const mpz_class& n, const Prime& p) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "ord_p(0)");
  mpz_class rest;
  const mpz_class pz = p.value();
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
}

long ord_p(const mpq_class& q, const Prime& p) {
  return static_cast<long>(ord_p(mpz_class(q.get_num()), p)) -
         static_cast<long>(ord_p(mpz_class(q.get_den()), p));
}

mpz_class digit_sum(const mpz_class& n, const Prime& p) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "digit_sum needs n >= 1");
  mpz_class rest = n;
  mpz_class sum = 0;
  mpz_class digit;
  while (rest != 0) {
    digit = mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p.value());
    sum += digit;
  }
  return sum;
}

mpz_class ord_factorial(const mpz_class& n, const Prime& p) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "ord_factorial needs n >= 0");
  if (n == 0) return 0;
  mpz_class diff = n - digit_sum(n, p);
  mpz_class q;
  mpz_divexact_ui(q.get_mpz_t(), diff.get_mpz_t(), p.value() - 1);
  return q;
}

mpz_class mod_inverse(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(ErrorCode::DivisionByZero, "not invertible modulo p^N");
  }
  return r;
}

mpz_class ceil(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace padw
