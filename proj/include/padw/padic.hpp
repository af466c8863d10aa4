#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "padw/error.hpp"
#include "padw/integer.hpp"
#include "padw/valuation.hpp"

namespace padw {

inline constexpr long kDefaultPrecision = 32;

/// What add/sub do when the operands cancel to the last known digit.
enum class Cancellation {
  Throw,     // raise PrecisionExhausted
  KeepZero,  // return a zero-to-precision value O(p^A)
};

/**
 * An element of Q_p at capped relative precision.
 *
 * Three states:
 *   - exact zero;
 *   - zero-to-precision O(p^A): only known to be divisible by p^A;
 *   - p^v * u + O(p^(v+N)) with p not dividing u and 0 < u < p^N.
 *
 * Values are immutable. Arithmetic never rounds; it only drops digits
 * that are not determined by the operands.
 */
class PadicNumber {
 public:
  enum class State { ExactZero, ZeroToPrecision, Nonzero };

  static PadicNumber zero(const Prime& p);
  static PadicNumber zero_to_precision(const Prime& p, long absolute_precision);
  /// p^v * unit mod p^N; unit is reduced and must be coprime to p.
  static PadicNumber from_parts(const Prime& p, long v, const mpz_class& unit,
                                long N);

  const Prime& prime() const noexcept { return prime_; }
  State state() const noexcept { return state_; }
  bool is_exact_zero() const noexcept { return state_ == State::ExactZero; }
  bool is_zero_to_precision() const noexcept {
    return state_ == State::ZeroToPrecision;
  }
  bool is_nonzero() const noexcept { return state_ == State::Nonzero; }

  /// Integer valuation v of a nonzero value.
  long v() const;
  const mpz_class& unit() const;
  long relative_precision() const;
  /// v + N; for O(p^A) this is A; LONG_MAX for exact zero.
  long absolute_precision() const noexcept;

  /// Drops digits so that absolute precision is at most A.
  PadicNumber cap_absolute(long A) const;
  /// Drops digits so that relative precision is at most N.
  PadicNumber cap_relative(long N) const;

 private:
  explicit PadicNumber(const Prime& p) : prime_(p) {}

  Prime prime_;
  State state_ = State::ExactZero;
  long v_ = 0;  // valuation, or A for ZeroToPrecision
  mpz_class unit_ = 0;
  long N_ = 0;
};

/// a/b in Q_p at relative precision N. b must be nonzero.
PadicNumber from_rational(const mpz_class& a, const mpz_class& b,
                          const Prime& p, long N);
PadicNumber from_rational(const mpq_class& q, const Prime& p, long N);

PadicNumber add(const PadicNumber& x, const PadicNumber& y,
                Cancellation policy = Cancellation::Throw);
PadicNumber sub(const PadicNumber& x, const PadicNumber& y,
                Cancellation policy = Cancellation::Throw);
PadicNumber neg(const PadicNumber& x);
PadicNumber mul(const PadicNumber& x, const PadicNumber& y);
PadicNumber div(const PadicNumber& x, const PadicNumber& y);

/// ord_p(x); +inf for exact zero, AmbiguousZero for O(p^A).
ExtendedValuation valuation(const PadicNumber& x);

/// True when x - y is divisible by p^A, both being known that far.
bool congruent(const PadicNumber& x, const PadicNumber& y, long A);

/// Canonical representative of p^v * unit in [0, p^A) for v >= 0 values,
/// i.e. x mod p^A as an integer. Requires v >= 0 and A <= absolute precision.
mpz_class residue(const PadicNumber& x, long A);

struct DigitExpansion {
  long valuation = 0;
  std::vector<unsigned long> digits;  // little-endian, length N
};

/// Base-p digits of the unit of a nonzero x.
DigitExpansion digits_of(const PadicNumber& x);

/**
 * Text literal `p^v*(d0,d1,...,dK)+O(p^(v+N))` with the prime written out,
 * e.g. `5^1*(2,0,0)+O(5^4)`. Zero-to-precision prints as `0 + O(5^8)`.
 * Exact zero prints as `0 + O(p^A)` when A is given, `0` otherwise.
 */
std::string to_literal(const PadicNumber& x,
                       long zero_precision = std::numeric_limits<long>::min());

/// Inverse of to_literal for nonzero and zero-to-precision literals.
PadicNumber parse_literal(std::string_view text);

/// Parses `a/b` or `a` (optional sign on a). Throws ParseError.
mpq_class parse_rational(std::string_view text);

}  // namespace padw
