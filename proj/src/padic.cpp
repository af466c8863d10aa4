#include "padw/padic.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace padw {

namespace {

void require_same_prime(const PadicNumber& x, const PadicNumber& y) {
  if (x.prime() != y.prime()) {
    throw Error(ErrorCode::InvalidArgument, "operands have different primes");
  }
}

// Builds a value from an integer `digits` known modulo p^(A - base),
// scaled by p^base. Strips factors of p from `digits` into the valuation.
PadicNumber normalize(const Prime& p, long base, mpz_class digits, long A,
                      Cancellation policy) {
  const long width = A - base;
  if (width <= 0) return PadicNumber::zero_to_precision(p, A);
  const mpz_class modulus = p.pow(static_cast<unsigned long>(width));
  mpz_mod(digits.get_mpz_t(), digits.get_mpz_t(), modulus.get_mpz_t());
  if (digits == 0) {
    if (policy == Cancellation::Throw) {
      throw Error(ErrorCode::PrecisionExhausted,
                  "cancellation consumed all known digits");
    }
    return PadicNumber::zero_to_precision(p, A);
  }
  const long k = static_cast<long>(ord_p(digits, p));
  mpz_class unit;
  mpz_divexact(unit.get_mpz_t(), digits.get_mpz_t(),
               p.pow(static_cast<unsigned long>(k)).get_mpz_t());
  return PadicNumber::from_parts(p, base + k, unit, width - k);
}

long parse_long(std::string_view s, std::string_view what) {
  long out = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || s.empty()) {
    throw Error(ErrorCode::ParseError,
                std::string("bad ") + std::string(what) + ": '" +
                    std::string(s) + "'");
  }
  return out;
}

void expect(std::string_view& s, std::string_view token) {
  if (s.substr(0, token.size()) != token) {
    throw Error(ErrorCode::ParseError,
                "expected '" + std::string(token) + "' in p-adic literal");
  }
  s.remove_prefix(token.size());
}

// Reads "<p>^<e>" up to the first occurrence of `stop`.
std::pair<long, long> read_power(std::string_view& s, char stop) {
  const auto caret = s.find('^');
  const auto end = s.find(stop);
  if (caret == std::string_view::npos || end == std::string_view::npos ||
      caret > end) {
    throw Error(ErrorCode::ParseError, "expected p^e in p-adic literal");
  }
  const long base = parse_long(s.substr(0, caret), "prime");
  const long exponent = parse_long(s.substr(caret + 1, end - caret - 1),
                                   "exponent");
  s.remove_prefix(end);
  return {base, exponent};
}

}  // namespace

PadicNumber PadicNumber::zero(const Prime& p) { return PadicNumber(p); }

PadicNumber PadicNumber::zero_to_precision(const Prime& p,
                                           long absolute_precision) {
  PadicNumber x(p);
  x.state_ = State::ZeroToPrecision;
  x.v_ = absolute_precision;
  return x;
}

PadicNumber PadicNumber::from_parts(const Prime& p, long v,
                                    const mpz_class& unit, long N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "relative precision < 1");
  PadicNumber x(p);
  x.state_ = State::Nonzero;
  x.v_ = v;
  x.N_ = N;
  const mpz_class modulus = p.pow(static_cast<unsigned long>(N));
  mpz_mod(x.unit_.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());
  if (mpz_divisible_ui_p(x.unit_.get_mpz_t(), p.value()) != 0) {
    throw Error(ErrorCode::InvalidArgument, "unit is divisible by p");
  }
  return x;
}

long PadicNumber::v() const {
  if (state_ != State::Nonzero) {
    throw Error(ErrorCode::AmbiguousZero, "valuation of a zero value");
  }
  return v_;
}

const mpz_class& PadicNumber::unit() const {
  if (state_ != State::Nonzero) {
    throw Error(ErrorCode::InvalidArgument, "unit of a zero value");
  }
  return unit_;
}

long PadicNumber::relative_precision() const {
  if (state_ != State::Nonzero) {
    throw Error(ErrorCode::InvalidArgument, "relative precision of zero");
  }
  return N_;
}

long PadicNumber::absolute_precision() const noexcept {
  switch (state_) {
    case State::ExactZero: return std::numeric_limits<long>::max();
    case State::ZeroToPrecision: return v_;
    case State::Nonzero: return v_ + N_;
  }
  return 0;
}

PadicNumber PadicNumber::cap_absolute(long A) const {
  if (A >= absolute_precision()) return *this;
  if (state_ != State::Nonzero || A <= v_) return zero_to_precision(prime_, A);
  return cap_relative(A - v_);
}

PadicNumber PadicNumber::cap_relative(long N) const {
  if (state_ != State::Nonzero || N >= N_) return *this;
  return from_parts(prime_, v_, unit_, N);
}

PadicNumber from_rational(const mpz_class& a, const mpz_class& b,
                          const Prime& p, long N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "precision N must be >= 1");
  if (b == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (a == 0) return PadicNumber::zero(p);
  const mpz_class pz = p.value();
  mpz_class a_unit, b_unit;
  const long va = static_cast<long>(
      mpz_remove(a_unit.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t()));
  const long vb = static_cast<long>(
      mpz_remove(b_unit.get_mpz_t(), b.get_mpz_t(), pz.get_mpz_t()));
  const mpz_class modulus = p.pow(static_cast<unsigned long>(N));
  mpz_class b_mod = b_unit % modulus;
  if (b_mod < 0) b_mod += modulus;
  mpz_class unit = a_unit * mod_inverse(b_mod, modulus);
  return PadicNumber::from_parts(p, va - vb, unit, N);
}

PadicNumber from_rational(const mpq_class& q, const Prime& p, long N) {
  return from_rational(mpz_class(q.get_num()), mpz_class(q.get_den()), p, N);
}

PadicNumber add(const PadicNumber& x, const PadicNumber& y,
                Cancellation policy) {
  require_same_prime(x, y);
  if (x.is_exact_zero()) return y;
  if (y.is_exact_zero()) return x;
  const long A = std::min(x.absolute_precision(), y.absolute_precision());
  if (x.is_zero_to_precision()) return y.cap_absolute(A);
  if (y.is_zero_to_precision()) return x.cap_absolute(A);

  const Prime& p = x.prime();
  const long base = std::min(x.v(), y.v());
  if (A <= base) return PadicNumber::zero_to_precision(p, A);
  mpz_class sum = x.unit() * p.pow(static_cast<unsigned long>(x.v() - base)) +
                  y.unit() * p.pow(static_cast<unsigned long>(y.v() - base));
  return normalize(p, base, std::move(sum), A, policy);
}

PadicNumber sub(const PadicNumber& x, const PadicNumber& y,
                Cancellation policy) {
  return add(x, neg(y), policy);
}

PadicNumber neg(const PadicNumber& x) {
  if (!x.is_nonzero()) return x;
  const mpz_class modulus =
      x.prime().pow(static_cast<unsigned long>(x.relative_precision()));
  return PadicNumber::from_parts(x.prime(), x.v(), modulus - x.unit(),
                                 x.relative_precision());
}

PadicNumber mul(const PadicNumber& x, const PadicNumber& y) {
  require_same_prime(x, y);
  const Prime& p = x.prime();
  if (x.is_exact_zero() || y.is_exact_zero()) return PadicNumber::zero(p);
  if (x.is_zero_to_precision() && y.is_zero_to_precision()) {
    return PadicNumber::zero_to_precision(
        p, x.absolute_precision() + y.absolute_precision());
  }
  if (x.is_zero_to_precision()) {
    return PadicNumber::zero_to_precision(p, x.absolute_precision() + y.v());
  }
  if (y.is_zero_to_precision()) {
    return PadicNumber::zero_to_precision(p, y.absolute_precision() + x.v());
  }
  const long N = std::min(x.relative_precision(), y.relative_precision());
  return PadicNumber::from_parts(p, x.v() + y.v(), x.unit() * y.unit(), N);
}

PadicNumber div(const PadicNumber& x, const PadicNumber& y) {
  require_same_prime(x, y);
  const Prime& p = x.prime();
  if (!y.is_nonzero()) {
    throw Error(ErrorCode::DivisionByZero, "division by a zero value");
  }
  if (x.is_exact_zero()) return PadicNumber::zero(p);
  if (x.is_zero_to_precision()) {
    return PadicNumber::zero_to_precision(p, x.absolute_precision() - y.v());
  }
  const long N = std::min(x.relative_precision(), y.relative_precision());
  const mpz_class modulus = p.pow(static_cast<unsigned long>(N));
  return PadicNumber::from_parts(p, x.v() - y.v(),
                                 x.unit() * mod_inverse(y.unit(), modulus), N);
}

ExtendedValuation valuation(const PadicNumber& x) {
  switch (x.state()) {
    case PadicNumber::State::ExactZero: return ExtendedValuation::infinity();
    case PadicNumber::State::ZeroToPrecision:
      throw Error(ErrorCode::AmbiguousZero,
                  "valuation only known to be >= " +
                      std::to_string(x.absolute_precision()));
    case PadicNumber::State::Nonzero: break;
  }
  return ExtendedValuation(x.v());
}

bool congruent(const PadicNumber& x, const PadicNumber& y, long A) {
  const PadicNumber d = sub(x, y, Cancellation::KeepZero);
  if (d.is_exact_zero()) return true;
  if (d.is_nonzero()) return d.v() >= A;
  if (d.absolute_precision() < A) {
    throw Error(ErrorCode::PrecisionExhausted,
                "operands not known modulo p^" + std::to_string(A));
  }
  return true;
}

mpz_class residue(const PadicNumber& x, long A) {
  if (A > x.absolute_precision()) {
    throw Error(ErrorCode::PrecisionExhausted,
                "value not known modulo p^" + std::to_string(A));
  }
  if (!x.is_nonzero() || A <= 0) return 0;
  if (x.v() < 0) {
    throw Error(ErrorCode::InvalidArgument, "residue of a non-integral value");
  }
  if (A <= x.v()) return 0;
  const Prime& p = x.prime();
  const mpz_class modulus = p.pow(static_cast<unsigned long>(A));
  mpz_class r = x.unit() * p.pow(static_cast<unsigned long>(x.v()));
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

DigitExpansion digits_of(const PadicNumber& x) {
  DigitExpansion out;
  out.valuation = x.v();
  out.digits.reserve(static_cast<std::size_t>(x.relative_precision()));
  mpz_class rest = x.unit();
  for (long i = 0; i < x.relative_precision(); ++i) {
    out.digits.push_back(
        mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), x.prime().value()));
  }
  return out;
}

std::string to_literal(const PadicNumber& x, long zero_precision) {
  const unsigned long p = x.prime().value();
  std::ostringstream os;
  switch (x.state()) {
    case PadicNumber::State::ExactZero:
      if (zero_precision == std::numeric_limits<long>::min()) return "0";
      os << "0 + O(" << p << '^' << zero_precision << ')';
      return os.str();
    case PadicNumber::State::ZeroToPrecision:
      os << "0 + O(" << p << '^' << x.absolute_precision() << ')';
      return os.str();
    case PadicNumber::State::Nonzero: break;
  }
  const DigitExpansion e = digits_of(x);
  os << p << '^' << e.valuation << "*(";
  for (std::size_t i = 0; i < e.digits.size(); ++i) {
    if (i != 0) os << ',';
    os << e.digits[i];
  }
  os << ")+O(" << p << '^' << x.absolute_precision() << ')';
  return os.str();
}

PadicNumber parse_literal(std::string_view s) {
  if (s.substr(0, 6) == "0 + O(") {
    s.remove_prefix(6);
    auto [base, A] = read_power(s, ')');
    expect(s, ")");
    if (!s.empty()) throw Error(ErrorCode::ParseError, "trailing characters");
    return PadicNumber::zero_to_precision(Prime(base), A);
  }
  auto [base, v] = read_power(s, '*');
  const Prime p(base);
  expect(s, "*(");
  const auto close = s.find(')');
  if (close == std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "unterminated digit list");
  }
  std::string_view list = s.substr(0, close);
  s.remove_prefix(close);
  std::vector<long> digits;
  while (true) {
    const auto comma = list.find(',');
    const long d = parse_long(list.substr(0, comma), "digit");
    if (d < 0 || static_cast<unsigned long>(d) >= p.value()) {
      throw Error(ErrorCode::ParseError, "digit out of range");
    }
    digits.push_back(d);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  expect(s, ")+O(");
  auto [base2, A] = read_power(s, ')');
  expect(s, ")");
  if (!s.empty()) throw Error(ErrorCode::ParseError, "trailing characters");
  if (base2 != base || A - v != static_cast<long>(digits.size())) {
    throw Error(ErrorCode::ParseError, "inconsistent precision in literal");
  }
  mpz_class unit = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    unit = unit * p.value() + *it;
  }
  if (digits.front() == 0) {
    throw Error(ErrorCode::ParseError, "leading digit must be nonzero");
  }
  return PadicNumber::from_parts(p, v, unit, static_cast<long>(digits.size()));
}

mpq_class parse_rational(std::string_view text) {
  auto is_integer = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
      s.remove_prefix(1);
    }
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c)) != 0;
    });
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer(num, true) || !is_integer(den, false)) {
    throw Error(ErrorCode::ParseError,
                "expected a rational a/b, got '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class a(std::string(num), 10);
  mpz_class b(std::string(den), 10);
  if (b == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  mpq_class q(a, b);
  q.canonicalize();
  return q;
}

}  // namespace padw
