#include "padw/series.hpp"

#include <algorithm>

namespace padw {

namespace {

bool is_one_unit_shift(const ExtendedValuation& t) {
  return t >= ExtendedValuation(1);
}

[[noreturn]] void throw_divergent(const Prime& p, const std::string& what) {
  throw Error(ErrorCode::DivergentInput,
              what + " outside the convergence disk for p=" +
                  std::to_string(p.value()));
}

PadicNumber one(const Prime& p, long N) {
  return from_rational(mpz_class(1), mpz_class(1), p, std::max(N, 1L));
}

// The constant term of the rule as a value known modulo p^A.
PadicNumber constant_term(const CoefficientRule& rule, const Prime& p,
                          long A) {
  if (rule.family() == SeriesFamily::Exp) return one(p, A);
  return PadicNumber::zero(p);
}

}  // namespace

mpq_class convergence_exponent(const Prime& p) {
  return mpq_class(1, p.value() - 1);
}

mpq_class w_coefficient(unsigned long n) {
  if (n == 0) return 0;
  mpz_class num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), n, n - 1);
  if ((n - 1) % 2 == 1) num = -num;
  mpz_fac_ui(den.get_mpz_t(), n);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class CoefficientRule::coefficient(unsigned long n) const {
  switch (family_) {
    case SeriesFamily::LambertW: return w_coefficient(n);
    case SeriesFamily::Exp: {
      mpz_class f;
      mpz_fac_ui(f.get_mpz_t(), n);
      return mpq_class(mpz_class(1), f);
    }
    case SeriesFamily::Log: {
      if (n == 0) return 0;
      mpq_class q(n % 2 == 1 ? 1 : -1, n);
      q.canonicalize();
      return q;
    }
  }
  return 0;
}

bool CoefficientRule::converges_at(const ExtendedValuation& t,
                                   const Prime& p) const {
  if (family_ == SeriesFamily::Log) return is_one_unit_shift(t);
  return t > ExtendedValuation(convergence_exponent(p));
}

unsigned long CoefficientRule::truncation_index(const mpq_class& t,
                                                const mpq_class& target,
                                                const Prime& p) const {
  if (family_ != SeriesFamily::Log) return padw::truncation_index(t, target, p);
  if (!is_one_unit_shift(ExtendedValuation(t))) {
    throw_divergent(p, "log_p argument");
  }
  // ord(t^n / n) >= n t - floor(log_p n), which is nondecreasing for t >= 1.
  auto bound = [&](unsigned long n) {
    unsigned long k = 0;
    for (unsigned long q = n / p.value(); q != 0; q /= p.value()) ++k;
    return mpq_class(n * t - k);
  };
  unsigned long M = 1;
  while (bound(M + 1) < target) ++M;
  return M;
}

ExtendedValuation w_term_valuation(unsigned long n, const ExtendedValuation& t,
                                   const Prime& p) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "term index must be >= 1");
  if (t.is_infinite()) return t;
  const mpz_class nz = n;
  mpq_class v = nz * t.rational();
  v += mpz_class((n - 1) * ord_p(nz, p));
  v -= ord_factorial(nz, p);
  return ExtendedValuation(v);
}

mpq_class w_term_lower_bound(unsigned long n, const mpq_class& t,
                             const Prime& p) {
  const mpq_class rho = convergence_exponent(p);
  if (t <= rho) throw_divergent(p, "valuation " + t.get_str());
  mpq_class b = mpz_class(n) * (t - rho) + rho;
  b.canonicalize();
  return b;
}

unsigned long truncation_index(const mpq_class& t, const mpq_class& target,
                               const Prime& p) {
  const mpq_class rho = convergence_exponent(p);
  if (t <= rho) throw_divergent(p, "valuation " + t.get_str());
  const mpz_class M = padw::ceil(mpq_class((target - rho) / (t - rho)));
  if (M < 1) return 1;
  if (!M.fits_ulong_p()) {
    throw Error(ErrorCode::InvalidArgument, "truncation index overflows");
  }
  return M.get_ui();
}

PadicNumber eval_series(const CoefficientRule& rule, const PadicNumber& x,
                        long A) {
  if (A < 1) throw Error(ErrorCode::InvalidArgument, "precision must be >= 1");
  const Prime& p = x.prime();
  if (x.is_exact_zero()) return constant_term(rule, p, A);

  const long target = std::min(A, x.absolute_precision());
  if (x.is_zero_to_precision()) {
    if (!rule.converges_at(ExtendedValuation(x.absolute_precision()), p)) {
      throw_divergent(p, "input O(p^" + std::to_string(x.absolute_precision()) +
                             ")");
    }
    return add(constant_term(rule, p, target),
               PadicNumber::zero_to_precision(p, target));
  }

  const ExtendedValuation t = valuation(x);
  if (!rule.converges_at(t, p)) {
    throw_divergent(p, "input of valuation " + t.to_string());
  }
  const unsigned long M = rule.truncation_index(t.rational(), A, p);
  const long working = A + kGuardDigits;

  PadicNumber acc = from_rational(rule.coefficient(M), p, working);
  for (unsigned long n = M; n-- > 0;) {
    acc = mul(x, acc);
    const mpq_class b = rule.coefficient(n);
    if (b != 0) {
      acc = add(from_rational(b, p, working), acc, Cancellation::KeepZero);
    }
  }
  const PadicNumber result = acc.cap_absolute(A);
  if (result.absolute_precision() < target) {
    throw Error(ErrorCode::PrecisionExhausted,
                "series evaluation lost precision below p^" +
                    std::to_string(target));
  }
  return result;
}

PadicNumber exp_p(const PadicNumber& x, long A) {
  return eval_series(CoefficientRule(SeriesFamily::Exp), x, A);
}

PadicNumber log_p(const PadicNumber& u, long A) {
  if (!u.is_nonzero()) throw_divergent(u.prime(), "log_p of zero");
  const PadicNumber t = sub(u, one(u.prime(), u.relative_precision()),
                            Cancellation::KeepZero);
  if (t.is_nonzero() && t.v() < 1) throw_divergent(u.prime(), "log_p argument");
  return eval_series(CoefficientRule(SeriesFamily::Log), t, A);
}

PadicNumber lambert_w_series(const PadicNumber& x, long A) {
  return eval_series(CoefficientRule(SeriesFamily::LambertW), x, A);
}

PadicNumber lambert_w_newton(const PadicNumber& x, long A) {
  if (A < 1) throw Error(ErrorCode::InvalidArgument, "precision must be >= 1");
  const Prime& p = x.prime();
  const CoefficientRule rule(SeriesFamily::LambertW);
  if (x.is_exact_zero()) return x;
  if (x.is_zero_to_precision()) return lambert_w_series(x, A);
  if (!rule.converges_at(valuation(x), p)) {
    throw_divergent(p, "input of valuation " + std::to_string(x.v()));
  }

  const long working = A + kGuardDigits;
  const PadicNumber unit_one = one(p, working);
  PadicNumber w = x.cap_absolute(working);
  long previous = std::numeric_limits<long>::min();
  while (true) {
    // One exp_p per step serves both the residual and the derivative.
    const PadicNumber e = exp_p(w, working);
    const PadicNumber residual = sub(mul(w, e), x, Cancellation::KeepZero);
    if (!residual.is_nonzero()) {
      if (residual.absolute_precision() < A &&
          x.absolute_precision() >= A) {
        throw Error(ErrorCode::NoConvergence,
                    "residual lost precision during Newton iteration");
      }
      break;
    }
    const long rv = residual.v();
    if (rv >= A) break;
    if (rv <= previous) {
      throw Error(ErrorCode::NoConvergence,
                  "Newton residual valuation stalled at " + std::to_string(rv));
    }
    previous = rv;
    const PadicNumber derivative = mul(add(unit_one, w), e);
    w = sub(w, div(residual, derivative)).cap_absolute(working);
  }
  return w.cap_absolute(A);
}

IdentityCheck verify_defining_identity(const PadicNumber& x, long A) {
  const PadicNumber w = lambert_w_series(x, A);
  const PadicNumber residual =
      sub(mul(w, exp_p(w, A)), x, Cancellation::KeepZero);
  IdentityCheck out;
  if (residual.is_nonzero()) {
    out.holds = residual.v() >= A;
    out.residual_valuation = valuation(residual);
    return out;
  }
  if (residual.absolute_precision() < A) {
    throw Error(ErrorCode::PrecisionExhausted,
                "residual not determined modulo p^" + std::to_string(A));
  }
  out.holds = true;
  return out;
}

BoundaryScan boundary_divergence_scan(const Prime& p, unsigned long n_max) {
  if (n_max < p.value()) {
    throw Error(ErrorCode::InvalidArgument, "boundary scan needs n_max >= p");
  }
  const ExtendedValuation boundary(convergence_exponent(p));
  const ExtendedValuation plateau(mpq_class(2, p.value() - 1));
  BoundaryScan scan;
  scan.rows.reserve(n_max);
  for (unsigned long n = 1; n <= n_max; ++n) {
    scan.rows.push_back({n, w_term_valuation(n, boundary, p)});
  }
  for (unsigned long q = p.value(); q + 1 <= n_max; q *= p.value()) {
    if (scan.rows[q].term_valuation == plateau) scan.non_decaying.push_back(q + 1);
    if (q > n_max / p.value()) break;
  }
  return scan;
}

}  // namespace padw
