#pragma once

// Power series over Q_p: exp_p, log_p(1+t) and the Lambert series
// W_p(x) = sum_{n>=1} (-n)^(n-1)/n! x^n, with certified truncation.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "padw/padic.hpp"

namespace padw {

/// Extra relative digits carried by coefficients during series evaluation.
inline constexpr long kGuardDigits = 5;

enum class SeriesFamily { LambertW, Exp, Log };

class CoefficientRule {
 public:
  explicit CoefficientRule(SeriesFamily family) : family_(family) {}

  SeriesFamily family() const noexcept { return family_; }

  /// Exact n-th coefficient b_n in lowest terms.
  mpq_class coefficient(unsigned long n) const;

  /// Whether the series converges at an input of valuation t.
  bool converges_at(const ExtendedValuation& t, const Prime& p) const;

  /**
   * Smallest M such that every term n > M has valuation >= target when the
   * input has valuation t. Throws DivergentInput outside the disk.
   */
  unsigned long truncation_index(const mpq_class& t, const mpq_class& target,
                                 const Prime& p) const;

 private:
  SeriesFamily family_;
};

/// 1/(p-1): exp_p and W_p converge iff ord(x) exceeds this.
mpq_class convergence_exponent(const Prime& p);

/// (-n)^(n-1)/n!.
mpq_class w_coefficient(unsigned long n);

/// Exact ord of b_n x^n for ord(x) = t:
/// n t + (n-1) ord_p(n) - (n - S_n)/(p-1).
ExtendedValuation w_term_valuation(unsigned long n, const ExtendedValuation& t,
                                   const Prime& p);

/// n (t - 1/(p-1)) + 1/(p-1), a lower bound on w_term_valuation from
/// |n!|_p >= r_p^(n-1). Requires t > 1/(p-1).
mpq_class w_term_lower_bound(unsigned long n, const mpq_class& t,
                             const Prime& p);

/// max(1, ceil((target - 1/(p-1)) / (t - 1/(p-1)))).
unsigned long truncation_index(const mpq_class& t, const mpq_class& target,
                               const Prime& p);

/// sum_{n<=M} b_n x^n correct modulo p^A (Horner order, n = M down to 0).
PadicNumber eval_series(const CoefficientRule& rule, const PadicNumber& x,
                        long A);

PadicNumber exp_p(const PadicNumber& x, long A);
/// log_p of a 1-unit u with ord(u - 1) >= 1.
PadicNumber log_p(const PadicNumber& u, long A);

PadicNumber lambert_w_series(const PadicNumber& x, long A);

/// Newton iteration on w e^w = x from w_0 = x.
PadicNumber lambert_w_newton(const PadicNumber& x, long A);

struct IdentityCheck {
  bool holds = false;
  /// ord(W e^W - x) when the residual is nonzero at the working precision.
  std::optional<ExtendedValuation> residual_valuation;
};

/// Checks W e^W == x mod p^A with W = lambert_w_series(x, A).
IdentityCheck verify_defining_identity(const PadicNumber& x, long A);

struct BoundaryRow {
  unsigned long n = 0;
  ExtendedValuation term_valuation;
};

struct BoundaryScan {
  std::vector<BoundaryRow> rows;
  /// Indices n = p^j + 1 whose term valuation equals 2/(p-1).
  std::vector<unsigned long> non_decaying;
};

/// Term valuations on the boundary circle ord(x) = 1/(p-1), n = 1..n_max.
BoundaryScan boundary_divergence_scan(const Prime& p, unsigned long n_max);

}  // namespace padw
