#pragma once

// Valuation-level analysis of W_p: growth modulus, critical radii, and the
// Christol-Robba difference test for the rescaled coefficients of W_p(pi x).
//
// The rescaling element pi (a root of x^(p-1) = p) is never materialized.
// Only its valuation 1/(p-1) enters, and every power pi^(p_nu) that the
// difference test needs is an integer power of p.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "padw/integer.hpp"
#include "padw/valuation.hpp"

namespace padw {

/// p_nu = p^nu (p^nu - 1).
mpz_class p_nu(unsigned long nu, const Prime& p);

struct DigitSumIdentity {
  mpz_class digit_sum;  // S_{p_nu}
  mpz_class expected;   // nu (p - 1)
  bool equal = false;
};

DigitSumIdentity digit_sum_p_nu_identity(unsigned long nu, const Prime& p);

/// ord of a_n = b_n p^(n/(p-1)): (n-1) ord_p(n) + S_n/(p-1).
mpq_class rescaled_coefficient_valuation(const mpz_class& n, const Prime& p);

struct CrObservations {
  unsigned long ord_n = 0;         // ord_p(n)
  unsigned long ord_shifted = 0;   // ord_p(n + p_nu)
  mpz_class digit_defect;          // S_{n+p_nu} - S_n - S_{p_nu}

  bool all_zero() const { return ord_n == 0 && ord_shifted == 0 && digit_defect == 0; }
};

CrObservations cr_observations(const mpz_class& n, unsigned long nu,
                               const Prime& p);

/**
 * X = a_{n+p_nu} / a_n
 *   = (-1)^(p_nu) ((n+p_nu)/n)^(n-1) (n+p_nu)^(p_nu) p^(p_nu/(p-1))
 *     / prod_{j=1..p_nu} (n+j).
 *
 * numerator/denominator are kept unreduced; for large n they have millions
 * of digits and only their p-parts matter.
 */
struct CrBracket {
  mpz_class numerator;
  mpz_class denominator;  // positive
  long ord_bracket = 0;          // ord_p(X)
  long ord_bracket_minus_one = 0;  // ord_p(X - 1)
};

CrBracket cr_bracket(const mpz_class& n, unsigned long nu, const Prime& p);

/// ord(a_{n+p_nu} - a_n) via the bracket factorization. Requires p ∤ n.
mpq_class cr_difference_valuation(const mpz_class& n, unsigned long nu,
                                  const Prime& p);

struct CrWitnessRow {
  unsigned long nu = 0;
  mpz_class p_nu;
  unsigned long alpha = 0;
  mpz_class k;
  mpz_class n;  // p^alpha k + 1
  mpz_class s_n;
  mpq_class diff_ord;
  mpq_class predicted_ord;  // S_n/(p-1)
  bool bracket_unit = false;  // ord_p(X - 1) == 0

  // Diagnostics, not part of the record format.
  CrObservations observations;
  long bracket_ord = 0;

  friend bool operator==(const CrWitnessRow& a, const CrWitnessRow& b) {
    return a.nu == b.nu && a.p_nu == b.p_nu && a.alpha == b.alpha &&
           a.k == b.k && a.n == b.n && a.s_n == b.s_n &&
           a.diff_ord == b.diff_ord && a.predicted_ord == b.predicted_ord &&
           a.bracket_unit == b.bracket_unit;
  }
};

struct CrWitnessReport {
  unsigned long prime = 0;
  std::vector<CrWitnessRow> rows;  // sorted by alpha
  /// Largest diff_ord over the rows: every row has |a_{n+p_nu} - a_n|_p
  /// >= p^(-max_diff_ord), so the condition fails for eps below that.
  mpq_class max_diff_ord;
};

/// One row per alpha; every alpha must exceed 2 nu (else InvalidWitness).
/// Rows are computed concurrently and returned sorted by alpha.
CrWitnessReport cr_witness_report(unsigned long nu, const Prime& p,
                                  const mpz_class& k,
                                  const std::vector<unsigned long>& alphas);

/**
 * True when no N makes |a_{n+p_nu} - a_n|_p < eps for all witnessed n >= N,
 * i.e. the row with the largest n already violates the bound. eps is given
 * as its valuation: eps = p^(-eps_ord).
 */
bool cr_condition_violated(const CrWitnessReport& report,
                           const mpq_class& eps_ord);

struct GrowthModulusReport {
  mpq_class t;               // radius r = p^(-t)
  mpq_class value_exponent;  // min_n ord(b_n) + n t, i.e. M_r = p^(-value)
  std::vector<unsigned long> argmax;
  unsigned long scan_bound = 0;  // n <= scan_bound scanned exactly
  mpq_class tail_bound;          // lower bound for all n > scan_bound
};

/// Throws DivergentRadius unless t > 1/(p-1).
GrowthModulusReport growth_modulus(const mpq_class& t, const Prime& p,
                                   unsigned long min_scan = 0);

struct CriticalRadiusCertificate {
  unsigned long n_max = 0;
  unsigned long pair_bound = 0;
  /// Indices n whose tie radius with term 1 falls inside the disk; must be
  /// empty.
  std::vector<unsigned long> violations;
  /// Largest tie exponent t*(n) seen, which must be <= 1/(p-1).
  mpq_class max_tie_exponent;
  /// Pairs (n, m), 2 <= m < n <= pair_bound, tying inside the disk. Such a
  /// tie is certified to lie strictly above the n = 1 term.
  unsigned long interior_pair_ties = 0;
  std::vector<std::pair<unsigned long, unsigned long>> pair_violations;

  bool holds() const { return violations.empty() && pair_violations.empty(); }
};

/// Exponent t where term n of W_p ties with term 1:
/// t*(n) = [(n - S_n)/(p-1) - (n-1) ord_p(n)] / (n-1), n >= 2.
mpq_class critical_tie_exponent(unsigned long n, const Prime& p);

CriticalRadiusCertificate critical_radius_scan(const Prime& p,
                                               unsigned long n_max,
                                               unsigned long pair_bound = 64);

}  // namespace padw
