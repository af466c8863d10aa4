#include "padw/analysis.hpp"

#include <algorithm>
#include <future>

#include "padw/error.hpp"
#include "padw/series.hpp"

namespace padw {

namespace {

unsigned long to_ulong(const mpz_class& n, const char* what) {
  if (n < 0 || !n.fits_ulong_p()) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " out of range");
  }
  return n.get_ui();
}

void require_positive(const mpz_class& n, const char* what) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be >= 1");
}

void require_nu(unsigned long nu) {
  if (nu < 1) throw Error(ErrorCode::InvalidArgument, "nu must be >= 1");
}

// Term n of the Lambert series has valuation n t + offset(n).
mpq_class term_offset(unsigned long n, const Prime& p) {
  const mpz_class nz = n;
  return mpq_class(mpz_class((n - 1) * ord_p(nz, p)) - ord_factorial(nz, p));
}

CrWitnessRow witness_row(unsigned long nu, const Prime& p, const mpz_class& k,
                         unsigned long alpha) {
  CrWitnessRow row;
  row.nu = nu;
  row.p_nu = p_nu(nu, p);
  row.alpha = alpha;
  row.k = k;
  row.n = p.pow(alpha) * k + 1;
  row.s_n = digit_sum(row.n, p);
  row.observations = cr_observations(row.n, nu, p);
  const CrBracket bracket = cr_bracket(row.n, nu, p);
  row.bracket_ord = bracket.ord_bracket;
  row.bracket_unit = bracket.ord_bracket_minus_one == 0;
  row.diff_ord = rescaled_coefficient_valuation(row.n, p) +
                 bracket.ord_bracket_minus_one;
  row.diff_ord.canonicalize();
  row.predicted_ord = mpq_class(row.s_n, p.value() - 1);
  row.predicted_ord.canonicalize();
  return row;
}

}  // namespace

mpz_class p_nu(unsigned long nu, const Prime& p) {
  require_nu(nu);
  const mpz_class q = p.pow(nu);
  return q * (q - 1);
}

DigitSumIdentity digit_sum_p_nu_identity(unsigned long nu, const Prime& p) {
  DigitSumIdentity out;
  out.digit_sum = digit_sum(p_nu(nu, p), p);
  out.expected = mpz_class(nu) * (p.value() - 1);
  out.equal = out.digit_sum == out.expected;
  return out;
}

mpq_class rescaled_coefficient_valuation(const mpz_class& n, const Prime& p) {
  require_positive(n, "n");
  mpq_class v(digit_sum(n, p), p.value() - 1);
  v.canonicalize();
  v += mpz_class(n - 1) * ord_p(n, p);
  return v;
}

CrObservations cr_observations(const mpz_class& n, unsigned long nu,
                               const Prime& p) {
  require_positive(n, "n");
  const mpz_class shift = p_nu(nu, p);
  const mpz_class shifted = n + shift;
  CrObservations out;
  out.ord_n = ord_p(n, p);
  out.ord_shifted = ord_p(shifted, p);
  out.digit_defect =
      digit_sum(shifted, p) - digit_sum(n, p) - digit_sum(shift, p);
  return out;
}

CrBracket cr_bracket(const mpz_class& n, unsigned long nu, const Prime& p) {
  require_positive(n, "n");
  const mpz_class shift_z = p_nu(nu, p);
  const unsigned long shift = to_ulong(shift_z, "p_nu");
  if (shift % (p.value() - 1) != 0) {
    throw Error(ErrorCode::InvalidArgument,
                "p_nu/(p-1) is not an integer; pi^(p_nu) is not in Q_p");
  }
  const unsigned long pi_power = shift / (p.value() - 1);
  const unsigned long n_ul = to_ulong(n, "n");
  const mpz_class m = n + shift_z;

  // ((n+p_nu)/n)^(n-1) (n+p_nu)^(p_nu) = (n+p_nu)^(n-1+p_nu) / n^(n-1).
  CrBracket out;
  mpz_pow_ui(out.numerator.get_mpz_t(), m.get_mpz_t(), n_ul - 1 + shift);
  out.numerator *= p.pow(pi_power);
  if (shift % 2 == 1) out.numerator = -out.numerator;

  mpz_pow_ui(out.denominator.get_mpz_t(), n.get_mpz_t(), n_ul - 1);
  // n!/(n+p_nu)! = 1 / prod_{j=1..p_nu} (n+j)
  mpz_class rising = 1;
  for (unsigned long j = 1; j <= shift; ++j) rising *= n + j;
  out.denominator *= rising;

  const long ord_den = static_cast<long>(ord_p(out.denominator, p));
  out.ord_bracket = static_cast<long>(ord_p(out.numerator, p)) - ord_den;
  const mpz_class diff = out.numerator - out.denominator;
  if (diff == 0) {
    throw Error(ErrorCode::InvalidArgument, "bracket equals 1 exactly");
  }
  out.ord_bracket_minus_one = static_cast<long>(ord_p(diff, p)) - ord_den;
  return out;
}

mpq_class cr_difference_valuation(const mpz_class& n, unsigned long nu,
                                  const Prime& p) {
  require_positive(n, "n");
  if (mpz_divisible_ui_p(n.get_mpz_t(), p.value()) != 0) {
    throw Error(ErrorCode::InvalidArgument, "n must be coprime to p");
  }
  mpq_class v = rescaled_coefficient_valuation(n, p) +
                cr_bracket(n, nu, p).ord_bracket_minus_one;
  v.canonicalize();
  return v;
}

CrWitnessReport cr_witness_report(unsigned long nu, const Prime& p,
                                  const mpz_class& k,
                                  const std::vector<unsigned long>& alphas) {
  require_nu(nu);
  if (k < 1) throw Error(ErrorCode::InvalidWitness, "k must be >= 1");
  if (alphas.empty()) throw Error(ErrorCode::InvalidWitness, "no alpha given");
  for (unsigned long alpha : alphas) {
    if (alpha <= 2 * nu) {
      throw Error(ErrorCode::InvalidWitness,
                  "alpha=" + std::to_string(alpha) + " must exceed 2*nu=" +
                      std::to_string(2 * nu));
    }
  }

  std::vector<std::future<CrWitnessRow>> pending;
  pending.reserve(alphas.size());
  for (unsigned long alpha : alphas) {
    pending.push_back(std::async(std::launch::async, witness_row, nu, p, k, alpha));
  }
  CrWitnessReport report;
  report.prime = p.value();
  for (auto& f : pending) report.rows.push_back(f.get());
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const CrWitnessRow& a, const CrWitnessRow& b) {
                     return a.alpha < b.alpha;
                   });
  report.max_diff_ord = report.rows.front().diff_ord;
  for (const auto& row : report.rows) {
    report.max_diff_ord = std::max(report.max_diff_ord, row.diff_ord);
  }
  return report;
}

bool cr_condition_violated(const CrWitnessReport& report,
                           const mpq_class& eps_ord) {
  if (report.rows.empty()) return false;
  const auto last = std::max_element(
      report.rows.begin(), report.rows.end(),
      [](const CrWitnessRow& a, const CrWitnessRow& b) { return a.n < b.n; });
  // |a_{n+p_nu} - a_n|_p >= eps  <=>  diff_ord <= eps_ord
  return last->diff_ord <= eps_ord;
}

GrowthModulusReport growth_modulus(const mpq_class& t, const Prime& p,
                                   unsigned long min_scan) {
  if (t <= convergence_exponent(p)) {
    throw Error(ErrorCode::DivergentRadius,
                "radius exponent " + t.get_str() + " is not > 1/(p-1)");
  }
  GrowthModulusReport report;
  report.t = t;
  report.scan_bound =
      std::max(truncation_index(t, mpq_class(t + 1), p), min_scan);

  const ExtendedValuation tv(t);
  for (unsigned long n = 1; n <= report.scan_bound; ++n) {
    const mpq_class v = w_term_valuation(n, tv, p).rational();
    if (n == 1 || v < report.value_exponent) {
      report.value_exponent = v;
      report.argmax.assign(1, n);
    } else if (v == report.value_exponent) {
      report.argmax.push_back(n);
    }
  }
  report.tail_bound = w_term_lower_bound(report.scan_bound + 1, t, p);
  if (report.tail_bound <= report.value_exponent) {
    throw Error(ErrorCode::NoConvergence, "tail bound does not certify the scan");
  }
  return report;
}

mpq_class critical_tie_exponent(unsigned long n, const Prime& p) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "tie index must be >= 2");
  // n t + offset(n) = t  <=>  t = -offset(n)/(n-1)
  mpq_class tie = -term_offset(n, p) / mpq_class(n - 1);
  tie.canonicalize();
  return tie;
}

CriticalRadiusCertificate critical_radius_scan(const Prime& p,
                                               unsigned long n_max,
                                               unsigned long pair_bound) {
  if (n_max < 2) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 2");
  const mpq_class rho = convergence_exponent(p);
  CriticalRadiusCertificate cert;
  cert.n_max = n_max;
  cert.pair_bound = std::min(pair_bound, n_max);

  std::vector<mpq_class> offset(n_max + 1);
  for (unsigned long n = 1; n <= n_max; ++n) offset[n] = term_offset(n, p);

  bool first = true;
  for (unsigned long n = 2; n <= n_max; ++n) {
    const mpq_class tie = critical_tie_exponent(n, p);
    if (first || tie > cert.max_tie_exponent) cert.max_tie_exponent = tie;
    first = false;
    if (tie > rho) cert.violations.push_back(n);
  }

  for (unsigned long n = 3; n <= cert.pair_bound; ++n) {
    for (unsigned long m = 2; m < n; ++m) {
      mpq_class tie = (offset[m] - offset[n]) / mpq_class(n - m);
      tie.canonicalize();
      if (tie <= rho) continue;
      ++cert.interior_pair_ties;
      // The shared value at the tie must sit above the n = 1 term.
      if (mpq_class(n * tie + offset[n]) <= tie) cert.pair_violations.emplace_back(n, m);
    }
  }
  return cert;
}

}  // namespace padw
