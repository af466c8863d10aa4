#include "padw/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "padw/analysis.hpp"
#include "padw/padic.hpp"
#include "padw/report.hpp"
#include "padw/series.hpp"

namespace padw::cli {

namespace {

constexpr long kMaxPrecision = 4096;

struct Range {
  unsigned long first = 0;
  unsigned long last = 0;
};

Range parse_range(const std::string& text) {
  auto number = [&](std::string_view s) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) {
          return c >= '0' && c <= '9';
        })) {
      throw Error(ErrorCode::ParseError, "bad range '" + text + "'");
    }
    return std::stoul(std::string(s));
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const unsigned long v = number(text);
    return {v, v};
  }
  Range r{number(std::string_view(text).substr(0, dots)),
          number(std::string_view(text).substr(dots + 2))};
  if (r.first > r.last) throw Error(ErrorCode::ParseError, "empty range '" + text + "'");
  return r;
}

Prime parse_prime(long p) {
  try {
    return Prime(p);
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

long default_precision() {
  const char* env = std::getenv("PADW_DEFAULT_PREC");
  if (env == nullptr) return kDefaultPrecision;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*env == '\0' || *end != '\0') {
    throw Error(ErrorCode::ParseError,
                std::string("PADW_DEFAULT_PREC is not an integer: ") + env);
  }
  return v;
}

void check_precision(long prec) {
  if (prec < 1 || prec > kMaxPrecision) {
    throw Error(ErrorCode::ParseError, "precision must be in [1, 4096]");
  }
}

struct EvalArgs {
  std::string func;
  std::string input;
  long prime = 0;
  long prec = 0;
  std::string method = "series";
};

PadicNumber evaluate(const std::string& func, const PadicNumber& x, long prec,
                     bool newton) {
  if (func == "exp") return exp_p(x, prec);
  if (func == "log") return log_p(x, prec);
  return newton ? lambert_w_newton(x, prec) : lambert_w_series(x, prec);
}

void cmd_eval(const EvalArgs& a, std::ostream& out) {
  check_precision(a.prec);
  const Prime p = parse_prime(a.prime);
  if (a.method != "series" && a.func != "W") {
    throw Error(ErrorCode::ParseError, "--method applies only to --func W");
  }
  const PadicNumber x = from_rational(parse_rational(a.input), p, a.prec);
  if (a.method != "both") {
    out << to_literal(evaluate(a.func, x, a.prec, a.method == "newton"), a.prec)
        << '\n';
    return;
  }
  const PadicNumber s = evaluate(a.func, x, a.prec, false);
  const PadicNumber n = evaluate(a.func, x, a.prec, true);
  out << "series: " << to_literal(s, a.prec) << '\n'
      << "newton: " << to_literal(n, a.prec) << '\n';
  const PadicNumber d = sub(s, n, Cancellation::KeepZero);
  if (d.is_nonzero() && d.v() < a.prec) {
    out << "verdict: MISMATCH at digit " << d.v() << '\n';
  } else {
    out << "verdict: MATCH\n";
  }
}

struct GrowthArgs {
  long prime = 0;
  std::string t;
  unsigned long n_scan = 0;
  std::string format = "table";
};

void cmd_growth(const GrowthArgs& a, std::ostream& out) {
  const Prime p = parse_prime(a.prime);
  const GrowthModulusReport r = growth_modulus(parse_rational(a.t), p, a.n_scan);
  if (a.format == "records") {
    out << growth_record(r) << '\n';
  } else {
    out << growth_table(r, p.value());
  }
}

struct CrArgs {
  long prime = 0;
  unsigned long nu = 1;
  std::string k = "1";
  std::string alpha;
  std::string format = "table";
};

void cmd_cr(const CrArgs& a, std::ostream& out) {
  const Prime p = parse_prime(a.prime);
  const Range range = parse_range(a.alpha);
  std::vector<unsigned long> alphas;
  for (unsigned long x = range.first; x <= range.last; ++x) alphas.push_back(x);
  const mpq_class kq = parse_rational(a.k);
  if (kq.get_den() != 1) throw Error(ErrorCode::ParseError, "--k must be an integer");
  const CrWitnessReport report =
      cr_witness_report(a.nu, p, mpz_class(kq.get_num()), alphas);
  if (a.format == "records") {
    for (const auto& row : report.rows) out << cr_record(row) << '\n';
  } else {
    out << cr_table(report);
  }
}

void cmd_legendre(long prime, const std::string& n_text, std::ostream& out) {
  const Prime p = parse_prime(prime);
  const Range range = parse_range(n_text);
  if (range.first < 1) throw Error(ErrorCode::ParseError, "--n must be >= 1");
  out << "n S_n ord_p(n!)\n";
  for (unsigned long n = range.first; n <= range.last; ++n) {
    out << n << ' ' << digit_sum(n, p) << ' ' << ord_factorial(n, p) << '\n';
  }
}

void cmd_boundary(long prime, unsigned long n_max, std::ostream& out) {
  const Prime p = parse_prime(prime);
  const BoundaryScan scan = boundary_divergence_scan(p, n_max);
  out << "n term_ord\n";
  for (const auto& row : scan.rows) {
    out << row.n << ' ' << row.term_valuation << '\n';
  }
  mpq_class plateau(2, p.value() - 1);
  plateau.canonicalize();
  out << "non-decaying (ord = " << plateau << "):";
  for (unsigned long n : scan.non_decaying) out << ' ' << n;
  out << '\n';
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return kParseError;
    case ErrorCode::NoConvergence: return kInternalError;
    default: return kDomainError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact p-adic Lambert W evaluation and analysis", "padw"};
  app.require_subcommand(1);

  long prec = 0;
  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate W_p, exp_p or log_p");
  eval->add_option("--func", eval_args.func)
      ->required()
      ->check(CLI::IsMember({"W", "exp", "log"}));
  eval->add_option("--input", eval_args.input, "Rational a/b")->required();
  eval->add_option("--prime", eval_args.prime)->required();
  eval->add_option("--prec", prec, "Absolute precision in digits");
  eval->add_option("--method", eval_args.method)
      ->check(CLI::IsMember({"series", "newton", "both"}));

  GrowthArgs growth_args;
  auto* growth = app.add_subcommand("growth", "Growth modulus at r = p^(-t)");
  growth->add_option("--prime", growth_args.prime)->required();
  growth->add_option("--t", growth_args.t, "Radius exponent (rational)")->required();
  growth->add_option("--n-scan", growth_args.n_scan, "Minimum scan length");
  growth->add_option("--format", growth_args.format)
      ->check(CLI::IsMember({"table", "records"}));

  CrArgs cr_args;
  auto* cr = app.add_subcommand("cr", "Christol-Robba witness rows");
  cr->add_option("--prime", cr_args.prime)->required();
  cr->add_option("--nu", cr_args.nu)->required();
  cr->add_option("--k", cr_args.k);
  cr->add_option("--alpha", cr_args.alpha, "alpha or a..b")->required();
  cr->add_option("--format", cr_args.format)
      ->check(CLI::IsMember({"table", "records"}));

  long legendre_prime = 0;
  std::string legendre_n;
  auto* legendre = app.add_subcommand("legendre", "Digit sums and ord_p(n!)");
  legendre->add_option("--prime", legendre_prime)->required();
  legendre->add_option("--n", legendre_n, "n or a..b")->required();

  long boundary_prime = 0;
  unsigned long n_max = 0;
  auto* boundary = app.add_subcommand("boundary", "Term valuations on |x|_p = r_p");
  boundary->add_option("--prime", boundary_prime)->required();
  boundary->add_option("--n-max", n_max)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "PARSE_ERROR: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (*eval) {
      eval_args.prec = eval->count("--prec") != 0 ? prec : default_precision();
      cmd_eval(eval_args, out);
    } else if (*growth) {
      cmd_growth(growth_args, out);
    } else if (*cr) {
      cmd_cr(cr_args, out);
    } else if (*legendre) {
      cmd_legendre(legendre_prime, legendre_n, out);
    } else if (*boundary) {
      cmd_boundary(boundary_prime, n_max, out);
    }
  } catch (const Error& e) {
    err << error_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "INTERNAL: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace padw::cli
