#include "padw/report.hpp"

#include <array>
#include <map>
#include <sstream>

#include "padw/error.hpp"

namespace padw {

namespace {

constexpr std::array<std::string_view, 11> kCrKeys = {
    "nu",           "p_nu",         "alpha",
    "k",            "n",            "s_n",
    "diff_ord_num", "diff_ord_den", "predicted_ord_num",
    "predicted_ord_den", "bracket_unit"};

constexpr std::array<std::string_view, 8> kGrowthKeys = {
    "t_num",     "t_den",      "value_ord_num", "value_ord_den",
    "argmax",    "scan_bound", "tail_ord_num",  "tail_ord_den"};

template <std::size_t K>
std::map<std::string, std::string, std::less<>> split_record(
    std::string_view line, const std::array<std::string_view, K>& keys) {
  std::map<std::string, std::string, std::less<>> fields;
  std::size_t expected = 0;
  while (!line.empty()) {
    const auto space = line.find(' ');
    const std::string_view pair = line.substr(0, space);
    const auto eq = pair.find('=');
    if (eq == std::string_view::npos || expected >= K ||
        pair.substr(0, eq) != keys[expected]) {
      throw Error(ErrorCode::ParseError,
                  "unexpected field '" + std::string(pair) + "'");
    }
    fields.emplace(std::string(pair.substr(0, eq)),
                   std::string(pair.substr(eq + 1)));
    ++expected;
    if (space == std::string_view::npos) break;
    line.remove_prefix(space + 1);
  }
  if (expected != K) throw Error(ErrorCode::ParseError, "record is missing fields");
  return fields;
}

mpz_class to_mpz(const std::string& s) {
  mpz_class z;
  if (s.empty() || z.set_str(s, 10) != 0) {
    throw Error(ErrorCode::ParseError, "bad integer '" + s + "'");
  }
  return z;
}

unsigned long to_ulong(const std::string& s) {
  const mpz_class z = to_mpz(s);
  if (z < 0 || !z.fits_ulong_p()) {
    throw Error(ErrorCode::ParseError, "out of range '" + s + "'");
  }
  return z.get_ui();
}

mpq_class to_mpq(const std::string& num, const std::string& den) {
  const mpz_class d = to_mpz(den);
  if (d <= 0) throw Error(ErrorCode::ParseError, "denominator must be positive");
  mpq_class q(to_mpz(num), d);
  q.canonicalize();
  return q;
}

std::string join(const std::vector<unsigned long>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace

std::string cr_record(const CrWitnessRow& row) {
  std::ostringstream os;
  os << "nu=" << row.nu << " p_nu=" << row.p_nu << " alpha=" << row.alpha
     << " k=" << row.k << " n=" << row.n << " s_n=" << row.s_n
     << " diff_ord_num=" << row.diff_ord.get_num()
     << " diff_ord_den=" << row.diff_ord.get_den()
     << " predicted_ord_num=" << row.predicted_ord.get_num()
     << " predicted_ord_den=" << row.predicted_ord.get_den()
     << " bracket_unit=" << (row.bracket_unit ? 1 : 0);
  return os.str();
}

CrWitnessRow parse_cr_record(std::string_view line) {
  auto f = split_record(line, kCrKeys);
  CrWitnessRow row;
  row.nu = to_ulong(f["nu"]);
  row.p_nu = to_mpz(f["p_nu"]);
  row.alpha = to_ulong(f["alpha"]);
  row.k = to_mpz(f["k"]);
  row.n = to_mpz(f["n"]);
  row.s_n = to_mpz(f["s_n"]);
  row.diff_ord = to_mpq(f["diff_ord_num"], f["diff_ord_den"]);
  row.predicted_ord = to_mpq(f["predicted_ord_num"], f["predicted_ord_den"]);
  const std::string& unit = f["bracket_unit"];
  if (unit != "0" && unit != "1") {
    throw Error(ErrorCode::ParseError, "bracket_unit must be 0 or 1");
  }
  row.bracket_unit = unit == "1";
  return row;
}

std::string cr_table(const CrWitnessReport& report) {
  std::ostringstream os;
  os << "nu p_nu alpha k n s_n diff_ord predicted_ord bracket_ord bracket_unit\n";
  for (const auto& row : report.rows) {
    os << row.nu << ' ' << row.p_nu << ' ' << row.alpha << ' ' << row.k << ' '
       << row.n << ' ' << row.s_n << ' ' << row.diff_ord << ' '
       << row.predicted_ord << ' ' << row.bracket_ord << ' '
       << (row.bracket_unit ? "yes" : "no") << '\n';
  }
  os << "lower bound: |a_{n+p_nu} - a_n|_p >= " << report.prime << "^(-"
     << report.max_diff_ord << ") on all rows\n";
  return os.str();
}

std::string growth_record(const GrowthModulusReport& r) {
  std::ostringstream os;
  os << "t_num=" << r.t.get_num() << " t_den=" << r.t.get_den()
     << " value_ord_num=" << r.value_exponent.get_num()
     << " value_ord_den=" << r.value_exponent.get_den()
     << " argmax=" << join(r.argmax) << " scan_bound=" << r.scan_bound
     << " tail_ord_num=" << r.tail_bound.get_num()
     << " tail_ord_den=" << r.tail_bound.get_den();
  return os.str();
}

GrowthModulusReport parse_growth_record(std::string_view line) {
  auto f = split_record(line, kGrowthKeys);
  GrowthModulusReport r;
  r.t = to_mpq(f["t_num"], f["t_den"]);
  r.value_exponent = to_mpq(f["value_ord_num"], f["value_ord_den"]);
  std::string_view list = f["argmax"];
  while (true) {
    const auto comma = list.find(',');
    r.argmax.push_back(to_ulong(std::string(list.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  r.scan_bound = to_ulong(f["scan_bound"]);
  r.tail_bound = to_mpq(f["tail_ord_num"], f["tail_ord_den"]);
  return r;
}

std::string growth_table(const GrowthModulusReport& r, unsigned long p) {
  std::ostringstream os;
  os << "p: " << p << '\n'
     << "t: " << r.t << '\n'
     << "value exponent: " << r.value_exponent << '\n'
     << "argmax: {" << join(r.argmax) << "}\n"
     << "scan bound: " << r.scan_bound << '\n'
     << "tail bound (n > " << r.scan_bound << "): " << r.tail_bound << '\n';
  return os.str();
}

}  // namespace padw
