#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "oracles.hpp"
#include "padw/cli.hpp"
#include "padw/report.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = padw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("eval") {
  auto zero = run({"eval", "--func", "W", "--prime", "5", "--input", "0", "--prec", "8"});
  CHECK(zero.code == 0);
  CHECK(zero.out == "0 + O(5^8)\n");

  auto divergent = run({"eval", "--func", "exp", "--prime", "2", "--input", "2", "--prec", "8"});
  CHECK(divergent.code == 2);
  CHECK(divergent.err.rfind("DIVERGENT_INPUT", 0) == 0);

  auto both = run({"eval", "--func", "W", "--prime", "5", "--input", "5", "--prec", "12",
                   "--method", "both"});
  CHECK(both.code == 0);
  const auto l = lines(both.out);
  REQUIRE(l.size() == 3);
  CHECK(l[0].substr(8) == l[1].substr(8));
  CHECK(l[2] == "verdict: MATCH");
  CHECK(l[0].rfind("series: 5^1*(1,4,", 0) == 0);  // W(5) = 5 - 25 + ...
  CHECK(l[0].find("+O(5^12)") != std::string::npos);

  auto log1 = run({"eval", "--func", "log", "--prime", "3", "--input", "1", "--prec", "6"});
  CHECK(log1.out == "0 + O(3^6)\n");
  auto exp3 = run({"eval", "--func", "exp", "--prime", "3", "--input", "3", "--prec", "4"});
  CHECK(exp3.code == 0);
  CHECK(exp3.out.rfind("3^0*(1,1,", 0) == 0);  // 1 + 3 + 9/2 + ...
}

TEST_CASE("eval error paths use distinct exit codes") {
  CHECK(run({"eval", "--func", "W", "--prime", "5", "--input", "x"}).code == 3);
  CHECK(run({"eval", "--func", "W", "--prime", "6", "--input", "5"}).code == 3);
  CHECK(run({"eval", "--func", "W", "--prime", "5", "--input", "5", "--prec", "0"}).code == 3);
  CHECK(run({"eval", "--func", "W", "--prime", "5", "--input", "5", "--prec", "4097"}).code == 3);
  CHECK(run({"eval", "--func", "sin", "--prime", "5", "--input", "5"}).code == 3);
  CHECK(run({"eval", "--func", "exp", "--prime", "5", "--input", "5", "--method", "both"}).code == 3);
  CHECK(run({"frobnicate"}).code == 3);
  CHECK(run({}).code == 3);
  auto parse = run({"eval", "--func", "W", "--prime", "5", "--input", "1/0"});
  CHECK(parse.code == 3);
  CHECK(parse.err.rfind("PARSE_ERROR", 0) == 0);
}

TEST_CASE("PADW_DEFAULT_PREC overrides the default precision") {
  CHECK(run({"eval", "--func", "W", "--prime", "5", "--input", "0"}).out == "0 + O(5^32)\n");
  ::setenv("PADW_DEFAULT_PREC", "5", 1);
  CHECK(run({"eval", "--func", "W", "--prime", "5", "--input", "0"}).out == "0 + O(5^5)\n");
  CHECK(run({"eval", "--func", "W", "--prime", "5", "--input", "0", "--prec", "7"}).out ==
        "0 + O(5^7)\n");
  ::setenv("PADW_DEFAULT_PREC", "five", 1);
  CHECK(run({"eval", "--func", "W", "--prime", "5", "--input", "0"}).code == 3);
  ::unsetenv("PADW_DEFAULT_PREC");
}

TEST_CASE("growth") {
  auto a = run({"growth", "--prime", "5", "--t", "1"});
  CHECK(a.code == 0);
  CHECK(a.out.find("value exponent: 1\n") != std::string::npos);
  CHECK(a.out.find("argmax: {1}\n") != std::string::npos);

  CHECK(run({"growth", "--prime", "2", "--t", "1"}).code == 2);

  auto c = run({"growth", "--prime", "3", "--t", "7/2", "--format", "records"});
  CHECK(c.code == 0);
  const auto r = padw::parse_growth_record(lines(c.out).at(0));
  CHECK(r.value_exponent == mpq_class(7, 2));
  CHECK(r.argmax == std::vector<unsigned long>{1});
}

TEST_CASE("cr") {
  auto a = run({"cr", "--prime", "3", "--nu", "1", "--k", "1", "--alpha", "3..5"});
  CHECK(a.code == 0);
  const auto rows = lines(a.out);
  REQUIRE(rows.size() == 5);
  for (int i = 1; i <= 3; ++i) {
    CHECK(rows[static_cast<std::size_t>(i)].find(" 2 1 1 1 yes") != std::string::npos);
  }

  auto bad = run({"cr", "--prime", "3", "--nu", "1", "--alpha", "1..2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.rfind("INVALID_WITNESS", 0) == 0);

  // Frozen after checking the independent direct-difference oracle.
  REQUIRE(oracle::direct_cr_difference(33, 2, 2) == 2);
  REQUIRE(oracle::direct_cr_difference(65, 2, 2) == 2);
  auto rec = run({"cr", "--prime", "2", "--nu", "2", "--k", "1", "--alpha", "5..6",
                  "--format", "records"});
  CHECK(rec.code == 0);
  CHECK(rec.out ==
        "nu=2 p_nu=12 alpha=5 k=1 n=33 s_n=2 diff_ord_num=2 diff_ord_den=1 "
        "predicted_ord_num=2 predicted_ord_den=1 bracket_unit=1\n"
        "nu=2 p_nu=12 alpha=6 k=1 n=65 s_n=2 diff_ord_num=2 diff_ord_den=1 "
        "predicted_ord_num=2 predicted_ord_den=1 bracket_unit=1\n");
  for (const auto& line : lines(rec.out)) {
    CHECK(padw::cr_record(padw::parse_cr_record(line)) == line);
  }
  CHECK(run({"cr", "--prime", "3", "--nu", "1", "--alpha", "5..3"}).code == 3);
  CHECK(run({"cr", "--prime", "3", "--nu", "1", "--alpha", "3", "--k", "1/2"}).code == 3);
}

TEST_CASE("legendre") {
  CHECK(run({"legendre", "--prime", "2", "--n", "4"}).out == "n S_n ord_p(n!)\n4 1 3\n");
  CHECK(run({"legendre", "--prime", "7", "--n", "1"}).out == "n S_n ord_p(n!)\n1 1 0\n");
  for (long p : {2L, 3L, 5L}) {
    std::string golden = "n S_n ord_p(n!)\n";
    for (unsigned long n = 1; n <= 10; ++n) {
      golden += std::to_string(n) + ' ' + std::to_string(oracle::digit_sum(n, p)) + ' ' +
                std::to_string(oracle::ord_factorial_brute(n, p)) + '\n';
    }
    CHECK(run({"legendre", "--prime", std::to_string(p), "--n", "1..10"}).out == golden);
  }
  CHECK(run({"legendre", "--prime", "2", "--n", "0"}).code == 3);
}

TEST_CASE("boundary") {
  auto a = run({"boundary", "--prime", "3", "--n-max", "28"});
  CHECK(a.code == 0);
  const auto l = lines(a.out);
  REQUIRE(l.size() == 30);
  CHECK(l[1] == "1 1/2");
  CHECK(l[4] == "4 1");
  CHECK(l.back() == "non-decaying (ord = 1): 4 10 28");
  CHECK(run({"boundary", "--prime", "5", "--n-max", "3"}).code == 2);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> cmds = {
      {"eval", "--func", "W", "--prime", "7", "--input", "49/3", "--prec", "40", "--method", "both"},
      {"cr", "--prime", "5", "--nu", "1", "--alpha", "3..4", "--format", "records"},
      {"growth", "--prime", "2", "--t", "13/7"},
  };
  for (const auto& cmd : cmds) {
    const auto first = run(cmd);
    CHECK(first.code == 0);
    CHECK(run(cmd).out == first.out);
  }
}
