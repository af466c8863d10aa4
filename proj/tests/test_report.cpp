#include <doctest.h>

#include <random>

#include "padw/error.hpp"
#include "padw/report.hpp"

using namespace padw;

TEST_CASE("cr record field order and round trip") {
  const auto report = cr_witness_report(1, Prime(3), 1, {3});
  const std::string line = cr_record(report.rows[0]);
  CHECK(line ==
        "nu=1 p_nu=6 alpha=3 k=1 n=28 s_n=2 diff_ord_num=1 diff_ord_den=1 "
        "predicted_ord_num=1 predicted_ord_den=1 bracket_unit=1");
  CHECK(parse_cr_record(line) == report.rows[0]);
}

TEST_CASE("property: random cr records round trip") {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> small(1, 1000);
  for (int i = 0; i < 500; ++i) {
    CrWitnessRow row;
    row.nu = static_cast<unsigned long>(small(rng));
    row.p_nu = mpz_class(small(rng)) * small(rng) * small(rng);
    row.alpha = static_cast<unsigned long>(small(rng));
    row.k = small(rng);
    row.n = mpz_class(small(rng)) * small(rng) * small(rng) * small(rng);
    row.s_n = small(rng);
    row.diff_ord = mpq_class(small(rng), small(rng));
    row.diff_ord.canonicalize();
    row.predicted_ord = mpq_class(-small(rng), small(rng));
    row.predicted_ord.canonicalize();
    row.bracket_unit = small(rng) % 2 == 0;
    REQUIRE(parse_cr_record(cr_record(row)) == row);
  }
}

TEST_CASE("cr record parser rejects malformed lines") {
  const std::string good =
      "nu=1 p_nu=6 alpha=3 k=1 n=28 s_n=2 diff_ord_num=1 diff_ord_den=1 "
      "predicted_ord_num=1 predicted_ord_den=1 bracket_unit=1";
  CHECK_NOTHROW(parse_cr_record(good));
  CHECK_THROWS_AS(parse_cr_record(""), Error);
  CHECK_THROWS_AS(parse_cr_record("p_nu=6 nu=1"), Error);
  CHECK_THROWS_AS(parse_cr_record(good + " extra=1"), Error);
  std::string bad_unit = good;
  bad_unit.back() = '2';
  CHECK_THROWS_AS(parse_cr_record(bad_unit), Error);
  std::string bad_den = good;
  bad_den.replace(bad_den.find("diff_ord_den=1"), 14, "diff_ord_den=0");
  CHECK_THROWS_AS(parse_cr_record(bad_den), Error);
}

TEST_CASE("growth record round trip") {
  const auto r = growth_modulus(mpq_class(7, 2), Prime(3));
  const auto line = growth_record(r);
  const auto back = parse_growth_record(line);
  CHECK(back.t == r.t);
  CHECK(back.value_exponent == r.value_exponent);
  CHECK(back.argmax == r.argmax);
  CHECK(back.scan_bound == r.scan_bound);
  CHECK(back.tail_bound == r.tail_bound);
  CHECK(line.rfind("t_num=7 t_den=2 value_ord_num=7 value_ord_den=2 argmax=1 ", 0) == 0);
}

TEST_CASE("cr table lists one line per row plus the bound") {
  const auto report = cr_witness_report(1, Prime(3), 1, {3, 4, 5});
  const std::string table = cr_table(report);
  CHECK(table ==
        "nu p_nu alpha k n s_n diff_ord predicted_ord bracket_ord bracket_unit\n"
        "1 6 3 1 28 2 1 1 1 yes\n"
        "1 6 4 1 82 2 1 1 1 yes\n"
        "1 6 5 1 244 2 1 1 1 yes\n"
        "lower bound: |a_{n+p_nu} - a_n|_p >= 3^(-1) on all rows\n");
}
