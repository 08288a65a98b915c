#include <sstream>

#include "doctest.h"
#include "sqtile/report.hpp"

using namespace sqtile;

TEST_CASE("fixed decimals from exact ratios") {
  CHECK(decimal_fixed({1, 4}) == "0.250000000000");
  CHECK(decimal_fixed({0, 1}) == "0.000000000000");
  CHECK(decimal_fixed({1, 1}) == "1.000000000000");
  CHECK(decimal_fixed({1, 3}) == "0.333333333333");
  CHECK(decimal_fixed({2, 3}) == "0.666666666667");
  CHECK(decimal_fixed({-2, 3}) == "-0.666666666667");
  CHECK(decimal_fixed({1, 8}, 2) == "0.13");  // half rounds away from zero
  CHECK(decimal_fixed({7, 2}, 0) == "4");
  CHECK_THROWS(decimal_fixed({1, 0}));
}

namespace {

std::vector<CensusRow> rows_4_5() {
  const FormulaTables t(5);
  return {t.row(4, ConvCoefficient::Sigma2Inverse), t.row(5, ConvCoefficient::Sigma2Inverse)};
}

}  // namespace

TEST_CASE("census rows carry reduced ratios") {
  const auto r = rows_4_5();
  CHECK(r[0].rb == Rational{3, 4});
  CHECK(r[0].rc == Rational{1, 4});
  CHECK(r[1].ra == Rational{5, 24});
  CHECK(r[1].rd == Rational{1, 12});
}

TEST_CASE("csv writers") {
  std::ostringstream t, d;
  write_table_csv(t, rows_4_5());
  CHECK(t.str() == "n,A,B,C,D,E\n4,0,3,1,0,4\n5,5,11,6,2,24\n");
  write_densities_csv(d, rows_4_5());
  CHECK(d.str() ==
        "n,rA,rB,rC,rD\n"
        "4,0.000000000000,0.750000000000,0.250000000000,0.000000000000\n"
        "5,0.208333333333,0.458333333333,0.250000000000,0.083333333333\n");
}

TEST_CASE("json lines writers") {
  std::ostringstream t, d;
  write_table_jsonl(t, rows_4_5());
  std::istringstream lines(t.str());
  std::string first;
  std::getline(lines, first);
  const auto j = nlohmann::json::parse(first);
  CHECK(j["n"] == 4);
  CHECK(j["B"] == 3);
  CHECK(j["rC"] == nlohmann::json::array({1, 4}));
  CHECK(t.str().back() == '\n');

  write_densities_jsonl(d, rows_4_5());
  CHECK(d.str().substr(0, d.str().find('\n')) ==
        R"({"n":4,"rA":"0.000000000000","rB":"0.750000000000","rC":"0.250000000000","rD":"0.000000000000"})");
}

TEST_CASE("permutation sweep summary") {
  BruteForceCensus c;
  c.n = 4;
  c.h11 = {0, 3, 1, 0};
  c.f = 4;
  c.g = 5;
  const auto j = bruteforce_json(c);
  CHECK(j["H11"]["B"] == 3);
  CHECK(j["H2"]["G"] == 5);
  CHECK(j.dump().find("\"n\":4") != std::string::npos);
}
