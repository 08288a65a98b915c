#include "sqtile/report.hpp"

#include <stdexcept>

namespace sqtile {

std::string decimal_fixed(const Rational& r, int digits) {
  if (r.den <= 0) throw std::invalid_argument("denominator must be positive");
  i128 scale = 1;
  for (int i = 0; i < digits; ++i) scale = mul_ck(scale, 10);
  const bool neg = r.num < 0;
  const i128 num = abs128(r.num);
  const i128 q = (mul_ck(mul_ck(num, scale), 2) + r.den) / (2 * r.den);
  std::string frac = to_string(q % scale);
  std::string out = (neg && q != 0 ? "-" : "") + to_string(q / scale);
  if (digits > 0) out += "." + std::string(digits - frac.size(), '0') + frac;
  return out;
}

void write_table_csv(std::ostream& os, const std::vector<CensusRow>& rows) {
  os << "n,A,B,C,D,E\n";
  for (const auto& r : rows)
    os << r.n << ',' << to_string(r.counts.a) << ',' << to_string(r.counts.b) << ','
       << to_string(r.counts.c) << ',' << to_string(r.counts.d) << ',' << to_string(r.counts.e)
       << '\n';
}

namespace {

nlohmann::ordered_json ratio_json(const Rational& q) {
  return nlohmann::ordered_json::array({to_i64(q.num), to_i64(q.den)});
}

}  // namespace

nlohmann::ordered_json census_row_json(const CensusRow& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["A"] = to_i64(r.counts.a);
  j["B"] = to_i64(r.counts.b);
  j["C"] = to_i64(r.counts.c);
  j["D"] = to_i64(r.counts.d);
  j["E"] = to_i64(r.counts.e);
  j["rA"] = ratio_json(r.ra);
  j["rB"] = ratio_json(r.rb);
  j["rC"] = ratio_json(r.rc);
  j["rD"] = ratio_json(r.rd);
  return j;
}

void write_table_jsonl(std::ostream& os, const std::vector<CensusRow>& rows) {
  for (const auto& r : rows) os << census_row_json(r).dump() << '\n';
}

void write_densities_csv(std::ostream& os, const std::vector<CensusRow>& rows) {
  os << "n,rA,rB,rC,rD\n";
  for (const auto& r : rows)
    os << r.n << ',' << decimal_fixed(r.ra) << ',' << decimal_fixed(r.rb) << ','
       << decimal_fixed(r.rc) << ',' << decimal_fixed(r.rd) << '\n';
}

void write_densities_jsonl(std::ostream& os, const std::vector<CensusRow>& rows) {
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["rA"] = decimal_fixed(r.ra);
    j["rB"] = decimal_fixed(r.rb);
    j["rC"] = decimal_fixed(r.rc);
    j["rD"] = decimal_fixed(r.rd);
    os << j.dump() << '\n';
  }
}

nlohmann::ordered_json bruteforce_json(const BruteForceCensus& c) {
  nlohmann::ordered_json j;
  j["n"] = c.n;
  j["H11"] = {{"A", c.h11[0]}, {"B", c.h11[1]}, {"C", c.h11[2]}, {"D", c.h11[3]}};
  j["H2"] = {{"F", c.f}, {"G", c.g}};
  j["classes"] = {{"H11", c.h11_classes}, {"H2", c.h2_classes}};
  j["pairs_scanned"] = c.pairs_scanned;
  j["elapsed_seconds"] = c.elapsed_seconds;
  return j;
}

}  // namespace sqtile
