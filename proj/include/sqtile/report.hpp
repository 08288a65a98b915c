#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "sqtile/formulas.hpp"
#include "sqtile/origami.hpp"

namespace sqtile {

// Exact rational rendered with `digits` decimals, rounded half away from zero.
std::string decimal_fixed(const Rational& r, int digits = 12);

// Output is LF-terminated and depends only on the rows, so repeated runs are
// byte-identical.
void write_table_csv(std::ostream& os, const std::vector<CensusRow>& rows);
void write_table_jsonl(std::ostream& os, const std::vector<CensusRow>& rows);
void write_densities_csv(std::ostream& os, const std::vector<CensusRow>& rows);
void write_densities_jsonl(std::ostream& os, const std::vector<CensusRow>& rows);

nlohmann::ordered_json census_row_json(const CensusRow& row);
nlohmann::ordered_json bruteforce_json(const BruteForceCensus& c);

}  // namespace sqtile
