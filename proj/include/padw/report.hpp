#pragma once

// Line-oriented tables and `key=value` records for analysis reports.
//
// CR witness record keys, in order:
//   nu p_nu alpha k n s_n diff_ord_num diff_ord_den predicted_ord_num
//   predicted_ord_den bracket_unit
// Growth record keys, in order:
//   t_num t_den value_ord_num value_ord_den argmax scan_bound tail_ord_num
//   tail_ord_den
// argmax is a comma-separated index list; bracket_unit is 0 or 1.

#include <string>
#include <string_view>

#include "padw/analysis.hpp"

namespace padw {

std::string cr_record(const CrWitnessRow& row);
/// Parses one record line; diagnostic fields are left default.
CrWitnessRow parse_cr_record(std::string_view line);

std::string cr_table(const CrWitnessReport& report);

std::string growth_record(const GrowthModulusReport& report);
GrowthModulusReport parse_growth_record(std::string_view line);

std::string growth_table(const GrowthModulusReport& report, unsigned long p);

}  // namespace padw
