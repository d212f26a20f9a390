#pragma once

#include <string>

#include "tdmono/complex/homology_table.hpp"
#include "tdmono/report/cohomology_report.hpp"
#include "tdmono/util/json_out.hpp"

namespace tdmono::report {

inline constexpr const char* kReportSchema = "tdmono/report/v1";

util::Json report_to_json(const CohomologyReport& r);
std::string report_to_text(const CohomologyReport& r);

// T-table listing, one line per cell of the support.
util::Json homology_to_json(const complex::HomologyTable& t);
std::string homology_to_text(const complex::HomologyTable& t);

// Layout and outgoing maps of one cell, or a rank summary of all cells.
util::Json cell_to_json(const complex::ChowComplex& cx, int i, int j);
std::string cell_to_text(const complex::ChowComplex& cx, int i, int j);
std::string complex_to_text(const complex::ChowComplex& cx);

} // namespace tdmono::report
