#pragma once

#include <string>
#include <string_view>

#include "tdmono/strata/model.hpp"
#include "tdmono/util/json_out.hpp"

namespace tdmono::strata {

inline constexpr const char* kModelSchema = "tdmono/model/v1";

// Parses and structurally validates a "tdmono/model/v1" document.
// SchemaError: malformed JSON, missing/mistyped fields, matrix shapes.
// StructureError: subset ordering/range, dimension formula, downward
// closure, incidences between absent or non-adjacent strata.
DegenerationModel parse_model(std::string_view text);
DegenerationModel model_from_json(const util::Json& j);

util::Json model_to_json(const DegenerationModel& m);
// Canonical text; parse_model(serialize_model(m)) == m.
std::string serialize_model(const DegenerationModel& m);

// Shape checks shared by the parser and validate_structure. Return an empty
// string when fine, otherwise a description of the problem.
std::string stratum_shape_problem(const StratumChowData& s);
std::string incidence_shape_problem(const DegenerationModel& m, const IncidenceKey& key,
                                    const IntMatrix& matrix, bool is_gysin);

} // namespace tdmono::strata
