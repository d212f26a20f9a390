#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tdmono/check_report.hpp"
#include "tdmono/lattice/int_matrix.hpp"
#include "tdmono/util/json_out.hpp"

namespace tdmono::toric {

using lattice::IntMatrix;

// Sorted 0-based ray indices.
using Cone = std::vector<int>;

/**
 * Fan in N = Z^rank. The zero cone and the rays themselves are implicit;
 * `cones` lists the higher-dimensional cones and must be closed under
 * taking faces of dimension >= 2.
 */
struct Fan {
    int rank = 0;
    std::vector<std::vector<long>> rays;
    std::vector<Cone> cones;

    // rank x |cone| matrix whose columns are the rays of the cone.
    IntMatrix ray_matrix(const Cone& c) const;

    // Every cone including the zero cone and the rays, grouped by dimension
    // and sorted lexicographically within a dimension.
    std::vector<std::vector<Cone>> cones_by_dimension() const;

    bool operator==(const Fan&) const = default;
};

inline constexpr const char* kFanSchema = "tdmono/fan/v1";

// {"rank", "rays", "cones"}; a "schema" field is optional but must match.
// Cones are sorted on input. Throws SchemaError.
Fan fan_from_json(const util::Json& j);
Fan parse_fan(std::string_view text);
util::Json fan_to_json(const Fan& f);

// Failure codes: bad-rank, bad-ray, not-primitive, duplicate-ray, bad-cone,
// face-closure, not-smooth, not-pure, incomplete, overlap.
CheckReport validate_fan(const Fan& f);

} // namespace tdmono::toric
