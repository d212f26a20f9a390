#pragma once

#include <string>

#include "json.hpp"
#include "tdmono/lattice/int_matrix.hpp"

namespace tdmono::util {

// Insertion-ordered so that emitted documents have a fixed field order.
using Json = nlohmann::ordered_json;

// Integers that fit in 64 bits are emitted as numbers, larger ones as
// decimal strings; the readers accept both.
Json to_json(const lattice::Integer& v);
Json to_json(const lattice::IntMatrix& m);
Json to_json(const std::vector<lattice::Integer>& v);

lattice::Integer integer_from_json(const Json& j);

// Reads a row-major [[int]] matrix. An empty array is accepted as a
// matrix with zero rows and `cols_hint` columns.
lattice::IntMatrix matrix_from_json(const Json& j, std::size_t cols_hint = 0);

// Stable pretty-printer: objects one key per line, arrays without nested
// objects on a single line.
std::string dump_canonical(const Json& j);

} // namespace tdmono::util
