#include "tdmono/util/json_out.hpp"

#include <sstream>

#include "tdmono/error.hpp"

namespace tdmono::util {

using lattice::IntMatrix;
using lattice::Integer;

Json to_json(const Integer& v)
{
    if (mpz_fits_slong_p(v.get_mpz_t()))
        return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Json to_json(const IntMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const std::vector<Integer>& v)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(to_json(x));
    return out;
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer())
        return Integer(j.get<long>());
    if (j.is_string()) {
        Integer v;
        if (v.set_str(j.get<std::string>(), 10) != 0)
            throw SchemaError("not a decimal integer: " + j.dump());
        return v;
    }
    throw SchemaError("expected an integer, got " + j.dump());
}

IntMatrix matrix_from_json(const Json& j, std::size_t cols_hint)
{
    if (!j.is_array())
        throw SchemaError("expected a matrix (array of rows), got " + j.dump());
    if (j.empty())
        return IntMatrix(0, cols_hint);
    std::vector<std::vector<Integer>> rows;
    std::size_t cols = 0;
    for (std::size_t r = 0; r < j.size(); ++r) {
        const Json& row = j[r];
        if (!row.is_array())
            throw SchemaError("matrix row " + std::to_string(r) + " is not an array");
        if (r == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw SchemaError("ragged matrix: row " + std::to_string(r) + " has " +
                              std::to_string(row.size()) + " entries, expected " +
                              std::to_string(cols));
        std::vector<Integer> values;
        for (const auto& v : row)
            values.push_back(integer_from_json(v));
        rows.push_back(std::move(values));
    }
    return IntMatrix::from_rows(rows, cols);
}

namespace {

bool has_object(const Json& j)
{
    if (j.is_object())
        return true;
    if (j.is_array())
        for (const auto& e : j)
            if (has_object(e))
                return true;
    return false;
}

void emit(std::ostringstream& os, const Json& j, int indent)
{
    const std::string pad(indent, ' ');
    const std::string inner(indent + 2, ' ');
    if (j.is_object()) {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first)
                os << ",\n";
            first = false;
            os << inner << Json(it.key()).dump() << ": ";
            emit(os, it.value(), indent + 2);
        }
        os << '\n' << pad << '}';
    } else if (j.is_array() && has_object(j)) {
        os << "[\n";
        bool first = true;
        for (const auto& e : j) {
            if (!first)
                os << ",\n";
            first = false;
            os << inner;
            emit(os, e, indent + 2);
        }
        os << '\n' << pad << ']';
    } else {
        os << j.dump();
    }
}

} // namespace

std::string dump_canonical(const Json& j)
{
    std::ostringstream os;
    emit(os, j, 0);
    os << '\n';
    return os.str();
}

} // namespace tdmono::util
