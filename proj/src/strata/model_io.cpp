#include "tdmono/strata/model_io.hpp"

#include <algorithm>

#include "tdmono/error.hpp"

namespace tdmono::strata {

using util::Json;
using util::matrix_from_json;

namespace {

const Json& require(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        throw SchemaError(where + ": missing field \"" + key + "\"");
    return j.at(key);
}

int require_int(const Json& j, const char* key, const std::string& where)
{
    const Json& v = require(j, key, where);
    if (!v.is_number_integer())
        throw SchemaError(where + ": field \"" + key + "\" must be an integer");
    return v.get<int>();
}

Subset read_subset(const Json& j, const std::string& where)
{
    if (!j.is_array())
        throw SchemaError(where + ": index set must be an array of integers");
    Subset s;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw SchemaError(where + ": index set must be an array of integers");
        s.push_back(v.get<int>());
    }
    return s;
}

std::string shape(const IntMatrix& m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

std::string expect_shape(const IntMatrix& m, std::size_t rows, std::size_t cols)
{
    if (m.rows() == rows && m.cols() == cols)
        return {};
    return "has shape " + shape(m) + ", expected " + std::to_string(rows) + "x" +
           std::to_string(cols);
}

// Position of the single element of `big` missing from `small`, or -1.
int extra_element(const Subset& small, const Subset& big)
{
    if (big.size() != small.size() + 1 || !std::includes(big.begin(), big.end(), small.begin(),
                                                         small.end()))
        return -1;
    for (std::size_t k = 0; k < big.size(); ++k)
        if (!std::binary_search(small.begin(), small.end(), big[k]))
            return static_cast<int>(k);
    return -1;
}

void check_subset(const DegenerationModel& m, const Subset& s, const std::string& where)
{
    if (s.empty())
        throw StructureError(where + ": empty index set");
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 1 || s[k] > m.num_components)
            throw StructureError(where + ": component " + std::to_string(s[k]) +
                                 " outside 1.." + std::to_string(m.num_components));
        if (k > 0 && s[k - 1] >= s[k])
            throw StructureError(where + ": index set must be strictly ascending");
    }
    if (static_cast<int>(s.size()) > m.dimension + 1)
        throw StructureError(where + ": |I| = " + std::to_string(s.size()) +
                             " exceeds dimension + 1 = " + std::to_string(m.dimension + 1));
}

void read_incidences(const Json& list, bool is_gysin, DegenerationModel& m)
{
    const char* kind = is_gysin ? "gysin" : "restrictions";
    if (!list.is_array())
        throw SchemaError(std::string("\"") + kind + "\" must be an array");
    for (std::size_t n = 0; n < list.size(); ++n) {
        const Json& e = list[n];
        const std::string where = std::string(kind) + "[" + std::to_string(n) + "]";
        IncidenceKey key{read_subset(require(e, "from", where), where),
                         read_subset(require(e, "to", where), where),
                         require_int(e, "deg", where)};
        check_subset(m, key.from, where);
        check_subset(m, key.to, where);
        if (!m.stratum(key.from) || !m.stratum(key.to))
            throw StructureError(where + ": incidence between absent strata " +
                                 subset_label(key.from) + " -> " + subset_label(key.to));
        const bool adjacent = is_gysin ? extra_element(key.to, key.from) >= 0
                                       : extra_element(key.from, key.to) >= 0;
        if (!adjacent)
            throw StructureError(where + ": " + subset_label(key.from) + " -> " +
                                 subset_label(key.to) +
                                 (is_gysin ? " does not delete exactly one index"
                                           : " does not add exactly one index"));
        const Subset& target = is_gysin ? key.from : key.to;
        if (key.degree < 0 || key.degree > m.stratum_dim(target))
            throw StructureError(where + ": degree " + std::to_string(key.degree) +
                                 " out of range");
        IntMatrix matrix = matrix_from_json(require(e, "matrix", where),
                                            m.chow_rank(key.from, key.degree));
        if (auto problem = incidence_shape_problem(m, key, matrix, is_gysin); !problem.empty())
            throw SchemaError(where + " (" + subset_label(key.from) + " -> " +
                              subset_label(key.to) + ", degree " + std::to_string(key.degree) +
                              "): matrix " + problem);
        auto& table = is_gysin ? m.gysins : m.restrictions;
        if (!table.emplace(key, std::move(matrix)).second)
            throw StructureError(where + ": duplicate incidence");
    }
}

} // namespace

std::string stratum_shape_problem(const StratumChowData& s)
{
    if (s.dim < 0)
        return "negative dimension";
    const auto d = static_cast<std::size_t>(s.dim);
    if (s.ranks.size() != d + 1)
        return "ranks has " + std::to_string(s.ranks.size()) + " entries, expected " +
               std::to_string(d + 1);
    if (s.lefschetz.size() != d)
        return "lefschetz has " + std::to_string(s.lefschetz.size()) + " matrices, expected " +
               std::to_string(d);
    if (s.pairings.size() != d + 1)
        return "pairings has " + std::to_string(s.pairings.size()) + " matrices, expected " +
               std::to_string(d + 1);
    for (std::size_t a = 0; a < d; ++a)
        if (auto p = expect_shape(s.lefschetz[a], s.ranks[a + 1], s.ranks[a]); !p.empty())
            return "lefschetz[" + std::to_string(a) + "] " + p;
    for (std::size_t a = 0; a <= d; ++a)
        if (auto p = expect_shape(s.pairings[a], s.ranks[a], s.ranks[d - a]); !p.empty())
            return "pairings[" + std::to_string(a) + "] " + p;
    return {};
}

std::string incidence_shape_problem(const DegenerationModel& m, const IncidenceKey& key,
                                    const IntMatrix& matrix, bool is_gysin)
{
    const std::size_t cols = m.chow_rank(key.from, key.degree);
    const std::size_t rows = m.chow_rank(key.to, is_gysin ? key.degree + 1 : key.degree);
    return expect_shape(matrix, rows, cols);
}

DegenerationModel model_from_json(const Json& j)
{
    if (!j.is_object())
        throw SchemaError("model document must be a JSON object");
    const Json& schema = require(j, "schema", "model");
    if (!schema.is_string() || schema.get<std::string>() != kModelSchema)
        throw SchemaError(std::string("schema must be \"") + kModelSchema + "\"");

    DegenerationModel m;
    const Json& name = require(j, "name", "model");
    if (!name.is_string())
        throw SchemaError("model: field \"name\" must be a string");
    m.name = name.get<std::string>();
    m.dimension = require_int(j, "dimension", "model");
    m.num_components = require_int(j, "num_components", "model");
    if (m.dimension < 0)
        throw StructureError("model: negative dimension");
    if (m.num_components < 1)
        throw StructureError("model: at least one component is required");

    const Json& strata = require(j, "strata", "model");
    if (!strata.is_array())
        throw SchemaError("model: \"strata\" must be an array");
    for (std::size_t n = 0; n < strata.size(); ++n) {
        const Json& e = strata[n];
        std::string where = "strata[" + std::to_string(n) + "]";
        Subset s = read_subset(require(e, "I", where), where);
        check_subset(m, s, where);
        where = "stratum " + subset_label(s);

        StratumChowData data;
        data.dim = require_int(e, "dim", where);
        if (data.dim != m.stratum_dim(s))
            throw StructureError(where + ": dim " + std::to_string(data.dim) +
                                 " violates dim = dimension - |I| + 1 = " +
                                 std::to_string(m.stratum_dim(s)));
        const Json& ranks = require(e, "ranks", where);
        if (!ranks.is_array())
            throw SchemaError(where + ": \"ranks\" must be an array");
        for (const auto& r : ranks) {
            if (!r.is_number_integer() || r.get<long>() < 0)
                throw SchemaError(where + ": ranks must be nonnegative integers");
            data.ranks.push_back(r.get<std::size_t>());
        }
        if (data.ranks.size() != static_cast<std::size_t>(data.dim) + 1)
            throw SchemaError(where + ": ranks has " + std::to_string(data.ranks.size()) +
                              " entries, expected " + std::to_string(data.dim + 1));
        const Json& lef = require(e, "lefschetz", where);
        const Json& pair = require(e, "pairings", where);
        if (!lef.is_array() || !pair.is_array())
            throw SchemaError(where + ": lefschetz/pairings must be arrays of matrices");
        for (std::size_t a = 0; a < lef.size(); ++a)
            data.lefschetz.push_back(
                matrix_from_json(lef[a], a < data.ranks.size() ? data.ranks[a] : 0));
        const auto d = static_cast<std::size_t>(data.dim);
        for (std::size_t a = 0; a < pair.size(); ++a)
            data.pairings.push_back(matrix_from_json(pair[a], a <= d ? data.ranks[d - a] : 0));
        if (auto problem = stratum_shape_problem(data); !problem.empty())
            throw SchemaError(where + ": " + problem);
        if (!m.strata.emplace(s, std::move(data)).second)
            throw StructureError(where + ": duplicate stratum");
    }

    for (const auto& [s, data] : m.strata) {
        if (s.size() < 2)
            continue;
        for (std::size_t k = 0; k < s.size(); ++k) {
            Subset face = s;
            face.erase(face.begin() + static_cast<long>(k));
            if (!m.stratum(face))
                throw StructureError("stratum " + subset_label(s) + " is present but " +
                                     subset_label(face) + " is missing (downward closure)");
        }
    }

    read_incidences(require(j, "restrictions", "model"), false, m);
    read_incidences(require(j, "gysin", "model"), true, m);

    if (j.contains("flags")) {
        const Json& f = j.at("flags");
        if (!f.is_object())
            throw SchemaError("model: \"flags\" must be an object");
        for (const char* key : {"claims_conditions_bc", "claims_ordinary"}) {
            if (!f.contains(key))
                continue;
            if (!f.at(key).is_boolean())
                throw SchemaError(std::string("flags.") + key + " must be a boolean");
        }
        m.flags.claims_conditions_bc = f.value("claims_conditions_bc", false);
        m.flags.claims_ordinary = f.value("claims_ordinary", false);
    }
    return m;
}

DegenerationModel parse_model(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    return model_from_json(j);
}

namespace {

Json incidence_list(const std::map<IncidenceKey, IntMatrix>& table)
{
    std::vector<std::pair<const IncidenceKey*, const IntMatrix*>> entries;
    for (const auto& [key, matrix] : table)
        entries.emplace_back(&key, &matrix);
    std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        SizeThenLex order;
        if (a.first->from != b.first->from)
            return order(a.first->from, b.first->from);
        if (a.first->to != b.first->to)
            return order(a.first->to, b.first->to);
        return a.first->degree < b.first->degree;
    });
    Json out = Json::array();
    for (const auto& [key, matrix] : entries) {
        Json e;
        e["from"] = key->from;
        e["to"] = key->to;
        e["deg"] = key->degree;
        e["matrix"] = util::to_json(*matrix);
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

Json model_to_json(const DegenerationModel& m)
{
    Json j;
    j["schema"] = kModelSchema;
    j["name"] = m.name;
    j["dimension"] = m.dimension;
    j["num_components"] = m.num_components;
    Json strata = Json::array();
    for (const auto& [s, data] : m.strata) {
        Json e;
        e["I"] = s;
        e["dim"] = data.dim;
        e["ranks"] = data.ranks;
        Json lef = Json::array();
        for (const auto& l : data.lefschetz)
            lef.push_back(util::to_json(l));
        e["lefschetz"] = std::move(lef);
        Json pair = Json::array();
        for (const auto& p : data.pairings)
            pair.push_back(util::to_json(p));
        e["pairings"] = std::move(pair);
        strata.push_back(std::move(e));
    }
    j["strata"] = std::move(strata);
    j["restrictions"] = incidence_list(m.restrictions);
    j["gysin"] = incidence_list(m.gysins);
    j["flags"] = {{"claims_conditions_bc", m.flags.claims_conditions_bc},
                  {"claims_ordinary", m.flags.claims_ordinary}};
    return j;
}

std::string serialize_model(const DegenerationModel& m)
{
    return util::dump_canonical(model_to_json(m));
}

} // namespace tdmono::strata
