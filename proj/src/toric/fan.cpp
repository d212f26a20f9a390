#include "tdmono/toric/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "tdmono/error.hpp"
#include "tdmono/lattice/smith.hpp"

namespace tdmono::toric {

using lattice::Integer;
using util::Json;

IntMatrix Fan::ray_matrix(const Cone& c) const
{
    IntMatrix b(static_cast<std::size_t>(rank), c.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        for (std::size_t r = 0; r < static_cast<std::size_t>(rank); ++r)
            b(r, k) = rays[static_cast<std::size_t>(c[k])][r];
    return b;
}

std::vector<std::vector<Cone>> Fan::cones_by_dimension() const
{
    std::vector<std::set<Cone>> by(static_cast<std::size_t>(rank) + 1);
    by[0].insert(Cone{});
    for (int r = 0; r < static_cast<int>(rays.size()); ++r)
        if (rank >= 1)
            by[1].insert(Cone{r});
    for (const auto& c : cones)
        if (c.size() >= 2 && c.size() <= static_cast<std::size_t>(rank))
            by[c.size()].insert(c);
    std::vector<std::vector<Cone>> out;
    for (const auto& s : by)
        out.emplace_back(s.begin(), s.end());
    return out;
}

Fan fan_from_json(const Json& j)
{
    if (!j.is_object())
        throw SchemaError("fan document must be a JSON object");
    if (j.contains("schema") &&
        (!j.at("schema").is_string() || j.at("schema").get<std::string>() != kFanSchema))
        throw SchemaError(std::string("schema must be \"") + kFanSchema + "\"");
    for (const char* key : {"rank", "rays", "cones"})
        if (!j.contains(key))
            throw SchemaError(std::string("fan: missing field \"") + key + "\"");
    Fan f;
    if (!j.at("rank").is_number_integer())
        throw SchemaError("fan: \"rank\" must be an integer");
    f.rank = j.at("rank").get<int>();
    const Json& rays = j.at("rays");
    const Json& cones = j.at("cones");
    if (!rays.is_array() || !cones.is_array())
        throw SchemaError("fan: \"rays\" and \"cones\" must be arrays");
    for (const auto& r : rays) {
        if (!r.is_array())
            throw SchemaError("fan: each ray must be an array of integers");
        std::vector<long> v;
        for (const auto& x : r) {
            if (!x.is_number_integer())
                throw SchemaError("fan: each ray must be an array of integers");
            v.push_back(x.get<long>());
        }
        f.rays.push_back(std::move(v));
    }
    for (const auto& c : cones) {
        if (!c.is_array())
            throw SchemaError("fan: each cone must be an array of ray indices");
        Cone cone;
        for (const auto& x : c) {
            if (!x.is_number_integer())
                throw SchemaError("fan: each cone must be an array of ray indices");
            cone.push_back(x.get<int>());
        }
        std::sort(cone.begin(), cone.end());
        f.cones.push_back(std::move(cone));
    }
    return f;
}

Fan parse_fan(std::string_view text)
{
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError(std::string("malformed JSON: ") + e.what());
    }
    return fan_from_json(j);
}

Json fan_to_json(const Fan& f)
{
    Json j;
    j["schema"] = kFanSchema;
    j["rank"] = f.rank;
    j["rays"] = f.rays;
    j["cones"] = f.cones;
    return j;
}

namespace {

std::string cone_label(const Cone& c)
{
    std::string s = "cone {";
    for (std::size_t k = 0; k < c.size(); ++k)
        s += (k ? "," : "") + std::to_string(c[k]);
    return s + "}";
}

bool is_unimodular_cone(const Fan& f, const Cone& c)
{
    lattice::SmithDecomposition snf = lattice::smith_normal_form(f.ray_matrix(c));
    if (snf.rank() != c.size())
        return false;
    return std::all_of(snf.diag.begin(), snf.diag.end(), [](const Integer& d) { return d == 1; });
}

bool contains(const Cone& big, const Cone& small)
{
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

} // namespace

CheckReport validate_fan(const Fan& f)
{
    CheckReport report;
    report.name = "fan";
    if (f.rank < 1) {
        report.fail("bad-rank", "fan", "lattice rank must be at least 1");
        return report;
    }
    const auto n = static_cast<std::size_t>(f.rank);
    bool rays_ok = true;
    for (std::size_t r = 0; r < f.rays.size(); ++r) {
        const std::string where = "ray " + std::to_string(r);
        if (f.rays[r].size() != n) {
            report.fail("bad-ray", where, "has " + std::to_string(f.rays[r].size()) +
                                              " coordinates, expected " + std::to_string(n));
            rays_ok = false;
            continue;
        }
        long g = 0;
        for (long x : f.rays[r])
            g = std::gcd(g, x);
        if (g == 0) {
            report.fail("bad-ray", where, "zero vector");
            rays_ok = false;
        } else if (g != 1) {
            report.fail("not-primitive", where, "entries share the factor " + std::to_string(g));
        }
        for (std::size_t s = 0; s < r; ++s)
            if (f.rays[s] == f.rays[r])
                report.fail("duplicate-ray", where, "equals ray " + std::to_string(s));
    }
    bool cones_ok = rays_ok;
    std::set<Cone> listed;
    for (const auto& c : f.cones) {
        bool ok = c.size() >= 2 && c.size() <= n &&
                  std::adjacent_find(c.begin(), c.end()) == c.end();
        for (int r : c)
            ok = ok && r >= 0 && r < static_cast<int>(f.rays.size());
        if (!ok) {
            report.fail("bad-cone", cone_label(c),
                        "needs 2.." + std::to_string(n) + " distinct valid ray indices");
            cones_ok = false;
            continue;
        }
        if (!listed.insert(c).second)
            report.fail("bad-cone", cone_label(c), "listed twice");
    }
    if (!cones_ok)
        return report;

    for (const auto& c : listed) {
        for (std::size_t k = 0; c.size() > 2 && k < c.size(); ++k) {
            Cone face = c;
            face.erase(face.begin() + static_cast<long>(k));
            if (!listed.count(face))
                report.fail("face-closure", cone_label(c), cone_label(face) + " is not listed");
        }
        if (!is_unimodular_cone(f, c))
            report.fail("not-smooth", cone_label(c), "rays are not part of a Z-basis");
    }

    // Maximal cones; rays that lie in no listed cone count as maximal too.
    std::vector<Cone> all(listed.begin(), listed.end());
    for (int r = 0; r < static_cast<int>(f.rays.size()); ++r)
        all.push_back({r});
    std::vector<Cone> maximal;
    for (const auto& c : all) {
        bool is_max = std::none_of(all.begin(), all.end(), [&](const Cone& d) {
            return d.size() > c.size() && contains(d, c);
        });
        if (is_max)
            maximal.push_back(c);
    }
    bool pure = true;
    for (const auto& c : maximal)
        if (c.size() != n) {
            report.fail("not-pure", cone_label(c), "maximal cone of dimension " +
                                                       std::to_string(c.size()));
            pure = false;
        }
    if (!pure || !report.passed())
        return report;
    if (maximal.empty()) {
        report.fail("incomplete", "fan", "no maximal cones");
        return report;
    }

    // Each facet of a maximal cone must be shared by exactly one other
    // maximal cone lying on the opposite side of it.
    std::map<Cone, std::vector<std::pair<int, Integer>>> facets;
    for (const auto& c : maximal) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            Cone face = c;
            face.erase(face.begin() + static_cast<long>(k));
            Cone ordered = face;
            ordered.push_back(c[k]);
            facets[face].emplace_back(c[k], lattice::determinant(f.ray_matrix(ordered)));
        }
    }
    for (const auto& [face, sides] : facets) {
        const std::string where = face.empty() ? std::string("cone {}") : cone_label(face);
        if (sides.size() != 2)
            report.fail("incomplete", where,
                        "facet lies in " + std::to_string(sides.size()) + " maximal cone(s)");
        else if (sgn(sides[0].second) == sgn(sides[1].second))
            report.fail("overlap", where, "both maximal cones lie on the same side");
    }
    if (!report.passed())
        return report;

    // Covering degree at a generic point must be one.
    std::vector<IntMatrix> inverses;
    for (const auto& c : maximal)
        inverses.push_back(lattice::unimodular_inverse(f.ray_matrix(c)));
    for (long t = 1; t <= 64; ++t) {
        std::vector<Integer> p(n);
        for (std::size_t i = 0; i < n; ++i)
            p[i] = (i % 2 ? -1 : 1) * (t * 10007 + static_cast<long>(i * i) * 101 + 1);
        bool generic = true;
        int hits = 0;
        for (const auto& inv : inverses) {
            std::vector<Integer> lambda = inv * p;
            bool inside = true;
            for (const auto& l : lambda) {
                if (sgn(l) == 0)
                    generic = false;
                inside = inside && sgn(l) > 0;
            }
            hits += inside;
        }
        if (!generic)
            continue;
        if (hits == 0)
            report.fail("incomplete", "fan", "a generic point lies in no maximal cone");
        else if (hits > 1)
            report.fail("overlap", "fan",
                        "a generic point lies in " + std::to_string(hits) + " maximal cones");
        break;
    }
    return report;
}

} // namespace tdmono::toric
