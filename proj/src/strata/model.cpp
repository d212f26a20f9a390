#include "tdmono/strata/model.hpp"

#include <sstream>

#include "tdmono/error.hpp"

namespace tdmono::strata {

std::string subset_label(const Subset& s)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t k = 0; k < s.size(); ++k)
        os << (k ? "," : "") << s[k];
    os << '}';
    return os.str();
}

IntMatrix StratumChowData::lefschetz_power(int from, int steps) const
{
    if (from < 0 || steps < 0 || from + steps > dim)
        throw DegreeOutOfRange("xi^" + std::to_string(steps) + " from CH^" +
                               std::to_string(from) + " on a stratum of dimension " +
                               std::to_string(dim));
    IntMatrix m = IntMatrix::identity(rank(from));
    for (int a = from; a < from + steps; ++a)
        m = lefschetz[static_cast<std::size_t>(a)] * m;
    return m;
}

const StratumChowData* DegenerationModel::stratum(const Subset& s) const
{
    auto it = strata.find(s);
    return it == strata.end() ? nullptr : &it->second;
}

std::size_t DegenerationModel::chow_rank(const Subset& s, int degree) const
{
    const StratumChowData* st = stratum(s);
    return st ? st->rank(degree) : 0;
}

std::vector<Subset> DegenerationModel::strata_of_size(std::size_t m) const
{
    std::vector<Subset> out;
    for (const auto& [s, data] : strata)
        if (s.size() == m)
            out.push_back(s);
    return out;
}

const IntMatrix* DegenerationModel::restriction(const Subset& from, const Subset& to,
                                                int degree) const
{
    auto it = restrictions.find(IncidenceKey{from, to, degree});
    return it == restrictions.end() ? nullptr : &it->second;
}

const IntMatrix* DegenerationModel::gysin(const Subset& from, const Subset& to, int degree) const
{
    auto it = gysins.find(IncidenceKey{from, to, degree});
    return it == gysins.end() ? nullptr : &it->second;
}

} // namespace tdmono::strata
