#include "tdmono/complex/homology_table.hpp"

namespace tdmono::complex {

const SubquotientPresentation& HomologyTable::at(int i, int j) const
{
    static const SubquotientPresentation zero = lattice::homology(IntMatrix(), IntMatrix());
    auto it = groups.find({i, j});
    return it == groups.end() ? zero : it->second;
}

HomologyTable homology_table(const ChowComplex& cx)
{
    HomologyTable t;
    t.dimension = cx.dimension();
    for (auto [i, j] : support(cx.dimension()))
        t.groups.emplace(CellIndex{i, j},
                         lattice::homology(cx.differential(i - 1, j), cx.differential(i, j)));
    for (auto [i, j] : support(cx.dimension()))
        t.monodromy.emplace(CellIndex{i, j},
                            lattice::induced_map(t.at(i, j), t.at(i + 2, j - 1),
                                                 cx.monodromy(i, j)));
    return t;
}

} // namespace tdmono::complex
