#include "tdmono/report/report_io.hpp"

#include <sstream>

#include "tdmono/strata/model.hpp"

namespace tdmono::report {

using complex::ChowComplex;
using complex::HomologyTable;
using util::Json;

namespace {

std::string cell_name(const char* letter, int i, int j)
{
    return std::string(letter) + "^" + std::to_string(i) + "_" + std::to_string(j);
}

std::string group_text(std::size_t rank, const std::vector<Integer>& torsion)
{
    return lattice::FgAbGroup{rank, torsion}.to_string();
}

Json group_json(const lattice::FgAbGroup& g)
{
    return {{"rank", g.rank}, {"torsion", util::to_json(g.torsion)}};
}

Json optional_integer(const std::optional<Integer>& v)
{
    return v ? util::to_json(*v) : Json(nullptr);
}

} // namespace

Json report_to_json(const CohomologyReport& r)
{
    Json j;
    j["schema"] = kReportSchema;
    j["model"] = r.model_name;
    j["dimension"] = r.dimension;

    Json e1 = Json::array();
    for (const auto& e : r.e1)
        e1.push_back({{"p", e.p}, {"q", e.q}, {"rank", e.rank}, {"twist", e.twist}});
    j["e1"] = std::move(e1);
    Json e2 = Json::array();
    for (const auto& e : r.e2)
        e2.push_back({{"p", e.p},
                      {"q", e.q},
                      {"rank", e.rank},
                      {"torsion", util::to_json(e.torsion)},
                      {"twist", e.twist}});
    j["e2"] = std::move(e2);

    Json graded = Json::array();
    for (std::size_t n = 0; n < r.graded.size(); ++n) {
        Json pieces = Json::array();
        for (const auto& g : r.graded[n])
            pieces.push_back({{"i", g.i},
                              {"j", g.j},
                              {"level", g.level},
                              {"rank", g.rank},
                              {"torsion", util::to_json(g.torsion)},
                              {"tate_twist", g.tate_twist},
                              {"weight", g.weight},
                              {"slope", g.slope}});
        graded.push_back({{"n", n}, {"pieces", std::move(pieces)}});
    }
    j["graded"] = std::move(graded);
    j["betti"] = r.betti;
    j["hodge"] = r.hodge;

    Json mono = Json::array();
    for (const auto& c : r.certificates.isogenies)
        mono.push_back({{"i", c.i},
                        {"j", c.j},
                        {"source", group_json(c.source)},
                        {"target", group_json(c.target)},
                        {"isogeny", c.verdict.is_isogeny},
                        {"cokernel_exponent", optional_integer(c.verdict.cokernel_exponent)},
                        {"cokernel_order", optional_integer(c.verdict.cokernel_order)},
                        {"cokernel_invariants", util::to_json(c.verdict.cokernel_invariants)}});
    j["monodromy"] = std::move(mono);
    Json pairings = Json::array();
    for (const auto& p : r.certificates.pairings)
        pairings.push_back({{"i", p.i},
                            {"j", p.j},
                            {"well_defined", p.well_defined},
                            {"nondegenerate", p.verdict.nondegenerate},
                            {"discriminant", util::to_json(p.verdict.discriminant)}});
    j["pairings"] = std::move(pairings);

    Json verdicts = Json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back(v.to_json());
    j["verdicts"] = std::move(verdicts);
    j["passed"] = r.passed();
    j["declared_conditions"] = r.declared_conditions;
    return j;
}

std::string report_to_text(const CohomologyReport& r)
{
    std::ostringstream os;
    os << "model: " << r.model_name << "\n";
    os << "dimension: " << r.dimension << "\n\n";

    os << "E1 page (E1^{p,2j} = C^p_j, twist -j; odd rows vanish)\n";
    for (const auto& e : r.e1)
        os << "  E1^{" << e.p << "," << e.q << "}  rank " << e.rank << "  twist " << e.twist
           << "\n";
    os << "\nE2 page (E2^{p,2j} = T^p_j, twist -j)\n";
    for (const auto& e : r.e2)
        os << "  E2^{" << e.p << "," << e.q << "}  " << group_text(e.rank, e.torsion)
           << "  twist " << e.twist << "\n";

    os << "\nMonodromy graded pieces Gr^M_level H^n (weight = 2j, slope = j)\n";
    for (std::size_t n = 0; n < r.graded.size(); ++n) {
        os << "  H^" << n << ":";
        if (r.graded[n].empty())
            os << " 0";
        for (const auto& g : r.graded[n])
            os << "  [level " << g.level << ": " << group_text(g.rank, g.torsion) << ", twist "
               << g.tate_twist << ", weight " << g.weight << ", slope " << g.slope << "]";
        os << "\n";
    }

    os << "\nBetti numbers:";
    for (auto b : r.betti)
        os << " " << b;
    os << "\n\nHodge numbers h^{p,q} (row p, column q)\n";
    for (const auto& row : r.hodge) {
        os << " ";
        for (auto h : row)
            os << " " << h;
        os << "\n";
    }

    os << "\nMonodromy N^i : T^-i_{j+i} -> T^i_j\n";
    for (const auto& c : r.certificates.isogenies) {
        os << "  N^" << c.i << " : " << cell_name("T", -c.i, c.j + c.i) << " -> "
           << cell_name("T", c.i, c.j) << "  " << c.source.to_string() << " -> "
           << c.target.to_string() << "  ";
        if (c.verdict.is_isogeny)
            os << "isogeny, cokernel order " << c.verdict.cokernel_order->get_str()
               << ", exponent " << c.verdict.cokernel_exponent->get_str() << "\n";
        else
            os << "NOT an isogeny\n";
    }
    os << "\nPairings T^i_j x T^-i_{d-j}\n";
    for (const auto& p : r.certificates.pairings)
        os << "  " << cell_name("T", p.i, p.j) << " x " << cell_name("T", -p.i, r.dimension - p.j)
           << "  " << (p.verdict.nondegenerate ? "nondegenerate" : "DEGENERATE")
           << ", discriminant " << p.verdict.discriminant.get_str()
           << (p.well_defined ? "" : ", NOT well defined") << "\n";

    os << "\nVerdicts\n";
    for (const auto& v : r.verdicts) {
        std::istringstream lines(v.to_text());
        std::string line;
        while (std::getline(lines, line))
            os << "  " << line << "\n";
    }
    os << "  overall: " << (r.passed() ? "pass" : "FAIL") << "\n";
    os << "\nDeclared conditions\n";
    for (const auto& c : r.declared_conditions)
        os << "  " << c << "\n";
    return os.str();
}

Json homology_to_json(const HomologyTable& t)
{
    Json cells = Json::array();
    for (const auto& [index, p] : t.groups) {
        Json c = group_json(p.group);
        c["i"] = index.first;
        c["j"] = index.second;
        cells.push_back(std::move(c));
    }
    return {{"dimension", t.dimension}, {"cells", std::move(cells)}};
}

std::string homology_to_text(const HomologyTable& t)
{
    std::ostringstream os;
    for (const auto& [index, p] : t.groups)
        os << cell_name("T", index.first, index.second) << " = " << p.group.to_string() << "\n";
    return os.str();
}

Json cell_to_json(const ChowComplex& cx, int i, int j)
{
    const complex::Cell& c = cx.cell(i, j);
    Json summands = Json::array();
    for (const auto& s : c.summands) {
        Json pieces = Json::array();
        for (const auto& p : s.pieces)
            pieces.push_back({{"I", p.stratum}, {"offset", p.offset}, {"width", p.width}});
        summands.push_back({{"k", s.k},
                            {"stratum_size", s.stratum_size},
                            {"chow_degree", s.chow_degree},
                            {"offset", s.offset},
                            {"width", s.width},
                            {"pieces", std::move(pieces)}});
    }
    Json j_out;
    j_out["i"] = i;
    j_out["j"] = j;
    j_out["rank"] = c.rank;
    j_out["summands"] = std::move(summands);
    j_out["theta"] = util::to_json(cx.theta(i, j));
    j_out["delta"] = util::to_json(cx.delta(i, j));
    j_out["differential"] = util::to_json(cx.differential(i, j));
    j_out["monodromy"] = util::to_json(cx.monodromy(i, j));
    j_out["pairing"] = util::to_json(cx.pairing(i, j));
    return j_out;
}

std::string cell_to_text(const ChowComplex& cx, int i, int j)
{
    std::ostringstream os;
    const complex::Cell& c = cx.cell(i, j);
    os << cell_name("C", i, j) << ": rank " << c.rank << "\n";
    for (const auto& s : c.summands) {
        os << "  k=" << s.k << ": CH^" << s.chow_degree << "(Y^(" << s.stratum_size
           << ")), rank " << s.width << "\n";
        for (const auto& p : s.pieces)
            os << "    Y" << strata::subset_label(p.stratum) << ": rank " << p.width << "\n";
    }
    os << "  d'  -> " << cell_name("C", i + 1, j) << ": " << cx.theta(i, j).to_string() << "\n";
    os << "  d'' -> " << cell_name("C", i + 1, j) << ": " << cx.delta(i, j).to_string() << "\n";
    os << "  N   -> " << cell_name("C", i + 2, j - 1) << ": " << cx.monodromy(i, j).to_string()
       << "\n";
    os << "  Q   x  " << cell_name("C", -i, cx.dimension() - j) << ": "
       << cx.pairing(i, j).to_string() << "\n";
    return os.str();
}

std::string complex_to_text(const ChowComplex& cx)
{
    std::ostringstream os;
    for (auto [i, j] : complex::support(cx.dimension())) {
        os << cell_name("C", i, j) << ": rank " << cx.rank(i, j);
        for (const auto& s : cx.cell(i, j).summands)
            os << "  [k=" << s.k << " CH^" << s.chow_degree << "(Y^(" << s.stratum_size
               << ")) " << s.width << "]";
        os << "\n";
    }
    return os.str();
}

} // namespace tdmono::report
