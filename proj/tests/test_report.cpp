#include "doctest.h"

#include "fixtures.hpp"
#include "tdmono/error.hpp"
#include "tdmono/generators/models.hpp"
#include "tdmono/report/cohomology_report.hpp"
#include "tdmono/report/report_io.hpp"
#include "tdmono/strata/model_io.hpp"

using namespace tdmono;
using namespace tdmono::report;

namespace {

const PageEntry* find(const std::vector<PageEntry>& page, int p, int q)
{
    for (const auto& e : page)
        if (e.p == p && e.q == q)
            return &e;
    return nullptr;
}

const CheckReport& verdict(const CohomologyReport& r, const std::string& name)
{
    for (const auto& v : r.verdicts)
        if (v.name == name)
            return v;
    FAIL("no verdict " << name);
    return r.verdicts.front();
}

bool has_note(const CheckReport& r, const std::string& text)
{
    for (const auto& n : r.notes)
        if (n.find(text) != std::string::npos)
            return true;
    return false;
}

} // namespace

TEST_CASE("triangle: pages")
{
    auto cx = complex::assemble(generators::gen_ngon(3));
    auto t = complex::homology_table(cx);

    auto e1 = e1_page(cx);
    CHECK(e1.size() == 6);
    REQUIRE(find(e1, -1, 2));
    CHECK(find(e1, -1, 2)->rank == 3);
    CHECK(find(e1, -1, 2)->twist == -1);
    CHECK(find(e1, 0, 0)->rank == 3);
    CHECK(find(e1, 0, 2)->rank == 3);
    CHECK(find(e1, 1, 0)->rank == 3);
    CHECK(find(e1, 0, 1) == nullptr);

    auto e2 = e2_page(t);
    for (auto [p, q] : {std::pair{-1, 2}, {0, 0}, {0, 2}, {1, 0}}) {
        REQUIRE(find(e2, p, q));
        CHECK(find(e2, p, q)->rank == 1);
        CHECK(find(e2, p, q)->torsion.empty());
    }
    CHECK(find(e2, 1, 2) == nullptr);
    REQUIRE(find(e2, -1, 4));
    CHECK(find(e2, -1, 4)->rank == 0);
}

TEST_CASE("triangle: graded pieces")
{
    auto t = complex::homology_table(complex::assemble(generators::gen_ngon(3)));
    auto h0 = monodromy_graded(t, 0);
    REQUIRE(h0.size() == 1);
    CHECK(h0[0].level == 0);
    CHECK(h0[0].rank == 1);
    CHECK(h0[0].weight == 0);

    auto h1 = monodromy_graded(t, 1);
    REQUIRE(h1.size() == 2);
    CHECK(h1[0].i == -1);
    CHECK(h1[0].level == 1);
    CHECK(h1[0].rank == 1);
    CHECK(h1[0].tate_twist == -1);
    CHECK(h1[0].weight == 2);
    CHECK(h1[0].slope == 1);
    CHECK(h1[1].level == -1);
    CHECK(h1[1].weight == 0);

    auto h2 = monodromy_graded(t, 2);
    REQUIRE(h2.size() == 1);
    CHECK(h2[0].level == 0);
    CHECK(h2[0].tate_twist == -1);

    CHECK_THROWS_AS(monodromy_graded(t, 3), DegreeOutOfRange);
    CHECK_THROWS_AS(monodromy_graded(t, -1), DegreeOutOfRange);
}

TEST_CASE("Betti and Hodge numbers")
{
    for (int n = 3; n <= 6; ++n) {
        auto t = complex::homology_table(complex::assemble(generators::gen_ngon(n)));
        CHECK(betti_numbers(t) == std::vector<std::size_t>{1, 2, 1});
        CHECK(hodge_numbers(t) == HodgeTable{{1, 1}, {1, 1}});
    }
    {
        auto theta = generators::gen_mumford(generators::parse_graph("1 2\n1 2\n1 2\n"));
        auto t = complex::homology_table(complex::assemble(theta));
        CHECK(betti_numbers(t) == std::vector<std::size_t>{1, 4, 1});
        CHECK(hodge_numbers(t)[1][0] == 2);
    }
    {
        auto t = complex::homology_table(complex::assemble(generators::gen_abelian_surface()));
        CHECK(betti_numbers(t) == std::vector<std::size_t>{1, 4, 6, 4, 1});
        HodgeTable h = hodge_numbers(t);
        CHECK(h[2][0] == 1);
        CHECK(h[1][1] == 4);
        CHECK(h[1][0] == 2);
        CHECK(h[0][1] == 2);
        CHECK(h == HodgeTable{{1, 2, 1}, {2, 4, 2}, {1, 2, 1}});
    }
}

TEST_CASE("Hodge inequalities")
{
    // threefold with h^{3,0} = 1 and h^{2,1} = 0
    HodgeTable cy{{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}};
    CheckReport r = check_hodge_inequalities(cy);
    CHECK(r.has_failure("chain-violated"));
    REQUIRE_FALSE(r.failures.empty());
    CHECK(r.failures[0].location == "n=3");
    CHECK(r.failures[0].detail == "h^(3,0) = 1 > h^(2,1) = 0");

    CHECK(check_hodge_inequalities(HodgeTable{{1, 1}, {1, 1}}).passed());
    CHECK(check_hodge_inequalities(HodgeTable{{1, 2, 1}, {2, 4, 2}, {1, 2, 1}}).passed());
    // a K3-shaped table h^{2,0} = 1, h^{1,1} = 20 is fine
    CHECK(check_hodge_inequalities(HodgeTable{{1, 0, 1}, {0, 20, 0}, {1, 0, 1}}).passed());
    CHECK(check_hodge_inequalities(HodgeTable{{1, 0}, {1, 1}}).has_failure("hodge-symmetry"));
}

TEST_CASE("report verdicts on shipped models")
{
    SUBCASE("n-gons")
    {
        for (int n = 3; n <= 8; ++n) {
            CohomologyReport r = build_report(generators::gen_ngon(n));
            CHECK(r.passed());
            CHECK(has_note(verdict(r, "weight-monodromy"),
                           "H^1, levels 1 -> -1: N^1 isogeny, discriminant " + std::to_string(n)));
            CHECK(has_note(verdict(r, "euler"), "Euler characteristic 0"));
        }
    }
    SUBCASE("abelian surface")
    {
        CohomologyReport r = build_report(generators::gen_abelian_surface());
        CHECK(r.passed());
        CHECK(has_note(verdict(r, "weight-monodromy"), "N^2 isogeny, discriminant 6"));
        CHECK(has_note(verdict(r, "weight-monodromy"), "N^1 isogeny, discriminant 3"));
        CHECK(has_note(verdict(r, "euler"), "Euler characteristic 0"));
        CHECK(r.graded[2].size() == 3);
    }
    SUBCASE("theta graph has Euler characteristic -2")
    {
        CohomologyReport r =
            build_report(generators::gen_mumford(generators::parse_graph("1 2\n1 2\n1 2\n")));
        CHECK(r.passed());
        CHECK(has_note(verdict(r, "euler"), "Euler characteristic -2"));
    }
    SUBCASE("broken model is refused")
    {
        strata::DegenerationModel bad = generators::gen_abelian_surface();
        bad.gysins.at({{1, 2, 3}, {1, 2}, 0}) = -bad.gysins.at({{1, 2, 3}, {1, 2}, 0});
        CHECK_THROWS_AS(build_report(bad), CompositionNotZero);
    }
}

TEST_CASE("verdict checks flag tampered inputs")
{
    auto cx = complex::assemble(generators::gen_ngon(3));
    auto t = complex::homology_table(cx);

    auto broken = t;
    broken.groups.at({0, 1}).group.rank = 2;
    CHECK(check_duality(broken).has_failure("poincare"));
    CHECK(check_duality(broken).has_failure("pairing-rank"));
    CHECK(check_euler(cx, broken).has_failure("euler-mismatch"));

    auto e1 = e1_page(cx);
    e1.push_back({0, 1, 1, {}, 0});
    CHECK(check_parity(e1, e2_page(t), {}).has_failure("odd-row"));

    GradedPiece odd{1, 0, 0, 0, 1, {}, 0, 0, 0};
    CHECK(check_parity({}, {}, {{odd}}).has_failure("wrong-parity-level"));

    auto cert = complex::certify_monodromy_and_duality(cx, t);
    for (auto& c : cert.isogenies)
        c.verdict.is_isogeny = false;
    CHECK(check_weight_monodromy(cert).has_failure("not-isogeny"));
}

TEST_CASE("report serialization")
{
    CohomologyReport r = build_report(generators::gen_ngon(4));
    const std::string json = util::dump_canonical(report_to_json(r));
    CHECK(json == util::dump_canonical(report_to_json(build_report(generators::gen_ngon(4)))));
    auto parsed = util::Json::parse(json);
    CHECK(parsed["schema"] == "tdmono/report/v1");
    CHECK(parsed["model"] == "curve 1-2 1-4 2-3 3-4");
    CHECK(parsed["betti"] == util::Json::parse("[1,2,1]"));
    CHECK(parsed["passed"] == true);
    for (const auto& c : parsed["monodromy"])
        CHECK(c["cokernel_order"] == (c["i"] == 1 ? 4 : 1));

    const std::string text = report_to_text(r);
    CHECK(text.find("Betti numbers: 1 2 1") != std::string::npos);
    CHECK(text.find("N^1 : T^-1_1 -> T^1_0  Z -> Z  isogeny, cokernel order 4, exponent 4") !=
          std::string::npos);
    CHECK(text.find("overall: pass") != std::string::npos);

    auto t = complex::homology_table(complex::assemble(generators::gen_ngon(4)));
    CHECK(homology_to_text(t).find("T^-1_1 = Z\n") != std::string::npos);
    CHECK(homology_to_text(t).find("T^1_0 = Z\n") != std::string::npos);
}

TEST_CASE("cell dumps")
{
    auto cx = complex::assemble(generators::gen_ngon(3));
    const std::string text = cell_to_text(cx, -1, 1);
    CHECK(text.find("C^-1_1: rank 3") != std::string::npos);
    CHECK(text.find("Y{1,2}: rank 1") != std::string::npos);
    util::Json j = cell_to_json(cx, 0, 0);
    CHECK(j["rank"] == 3);
    CHECK(j["summands"].size() == 1);
    CHECK(complex_to_text(cx).find("C^1_0: rank 3") != std::string::npos);
}
