#include "tdmono/report/cohomology_report.hpp"

#include <algorithm>

#include "tdmono/error.hpp"
#include "tdmono/strata/validate.hpp"

namespace tdmono::report {

using complex::ChowComplex;
using complex::HomologyTable;
using complex::support;

namespace {

std::string pq(int p, int q)
{
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::size_t hodge_at(const HodgeTable& h, int p, int q)
{
    if (p < 0 || q < 0 || p >= static_cast<int>(h.size()))
        return 0;
    const auto& row = h[static_cast<std::size_t>(p)];
    return q < static_cast<int>(row.size()) ? row[static_cast<std::size_t>(q)] : 0;
}

} // namespace

std::vector<PageEntry> e1_page(const ChowComplex& cx)
{
    std::vector<PageEntry> out;
    for (auto [i, j] : support(cx.dimension()))
        out.push_back({i, 2 * j, cx.rank(i, j), {}, -j});
    return out;
}

std::vector<PageEntry> e2_page(const HomologyTable& t)
{
    std::vector<PageEntry> out;
    for (auto [i, j] : support(t.dimension)) {
        const auto& g = t.group(i, j);
        out.push_back({i, 2 * j, g.rank, g.torsion, -j});
    }
    return out;
}

std::vector<GradedPiece> monodromy_graded(const HomologyTable& t, int n)
{
    const int d = t.dimension;
    if (n < 0 || n > 2 * d)
        throw DegreeOutOfRange("H^" + std::to_string(n) + " is outside 0.." +
                               std::to_string(2 * d));
    std::vector<GradedPiece> out;
    for (int i = -d; i <= d; ++i) {
        if ((n - i) % 2 != 0)
            continue;
        const int j = (n - i) / 2;
        if (!complex::in_support(d, i, j))
            continue;
        const auto& g = t.group(i, j);
        out.push_back({n, i, j, -i, g.rank, g.torsion, -j, 2 * j, j});
    }
    return out;
}

std::vector<std::size_t> betti_numbers(const HomologyTable& t)
{
    std::vector<std::size_t> b(static_cast<std::size_t>(2 * t.dimension) + 1);
    for (auto [i, j] : support(t.dimension))
        b[static_cast<std::size_t>(i + 2 * j)] += t.group(i, j).rank;
    return b;
}

HodgeTable hodge_numbers(const HomologyTable& t)
{
    const auto size = static_cast<std::size_t>(t.dimension) + 1;
    HodgeTable h(size, std::vector<std::size_t>(size));
    for (int p = 0; p <= t.dimension; ++p)
        for (int q = 0; q <= t.dimension; ++q)
            h[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = t.group(q - p, p).rank;
    return h;
}

CheckReport check_hodge_inequalities(const HodgeTable& h)
{
    CheckReport report;
    report.name = "hodge-inequalities";
    const int d = static_cast<int>(h.size()) - 1;
    for (int n = 0; n <= 2 * d; ++n) {
        const int middle = (n + 1) / 2;
        for (int p = n; p > middle; --p) {
            const std::size_t hi = hodge_at(h, p, n - p);
            const std::size_t lo = hodge_at(h, p - 1, n - p + 1);
            if (hi > lo)
                report.fail("chain-violated", "n=" + std::to_string(n),
                            "h^" + pq(p, n - p) + " = " + std::to_string(hi) + " > h^" +
                                pq(p - 1, n - p + 1) + " = " + std::to_string(lo));
        }
    }
    for (int p = 0; p <= d; ++p)
        for (int q = p + 1; q <= d; ++q)
            if (hodge_at(h, p, q) != hodge_at(h, q, p))
                report.fail("hodge-symmetry", "h^" + pq(p, q),
                            std::to_string(hodge_at(h, p, q)) + " != h^" + pq(q, p) + " = " +
                                std::to_string(hodge_at(h, q, p)));
    return report;
}

CheckReport check_weight_monodromy(const complex::DualityCertificates& cert)
{
    CheckReport report;
    report.name = "weight-monodromy";
    for (const auto& c : cert.isogenies) {
        if (c.i == 0)
            continue;
        const int n = c.i + 2 * c.j;
        const std::string where = "H^" + std::to_string(n) + ", levels " +
                                  std::to_string(c.i) + " -> " + std::to_string(-c.i);
        if (!c.verdict.is_isogeny)
            report.fail("not-isogeny", where,
                        "N^" + std::to_string(c.i) + " from rank " +
                            std::to_string(c.source.rank) + " to rank " +
                            std::to_string(c.target.rank));
        else
            report.note(where + ": N^" + std::to_string(c.i) + " isogeny, discriminant " +
                        c.verdict.cokernel_exponent->get_str());
    }
    return report;
}

CheckReport check_euler(const ChowComplex& cx, const HomologyTable& t)
{
    CheckReport report;
    report.name = "euler";
    long e1 = 0, e2 = 0, betti = 0;
    for (auto [i, j] : support(cx.dimension())) {
        const long sign = i % 2 == 0 ? 1 : -1;
        e1 += sign * static_cast<long>(cx.rank(i, j));
        e2 += sign * static_cast<long>(t.group(i, j).rank);
    }
    const auto b = betti_numbers(t);
    for (std::size_t n = 0; n < b.size(); ++n)
        betti += (n % 2 == 0 ? 1 : -1) * static_cast<long>(b[n]);
    if (e1 != e2 || e2 != betti)
        report.fail("euler-mismatch", "pages",
                    "E1 gives " + std::to_string(e1) + ", E2 gives " + std::to_string(e2) +
                        ", Betti numbers give " + std::to_string(betti));
    else
        report.note("Euler characteristic " + std::to_string(e1));
    return report;
}

CheckReport check_duality(const HomologyTable& t)
{
    CheckReport report;
    report.name = "duality";
    const int d = t.dimension;
    const auto b = betti_numbers(t);
    for (int n = 0; n <= 2 * d; ++n)
        if (b[static_cast<std::size_t>(n)] != b[static_cast<std::size_t>(2 * d - n)])
            report.fail("poincare", "b_" + std::to_string(n),
                        std::to_string(b[static_cast<std::size_t>(n)]) + " != b_" +
                            std::to_string(2 * d - n));
    for (auto [i, j] : support(d)) {
        const std::size_t r = t.group(i, j).rank;
        if (r != t.group(-i, d - j).rank)
            report.fail("pairing-rank", "T" + pq(i, j), "rank differs from T" + pq(-i, d - j));
        if (r != t.group(-i, j + i).rank)
            report.fail("monodromy-rank", "T" + pq(i, j),
                        "rank differs from T" + pq(-i, j + i));
    }
    return report;
}

CheckReport check_parity(const std::vector<PageEntry>& e1, const std::vector<PageEntry>& e2,
                         const std::vector<std::vector<GradedPiece>>& graded)
{
    CheckReport report;
    report.name = "parity";
    for (const auto* page : {&e1, &e2})
        for (const auto& e : *page)
            if (e.q % 2 != 0 && (e.rank != 0 || !e.torsion.empty()))
                report.fail("odd-row", "E" + pq(e.p, e.q));
    for (const auto& pieces : graded)
        for (const auto& g : pieces)
            if ((g.n - g.level) % 2 != 0 || g.n != g.i + 2 * g.j)
                report.fail("wrong-parity-level",
                            "H^" + std::to_string(g.n) + " level " + std::to_string(g.level));
    return report;
}

bool CohomologyReport::passed() const
{
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const CheckReport& r) { return r.passed(); });
}

CohomologyReport build_report(const strata::DegenerationModel& m)
{
    CohomologyReport r;
    r.model_name = m.name;
    r.dimension = m.dimension;
    const ChowComplex cx = complex::assemble(m);
    CheckReport chain = complex::check_chain_identities(cx);
    if (!chain.passed())
        throw CompositionNotZero("chain identities fail:\n" + chain.to_text());
    const HomologyTable t = complex::homology_table(cx);

    r.e1 = e1_page(cx);
    r.e2 = e2_page(t);
    for (int n = 0; n <= 2 * m.dimension; ++n)
        r.graded.push_back(monodromy_graded(t, n));
    r.betti = betti_numbers(t);
    r.hodge = hodge_numbers(t);
    r.certificates = complex::certify_monodromy_and_duality(cx, t);

    r.verdicts.push_back(std::move(chain));
    r.verdicts.push_back(r.certificates.checks);
    r.verdicts.push_back(check_weight_monodromy(r.certificates));
    r.verdicts.push_back(check_duality(t));
    r.verdicts.push_back(check_hodge_inequalities(r.hodge));
    r.verdicts.push_back(check_euler(cx, t));
    r.verdicts.push_back(check_parity(r.e1, r.e2, r.graded));
    r.declared_conditions = strata::declared_conditions(m);
    return r;
}

} // namespace tdmono::report
