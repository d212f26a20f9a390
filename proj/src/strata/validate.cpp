#include "tdmono/strata/validate.hpp"

#include <algorithm>

#include "tdmono/error.hpp"
#include "tdmono/lattice/forms.hpp"
#include "tdmono/lattice/smith.hpp"
#include "tdmono/strata/model_io.hpp"

namespace tdmono::strata {

using lattice::Integer;

namespace {

std::string triple(const Subset& from, const Subset& to, int degree)
{
    return "(" + subset_label(from) + "->" + subset_label(to) + ", degree " +
           std::to_string(degree) + ")";
}

std::string at_degree(const Subset& s, int i)
{
    return "stratum " + subset_label(s) + ", i=" + std::to_string(i);
}

bool shape_ok(const DegenerationModel& m, const Subset& s)
{
    const StratumChowData* st = m.stratum(s);
    return st && stratum_shape_problem(*st).empty();
}

} // namespace

CheckReport validate_structure(const DegenerationModel& m)
{
    CheckReport report;
    report.name = "structure";

    if (m.dimension < 0)
        report.fail("negative-dimension", "model");
    if (m.num_components < 1)
        report.fail("no-components", "model");

    for (const auto& [s, data] : m.strata) {
        const std::string where = "stratum " + subset_label(s);
        bool subset_ok = !s.empty();
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] < 1 || s[k] > m.num_components || (k > 0 && s[k - 1] >= s[k]))
                subset_ok = false;
        }
        if (!subset_ok)
            report.fail("bad-index-set", where, "must be strictly ascending within 1..n");
        if (static_cast<int>(s.size()) > m.dimension + 1)
            report.fail("too-many-components", where,
                        "|I| exceeds dimension + 1 = " + std::to_string(m.dimension + 1));
        if (data.dim != m.stratum_dim(s))
            report.fail("dimension-formula", where,
                        "dim " + std::to_string(data.dim) + ", expected " +
                            std::to_string(m.stratum_dim(s)));
        if (auto problem = stratum_shape_problem(data); !problem.empty()) {
            report.fail("shape", where, problem);
            continue;
        }
        if (data.ranks[0] < 1)
            report.fail("no-fundamental-class", where, "rank CH^0 must be at least 1");
        for (std::size_t k = 0; s.size() > 1 && k < s.size(); ++k) {
            Subset face = s;
            face.erase(face.begin() + static_cast<long>(k));
            if (!m.stratum(face))
                report.fail("downward-closure", where, subset_label(face) + " is missing");
        }
        const int d = data.dim;
        for (int a = 0; a <= d; ++a) {
            const auto& p = data.pairings[static_cast<std::size_t>(a)];
            const auto& q = data.pairings[static_cast<std::size_t>(d - a)];
            if (p != q.transpose())
                report.fail("pairing-asymmetry", where,
                            "P_" + std::to_string(a) + " != P_" + std::to_string(d - a) + "^T");
        }
        for (int a = 0; a < d; ++a) {
            // L_a^T P_{a+1} = P_a L_{d-a-1}
            const auto ua = static_cast<std::size_t>(a);
            const auto lhs = data.lefschetz[ua].transpose() * data.pairings[ua + 1];
            const auto rhs =
                data.pairings[ua] * data.lefschetz[static_cast<std::size_t>(d - a - 1)];
            if (lhs != rhs)
                report.fail("lefschetz-not-self-adjoint", where,
                            "xi on CH^" + std::to_string(a) + " is not adjoint to xi on CH^" +
                                std::to_string(d - a - 1));
        }
    }

    // Every (J, s, degree) needed by the complexes.
    for (const auto& [big, data] : m.strata) {
        if (big.size() < 2 || !shape_ok(m, big))
            continue;
        for (std::size_t k = 0; k < big.size(); ++k) {
            Subset small = big;
            small.erase(small.begin() + static_cast<long>(k));
            if (!shape_ok(m, small))
                continue;
            for (int a = 0; a <= data.dim; ++a) {
                const bool r_needed = m.chow_rank(big, a) * m.chow_rank(small, a) > 0;
                if (r_needed && !m.restriction(small, big, a))
                    report.fail("missing-restriction", triple(small, big, a));
                const bool g_needed = m.chow_rank(small, a + 1) * m.chow_rank(big, a) > 0;
                if (g_needed && !m.gysin(big, small, a))
                    report.fail("missing-gysin", triple(big, small, a));
            }
        }
    }
    for (const auto& [key, matrix] : m.restrictions)
        if (auto p = incidence_shape_problem(m, key, matrix, false); !p.empty())
            report.fail("shape", "restriction " + triple(key.from, key.to, key.degree), p);
    for (const auto& [key, matrix] : m.gysins)
        if (auto p = incidence_shape_problem(m, key, matrix, true); !p.empty())
            report.fail("shape", "gysin " + triple(key.from, key.to, key.degree), p);
    return report;
}

CheckReport check_hard_lefschetz(const DegenerationModel& m)
{
    CheckReport report;
    report.name = "hard-lefschetz";
    for (const auto& [s, data] : m.strata) {
        if (!stratum_shape_problem(data).empty())
            continue;
        for (int i = 0; 2 * i <= data.dim; ++i) {
            if (data.rank(i) != data.rank(data.dim - i)) {
                report.fail("rank-mismatch", at_degree(s, i),
                            "rank CH^" + std::to_string(i) + " = " +
                                std::to_string(data.rank(i)) + " but rank CH^" +
                                std::to_string(data.dim - i) + " = " +
                                std::to_string(data.rank(data.dim - i)));
                continue;
            }
            const Integer det = lattice::determinant(data.lefschetz_power(i, data.dim - 2 * i));
            if (sgn(det) == 0)
                report.fail("lefschetz-degenerate", at_degree(s, i),
                            "xi^" + std::to_string(data.dim - 2 * i) + " is singular");
            else
                report.note(at_degree(s, i) + ": det xi^" + std::to_string(data.dim - 2 * i) +
                            " = " + det.get_str());
        }
    }
    return report;
}

CheckReport check_hodge_index(const DegenerationModel& m)
{
    CheckReport report;
    report.name = "hodge-index";
    for (const auto& [s, data] : m.strata) {
        if (!stratum_shape_problem(data).empty())
            continue;
        const int d = data.dim;
        for (int i = 0; 2 * i <= d; ++i) {
            const auto ui = static_cast<std::size_t>(i);
            lattice::IntMatrix primitive;
            if (d - i + 1 > d)
                primitive = lattice::IntMatrix::identity(data.rank(i));
            else
                primitive = lattice::kernel_basis(data.lefschetz_power(i, d - 2 * i + 1));
            const lattice::IntMatrix xi = data.lefschetz_power(i, d - 2 * i);
            lattice::IntMatrix gram = primitive.transpose() * data.pairings[ui] * xi * primitive;
            if (i % 2 == 1)
                gram = -gram;
            try {
                if (!lattice::positive_definite(gram))
                    report.fail("hodge-index", at_degree(s, i),
                                "Gram matrix on primitive classes " + gram.to_string() +
                                    " is not positive definite");
                else
                    report.note(at_degree(s, i) + ": primitive rank " +
                                std::to_string(primitive.cols()) + ", Gram " + gram.to_string());
            } catch (const NotSymmetric&) {
                report.fail("gram-not-symmetric", at_degree(s, i), gram.to_string());
            }
        }
    }
    return report;
}

CheckReport check_adjointness(const DegenerationModel& m)
{
    CheckReport report;
    report.name = "adjointness";
    for (const auto& [key, restriction] : m.restrictions) {
        const StratumChowData* small = m.stratum(key.from);
        const StratumChowData* big = m.stratum(key.to);
        if (!small || !big || !stratum_shape_problem(*small).empty() ||
            !stratum_shape_problem(*big).empty())
            continue;
        const int a = key.degree;
        const int b = big->dim - a;
        const lattice::IntMatrix* gysin = m.gysin(key.to, key.from, b);
        lattice::IntMatrix g = gysin ? *gysin
                                     : lattice::IntMatrix(small->rank(b + 1), big->rank(b));
        try {
            const auto lhs = restriction.transpose() * big->pairings[static_cast<std::size_t>(a)];
            const auto rhs = small->pairings[static_cast<std::size_t>(a)] * g;
            if (lhs != rhs)
                report.fail("adjointness", triple(key.from, key.to, a),
                            "restriction in degree " + std::to_string(a) +
                                " is not adjoint to the Gysin map in degree " +
                                std::to_string(b));
        } catch (const DimensionMismatch& e) {
            report.fail("shape", triple(key.from, key.to, a), e.what());
        }
    }
    if (m.restrictions.empty())
        report.note("no incidences; vacuously adjoint");
    return report;
}

CheckReport validate_all(const DegenerationModel& m)
{
    CheckReport all;
    all.name = "validate";
    for (const auto& r : {validate_structure(m), check_hard_lefschetz(m), check_hodge_index(m),
                          check_adjointness(m)}) {
        for (const auto& f : r.failures)
            all.failures.push_back({r.name + "/" + f.code, f.location, f.detail});
    }
    return all;
}

std::vector<std::string> declared_conditions(const DegenerationModel& m)
{
    return {
        std::string("etale and crystalline cycle maps are isomorphisms mod torsion: ") +
            (m.flags.claims_conditions_bc ? "declared" : "not declared") + " (not verified)",
        std::string("special fibre is ordinary: ") +
            (m.flags.claims_ordinary ? "declared" : "not declared") + " (not verified)",
    };
}

} // namespace tdmono::strata
