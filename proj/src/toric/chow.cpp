#include "tdmono/toric/chow.hpp"

#include <algorithm>

#include "tdmono/error.hpp"
#include "tdmono/lattice/smith.hpp"

namespace tdmono::toric {

namespace {

bool all_units(const std::vector<Integer>& divisors)
{
    return std::all_of(divisors.begin(), divisors.end(), [](const Integer& d) { return d == 1; });
}

Integer dot(const std::vector<Integer>& u, const std::vector<long>& v)
{
    Integer s = 0;
    for (std::size_t t = 0; t < u.size(); ++t)
        s += u[t] * v[t];
    return s;
}

std::string cone_label(const Cone& c)
{
    std::string s = "{";
    for (std::size_t k = 0; k < c.size(); ++k)
        s += (k ? "," : "") + std::to_string(c[k]);
    return s + "}";
}

// Relations among [V(sigma)], dim sigma = k: one per cone tau of dimension
// k - 1 and basis vector u of tau^perp.
IntMatrix character_relations(const Fan& f, const std::vector<Cone>& lower,
                              const std::vector<Cone>& cones)
{
    std::vector<std::vector<Integer>> rows;
    for (const auto& tau : lower) {
        const IntMatrix perp = lattice::kernel_basis(f.ray_matrix(tau).transpose());
        for (std::size_t b = 0; b < perp.cols(); ++b) {
            const std::vector<Integer> u = perp.col(b);
            std::vector<Integer> row(cones.size());
            for (std::size_t s = 0; s < cones.size(); ++s) {
                const Cone& sigma = cones[s];
                if (!std::includes(sigma.begin(), sigma.end(), tau.begin(), tau.end()))
                    continue;
                for (int rho : sigma)
                    if (!std::binary_search(tau.begin(), tau.end(), rho))
                        row[s] = dot(u, f.rays[static_cast<std::size_t>(rho)]);
            }
            rows.push_back(std::move(row));
        }
    }
    return IntMatrix::from_rows(rows, cones.size());
}

} // namespace

std::size_t ToricChow::rank(int k) const
{
    if (k < 0 || k > dimension)
        return 0;
    return groups[static_cast<std::size_t>(k)].rank;
}

std::size_t ToricChow::cone_index(int k, const Cone& sigma) const
{
    const auto& list = cones.at(static_cast<std::size_t>(k));
    auto it = std::lower_bound(list.begin(), list.end(), sigma);
    if (it == list.end() || *it != sigma)
        throw InvalidFan("cone " + cone_label(sigma) + " is not in the fan");
    return static_cast<std::size_t>(it - list.begin());
}

std::vector<Integer> ToricChow::cone_class(const Cone& sigma) const
{
    const int k = static_cast<int>(sigma.size());
    return to_basis[static_cast<std::size_t>(k)].col(cone_index(k, sigma));
}

Integer ToricChow::degree(const std::vector<Integer>& top_class) const
{
    if (top_class.size() != 1)
        throw DimensionMismatch("degree of a class outside CH^top");
    return top_class[0];
}

ToricChow chow_from_fan(const Fan& f)
{
    CheckReport check = validate_fan(f);
    if (!check.passed())
        throw InvalidFan(check.to_text());

    ToricChow tc;
    tc.dimension = f.rank;
    tc.cones = f.cones_by_dimension();
    const auto n = static_cast<std::size_t>(f.rank);
    for (std::size_t k = 0; k <= n; ++k) {
        const std::vector<Cone>& gens = tc.cones[k];
        IntMatrix rel = k == 0 ? IntMatrix(0, gens.size())
                               : character_relations(f, tc.cones[k - 1], gens);
        lattice::SmithDecomposition snf = lattice::smith_normal_form(rel.transpose());
        if (!all_units(snf.diag))
            throw TorsionInToricChow("CH^" + std::to_string(k) + " has torsion");
        const std::size_t s = snf.diag.size();
        const std::size_t r = gens.size() - s;
        IntMatrix to_basis = snf.U.rows_range(s, r);
        IntMatrix lifts = snf.U_inv.columns(s, r);

        // Prefer a basis of orbit closures when one is reachable greedily.
        std::vector<std::size_t> chosen;
        for (std::size_t g = 0; g < gens.size() && chosen.size() < r; ++g) {
            IntMatrix cols(r, chosen.size() + 1);
            for (std::size_t t = 0; t <= chosen.size(); ++t) {
                const std::size_t src = t < chosen.size() ? chosen[t] : g;
                for (std::size_t row = 0; row < r; ++row)
                    cols(row, t) = to_basis(row, src);
            }
            lattice::SmithDecomposition part = lattice::smith_normal_form(cols);
            if (part.rank() == chosen.size() + 1 && all_units(part.diag))
                chosen.push_back(g);
        }
        std::vector<Cone> basis_cones;
        if (chosen.size() == r) {
            IntMatrix m(r, r);
            IntMatrix unit(gens.size(), r);
            for (std::size_t t = 0; t < r; ++t) {
                for (std::size_t row = 0; row < r; ++row)
                    m(row, t) = to_basis(row, chosen[t]);
                unit(chosen[t], t) = 1;
                basis_cones.push_back(gens[chosen[t]]);
            }
            to_basis = lattice::unimodular_inverse(m) * to_basis;
            lifts = unit;
        }
        tc.relations.push_back(std::move(rel));
        tc.to_basis.push_back(std::move(to_basis));
        tc.lifts.push_back(std::move(lifts));
        tc.basis_cones.push_back(std::move(basis_cones));
        tc.groups.push_back(lattice::FgAbGroup{r, {}});
    }

    IntMatrix& top = tc.to_basis[n];
    if (top.rows() != 1)
        throw InvalidFan("top Chow group has rank " + std::to_string(top.rows()));
    if (top.cols() > 0 && top(0, 0) == -1) {
        top = -top;
        tc.lifts[n] = -tc.lifts[n];
    }
    for (std::size_t c = 0; c < top.cols(); ++c)
        if (top(0, c) != 1)
            throw InvalidFan("maximal cone " + cone_label(tc.cones[n][c]) + " has degree " +
                             top(0, c).get_str());
    return tc;
}

IntMatrix divisor_action(const Fan& f, const ToricChow& tc, int rho, int k)
{
    const int n = tc.dimension;
    if (k < 0 || k > n)
        throw DegreeOutOfRange("no CH^" + std::to_string(k));
    if (k == n)
        return IntMatrix(0, tc.rank(k));
    const auto uk = static_cast<std::size_t>(k);
    const std::vector<Cone>& src = tc.cones[uk];
    const std::vector<Cone>& dst = tc.cones[uk + 1];
    IntMatrix g(dst.size(), src.size());

    auto add_join = [&](std::size_t col, const Cone& sigma, int extra, const Integer& coef) {
        Cone gamma = sigma;
        gamma.insert(std::upper_bound(gamma.begin(), gamma.end(), extra), extra);
        auto it = std::lower_bound(dst.begin(), dst.end(), gamma);
        if (it != dst.end() && *it == gamma)
            g(static_cast<std::size_t>(it - dst.begin()), col) += coef;
    };

    for (std::size_t col = 0; col < src.size(); ++col) {
        const Cone& sigma = src[col];
        auto pos = std::lower_bound(sigma.begin(), sigma.end(), rho);
        if (pos == sigma.end() || *pos != rho) {
            add_join(col, sigma, rho, 1);
            continue;
        }
        // Move D_rho off sigma with a character u: <u, v_rho> = 1 and u
        // vanishing on the other rays of sigma.
        const IntMatrix dual = lattice::left_inverse(f.ray_matrix(sigma));
        const std::size_t row = static_cast<std::size_t>(pos - sigma.begin());
        std::vector<Integer> u(static_cast<std::size_t>(n));
        for (std::size_t t = 0; t < u.size(); ++t)
            u[t] = dual(row, t);
        for (int other = 0; other < static_cast<int>(f.rays.size()); ++other) {
            if (std::binary_search(sigma.begin(), sigma.end(), other))
                continue;
            const Integer c = dot(u, f.rays[static_cast<std::size_t>(other)]);
            if (sgn(c) != 0)
                add_join(col, sigma, other, -c);
        }
    }
    return tc.to_basis[uk + 1] * g * tc.lifts[uk];
}

IntMatrix cone_action(const Fan& f, const ToricChow& tc, const Cone& sigma, int k)
{
    IntMatrix m = IntMatrix::identity(tc.rank(k));
    int degree = k;
    for (int rho : sigma) {
        if (degree > tc.dimension)
            return IntMatrix(0, tc.rank(k));
        m = divisor_action(f, tc, rho, degree) * m;
        ++degree;
    }
    return m;
}

std::vector<Integer> intersect(const Fan& f, const ToricChow& tc, const std::vector<Integer>& x,
                               int a, const std::vector<Integer>& y, int b)
{
    if (x.size() != tc.rank(a) || y.size() != tc.rank(b))
        throw DimensionMismatch("class vector does not match the Chow rank");
    std::vector<Integer> out(tc.rank(a + b));
    if (a + b > tc.dimension)
        return out;
    const std::vector<Integer> gens = tc.lifts[static_cast<std::size_t>(b)] * y;
    for (std::size_t s = 0; s < gens.size(); ++s) {
        if (sgn(gens[s]) == 0)
            continue;
        const std::vector<Integer> term =
            cone_action(f, tc, tc.cones[static_cast<std::size_t>(b)][s], a) * x;
        for (std::size_t t = 0; t < out.size(); ++t)
            out[t] += gens[s] * term[t];
    }
    return out;
}

bool is_ample(const Fan& f, const std::vector<long>& coefficients)
{
    if (coefficients.size() != f.rays.size())
        throw DimensionMismatch("ample class has " + std::to_string(coefficients.size()) +
                                " coefficients for " + std::to_string(f.rays.size()) + " rays");
    const auto n = static_cast<std::size_t>(f.rank);
    const auto by_dim = f.cones_by_dimension();
    for (const auto& sigma : by_dim[n]) {
        // m_sigma with <m, v_rho> = -a_rho on sigma
        const IntMatrix inv = lattice::unimodular_inverse(f.ray_matrix(sigma));
        std::vector<Integer> a_sigma;
        for (int rho : sigma)
            a_sigma.push_back(-coefficients[static_cast<std::size_t>(rho)]);
        const std::vector<Integer> m = inv.transpose() * a_sigma;
        for (int rho = 0; rho < static_cast<int>(f.rays.size()); ++rho) {
            if (std::binary_search(sigma.begin(), sigma.end(), rho))
                continue;
            if (dot(m, f.rays[static_cast<std::size_t>(rho)]) <=
                -coefficients[static_cast<std::size_t>(rho)])
                return false;
        }
    }
    return true;
}

strata::StratumChowData lefschetz_and_pairings(const Fan& f, const ToricChow& tc,
                                               const std::vector<long>& ample)
{
    if (!is_ample(f, ample))
        throw NotAmple("support function of the given divisor is not strictly convex");
    const int n = tc.dimension;
    strata::StratumChowData out;
    out.dim = n;
    for (int k = 0; k <= n; ++k)
        out.ranks.push_back(tc.rank(k));
    for (int k = 0; k < n; ++k) {
        IntMatrix xi(tc.rank(k + 1), tc.rank(k));
        for (int rho = 0; rho < static_cast<int>(f.rays.size()); ++rho)
            if (ample[static_cast<std::size_t>(rho)] != 0)
                xi += divisor_action(f, tc, rho, k) * Integer(ample[static_cast<std::size_t>(rho)]);
        out.lefschetz.push_back(std::move(xi));
    }
    for (int a = 0; a <= n; ++a) {
        IntMatrix p(tc.rank(a), tc.rank(n - a));
        for (std::size_t i = 0; i < p.rows(); ++i) {
            std::vector<Integer> x(p.rows());
            x[i] = 1;
            for (std::size_t j = 0; j < p.cols(); ++j) {
                std::vector<Integer> y(p.cols());
                y[j] = 1;
                p(i, j) = tc.degree(intersect(f, tc, x, a, y, n - a));
            }
        }
        out.pairings.push_back(std::move(p));
    }
    return out;
}

} // namespace tdmono::toric
