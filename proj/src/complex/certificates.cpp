#include "tdmono/complex/homology_table.hpp"

namespace tdmono::complex {

namespace {

std::string cell_label(int i, int j)
{
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace

DualityCertificates certify_monodromy_and_duality(const ChowComplex& cx, const HomologyTable& t)
{
    DualityCertificates out;
    out.checks.name = "monodromy-and-duality";
    const int d = cx.dimension();

    for (int i = 0; i <= d; ++i) {
        for (int j = 0; j <= d - i; ++j) {
            IsogenyCertificate c;
            c.i = i;
            c.j = j;
            const auto& src = t.at(-i, j + i);
            const auto& dst = t.at(i, j);
            c.source = src.group;
            c.target = dst.group;
            c.induced = lattice::induced_map(src, dst, cx.monodromy_power(-i, j + i, i)).free;
            c.verdict = lattice::isogeny_verdict(c.induced);
            const std::string what = "N^" + std::to_string(i) + " : T" + cell_label(-i, j + i) +
                                     " -> T" + cell_label(i, j);
            if (!c.verdict.is_isogeny)
                out.checks.fail("not-isogeny", what,
                                "free ranks " + std::to_string(src.free_rank()) + " and " +
                                    std::to_string(dst.free_rank()) + ", induced " +
                                    c.induced.to_string());
            else
                out.checks.note(what + ": cokernel exponent " +
                                c.verdict.cokernel_exponent->get_str());
            out.isogenies.push_back(std::move(c));
        }
    }

    for (auto [i, j] : support(d)) {
        PairingCertificate c;
        c.i = i;
        c.j = j;
        const auto& left = t.at(i, j);
        const auto& right = t.at(-i, d - j);
        const IntMatrix q = cx.pairing(i, j);
        c.well_defined = (left.kernel_basis.transpose() * q * right.image_gens).is_zero() &&
                         (left.image_gens.transpose() * q * right.kernel_basis).is_zero();
        c.gram = left.free_lifts().transpose() * q * right.free_lifts();
        const std::string what = "T" + cell_label(i, j) + " x T" + cell_label(-i, d - j);
        if (!c.well_defined)
            out.checks.fail("pairing-not-well-defined", what);
        if (c.gram.is_square()) {
            c.verdict = lattice::gram_nondegenerate(c.gram);
        }
        if (!c.verdict.nondegenerate)
            out.checks.fail("pairing-degenerate", what, "Gram " + c.gram.to_string());
        out.pairings.push_back(std::move(c));
    }
    return out;
}

} // namespace tdmono::complex
