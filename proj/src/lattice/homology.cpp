#include "tdmono/lattice/homology.hpp"

#include <sstream>

#include "tdmono/error.hpp"

namespace tdmono::lattice {

std::string FgAbGroup::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
        os << "Z";
        if (rank > 1)
            os << '^' << rank;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first)
            os << " + ";
        os << "Z/" << t.get_str();
        first = false;
    }
    return os.str();
}

FgAbGroup FgAbGroup::from_divisors(std::size_t rank, const std::vector<Integer>& divisors)
{
    FgAbGroup g;
    g.rank = rank;
    for (const auto& d : divisors)
        if (d != 1)
            g.torsion.push_back(abs(d));
    return g;
}

std::size_t SubquotientPresentation::first_torsion_index() const
{
    std::size_t s = 0;
    while (s < divisors.size() && divisors[s] == 1)
        ++s;
    return s;
}

IntMatrix SubquotientPresentation::free_projection() const
{
    const std::size_t s = divisors.size();
    return quotient_U.rows_range(s, kernel_rank() - s) * kernel_left_inverse;
}

IntMatrix SubquotientPresentation::free_lifts() const
{
    const std::size_t s = divisors.size();
    return kernel_basis * quotient_U_inv.columns(s, kernel_rank() - s);
}

IntMatrix SubquotientPresentation::torsion_lifts() const
{
    const std::size_t t0 = first_torsion_index();
    return kernel_basis * quotient_U_inv.columns(t0, divisors.size() - t0);
}

IntMatrix SubquotientPresentation::torsion_projection() const
{
    const std::size_t t0 = first_torsion_index();
    return quotient_U.rows_range(t0, divisors.size() - t0) * kernel_left_inverse;
}

bool SubquotientPresentation::contains_cycle(const std::vector<Integer>& z) const
{
    if (z.size() != ambient_rank)
        return false;
    return kernel_basis * (kernel_left_inverse * z) == z;
}

bool SubquotientPresentation::contains_boundary(const std::vector<Integer>& z) const
{
    if (!contains_cycle(z))
        return false;
    std::vector<Integer> y = quotient_U * (kernel_left_inverse * z);
    for (std::size_t k = 0; k < y.size(); ++k) {
        if (k < divisors.size()) {
            if (!mpz_divisible_p(y[k].get_mpz_t(), divisors[k].get_mpz_t()))
                return false;
        } else if (sgn(y[k]) != 0) {
            return false;
        }
    }
    return true;
}

SubquotientPresentation homology(const IntMatrix& incoming, const IntMatrix& outgoing)
{
    if (incoming.rows() != outgoing.cols())
        throw DimensionMismatch("incoming map lands in rank " + std::to_string(incoming.rows()) +
                                " but outgoing map starts at rank " +
                                std::to_string(outgoing.cols()));
    if (!(outgoing * incoming).is_zero())
        throw CompositionNotZero("outgoing * incoming is not the zero map");

    SubquotientPresentation p;
    p.ambient_rank = incoming.rows();
    p.image_gens = incoming;
    p.kernel_basis = kernel_basis(outgoing);
    const std::size_t r = p.kernel_basis.cols();
    p.kernel_left_inverse = r == 0 ? IntMatrix(0, p.ambient_rank) : left_inverse(p.kernel_basis);
    p.image_in_kernel = p.kernel_left_inverse * incoming;
    if (p.kernel_basis * p.image_in_kernel != incoming)
        throw CompositionNotZero("image is not contained in the kernel lattice");

    SmithDecomposition snf = smith_normal_form(p.image_in_kernel);
    p.quotient_U = std::move(snf.U);
    p.quotient_U_inv = std::move(snf.U_inv);
    p.divisors = std::move(snf.diag);
    p.group = FgAbGroup::from_divisors(r - p.divisors.size(), p.divisors);
    return p;
}

namespace {

bool lands_in_boundaries(const SubquotientPresentation& dst, const IntMatrix& images)
{
    for (std::size_t c = 0; c < images.cols(); ++c)
        if (!dst.contains_boundary(images.col(c)))
            return false;
    return true;
}

} // namespace

InducedMap induced_map(const SubquotientPresentation& src, const SubquotientPresentation& dst,
                       const IntMatrix& ambient_map)
{
    if (ambient_map.cols() != src.ambient_rank || ambient_map.rows() != dst.ambient_rank)
        throw DimensionMismatch("ambient map has shape " + std::to_string(ambient_map.rows()) +
                                "x" + std::to_string(ambient_map.cols()) + ", expected " +
                                std::to_string(dst.ambient_rank) + "x" +
                                std::to_string(src.ambient_rank));

    const IntMatrix cycles = ambient_map * src.kernel_basis;
    for (std::size_t c = 0; c < cycles.cols(); ++c)
        if (!dst.contains_cycle(cycles.col(c)))
            throw NotChainCompatible("ambient map does not send cycles to cycles");
    if (!lands_in_boundaries(dst, ambient_map * src.image_gens))
        throw NotChainCompatible("ambient map does not send boundaries to boundaries");

    InducedMap out;
    out.free = dst.free_projection() * ambient_map * src.free_lifts();
    out.torsion = dst.torsion_projection() * ambient_map * src.torsion_lifts();
    for (std::size_t r = 0; r < out.torsion.rows(); ++r) {
        const Integer& m = dst.group.torsion[r];
        for (std::size_t c = 0; c < out.torsion.cols(); ++c)
            mpz_fdiv_r(out.torsion(r, c).get_mpz_t(), out.torsion(r, c).get_mpz_t(),
                       m.get_mpz_t());
    }
    return out;
}

IsogenyVerdict isogeny_verdict(const IntMatrix& f)
{
    IsogenyVerdict v;
    if (!f.is_square())
        return v;
    if (f.rows() == 0) {
        v.is_isogeny = true;
        v.cokernel_exponent = 1;
        v.cokernel_order = 1;
        return v;
    }
    SmithDecomposition snf = smith_normal_form(f);
    if (snf.rank() != f.rows())
        return v;
    v.is_isogeny = true;
    v.cokernel_exponent = snf.diag.back();
    Integer order = 1;
    for (const auto& d : snf.diag) {
        order *= d;
        if (d != 1)
            v.cokernel_invariants.push_back(d);
    }
    v.cokernel_order = order;
    return v;
}

} // namespace tdmono::lattice
