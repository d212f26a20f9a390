#include "tdmono/lattice/forms.hpp"

#include "tdmono/error.hpp"

namespace tdmono::lattice {

NondegeneracyVerdict gram_nondegenerate(const IntMatrix& p)
{
    if (!p.is_square())
        throw NotSquare("Gram matrix is " + std::to_string(p.rows()) + "x" +
                        std::to_string(p.cols()));
    NondegeneracyVerdict v;
    v.discriminant = abs(determinant(p));
    v.nondegenerate = sgn(v.discriminant) != 0;
    return v;
}

std::vector<Integer> leading_principal_minors(const IntMatrix& p)
{
    if (!p.is_square())
        throw NotSquare("minors of a non-square matrix");
    // Without row exchanges, the Bareiss pivots are exactly the leading minors.
    const std::size_t n = p.rows();
    IntMatrix m(p);
    std::vector<Integer> minors;
    Integer prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        minors.push_back(m(k, k));
        if (sgn(m(k, k)) == 0) {
            // Remaining minors need pivoting; compute them directly.
            for (std::size_t t = k + 2; t <= n; ++t)
                minors.push_back(determinant(p.block(0, 0, t, t)));
            return minors;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            for (std::size_t c = k + 1; c < n; ++c) {
                m(r, c) = m(k, k) * m(r, c) - m(r, k) * m(k, c);
                mpz_divexact(m(r, c).get_mpz_t(), m(r, c).get_mpz_t(), prev.get_mpz_t());
            }
            m(r, k) = 0;
        }
        prev = m(k, k);
    }
    return minors;
}

bool positive_definite(const IntMatrix& p)
{
    if (!p.is_symmetric())
        throw NotSymmetric("form is not symmetric: " + p.to_string());
    for (const auto& minor : leading_principal_minors(p))
        if (sgn(minor) <= 0)
            return false;
    return true;
}

} // namespace tdmono::lattice
