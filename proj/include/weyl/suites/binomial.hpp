#ifndef WEYL_SUITES_BINOMIAL_HPP
#define WEYL_SUITES_BINOMIAL_HPP

#include <algorithm>
#include <vector>

#include <weyl/suites/common.hpp>

namespace weyl::suites
{

// sum_{k=0}^{min(m,n)} A_k(z) C(m,k) C(m-k+l, n-k)  and
// sum_{k=0}^{min(m,n)} B_k(z) C(m,k) C(l, n-k)
// with (A_k, B_k) = (z^k, (z+1)^k) or (E_k(z), E_k(z+1)).
inline std::pair<RatPoly, RatPoly> binomial_sides(unsigned m, unsigned n, unsigned l, bool euler_version)
{
    RatPoly lhs, rhs;
    for (unsigned k = 0; k <= std::min(m, n); ++k) {
        RatPoly a = euler_version ? euler_polynomial(k) : RatPoly::monomial(1, k);
        RatPoly b = a.shift(1);
        lhs += a * GaussianRational(Rational(binomial(m, k) * binomial(m - k + l, n - k)));
        rhs += b * GaussianRational(Rational(binomial(m, k) * binomial(l, n - k)));
    }
    return {lhs, rhs};
}

inline VerificationReport verify_binomial(unsigned m, unsigned n, unsigned l, bool euler_version)
{
    return run_instance("binomial", {{"m", m}, {"n", n}, {"l", l}, {"euler", euler_version}}, [&](VerificationReport &r) {
        auto [lhs, rhs] = binomial_sides(m, n, l, euler_version);
        if (lhs != rhs) {
            auto diff = lhs - rhs;
            unsigned d = diff.terms().begin()->first;
            r.fail("coefficient of z^" + std::to_string(d) + " differs by " + diff.terms().begin()->second.to_string()
                   + " (lhs - rhs = " + diff.to_string("z") + ")");
        }
        // Chu-Vandermonde: C(m-j+l, n-j) = sum_k C(m-j,k) C(l, n-k-j)
        for (unsigned j = 0; j <= std::min(m, n); ++j) {
            mpz_class sum = 0;
            for (unsigned k = 0; k <= m - j; ++k) {
                sum += binomial(m - j, k) * binomial(l, static_cast<long>(n) - k - j);
            }
            if (sum != binomial(m - j + l, n - j)) {
                r.fail("Chu-Vandermonde at j=" + std::to_string(j) + ": " + sum.get_str() + " vs "
                       + binomial(m - j + l, n - j).get_str());
            }
        }
    });
}

} // namespace weyl::suites

#endif
