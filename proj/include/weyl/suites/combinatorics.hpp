#ifndef WEYL_SUITES_COMBINATORICS_HPP
#define WEYL_SUITES_COMBINATORICS_HPP

#include <weyl/suites/common.hpp>

namespace weyl::suites
{

// b_s = sum over k with N-k even, sum_l C(N,k) C(k,l) C(N-k,s-l) (-1)^{s-l}.
// For N = 2n this is the coefficient of H^s q H^{2n-s} in
// sum_k C(2n,2k) {[q,H]_{2n-2k}, H}_{2k}.
inline mpz_class b_coefficient(unsigned big_n, unsigned s)
{
    mpz_class total = 0;
    for (unsigned k = big_n % 2; k <= big_n; k += 2) {
        for (unsigned l = 0; l <= k && l <= s; ++l) {
            mpz_class t = binomial(big_n, k) * binomial(k, l) * binomial(big_n - k, s - l);
            total += (s - l) % 2 == 0 ? t : mpz_class(-t);
        }
    }
    return total;
}

// sum_k C(2n,2k) C(2k,i) C(2n-2k,j)
inline mpz_class trinomial_sum(unsigned n, unsigned i, unsigned j)
{
    mpz_class total = 0;
    for (unsigned k = 0; k <= n; ++k) {
        total += binomial(2 * n, 2 * k) * binomial(2 * k, i) * binomial(2 * n - 2 * k, j);
    }
    return total;
}

// For n >= 1: b_s over N = 2n (and, as an empirical extension, N = 2n + 1)
// vanishes for 0 < s < N and equals 2^{N-1} at s = 0, N; the differentiated
// identity holds for i + j <= 2n - 1 and at i = j = n.
inline VerificationReport combinatorial_sums(unsigned n)
{
    return run_instance("combinatorics", {{"n", n}}, [&](VerificationReport &r) {
        if (n == 0) {
            throw PreconditionViolation("combinatorial sums need n >= 1");
        }
        for (unsigned big_n : {2 * n, 2 * n + 1}) {
            for (unsigned s = 0; s <= big_n; ++s) {
                mpz_class expected = (s == 0 || s == big_n) ? pow2(big_n - 1) : mpz_class(0);
                mpz_class got = b_coefficient(big_n, s);
                if (got != expected) {
                    r.fail("b_" + std::to_string(s) + " for N=" + std::to_string(big_n) + ": computed " + got.get_str()
                           + ", expected " + expected.get_str());
                }
            }
        }
        for (unsigned i = 0; i <= 2 * n; ++i) {
            for (unsigned j = 0; i + j <= 2 * n - 1; ++j) {
                mpz_class expected = binomial(2 * n, i) * binomial(2 * n - i, j) * pow2(2 * n - i - j - 1);
                mpz_class got = trinomial_sum(n, i, j);
                if (got != expected) {
                    r.fail("trinomial (i=" + std::to_string(i) + ", j=" + std::to_string(j) + "): computed "
                           + got.get_str() + ", expected " + expected.get_str());
                }
            }
        }
        mpz_class middle = n % 2 == 0 ? binomial(2 * n, n) : mpz_class(0);
        mpz_class got = trinomial_sum(n, n, n);
        if (got != middle) {
            r.fail("trinomial (i=j=n): computed " + got.get_str() + ", expected " + middle.get_str());
        }
    });
}

} // namespace weyl::suites

#endif
