#ifndef WEYL_SPECIAL_SEQUENCES_HPP
#define WEYL_SPECIAL_SEQUENCES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <weyl/ratpoly.hpp>

namespace weyl
{

// E_0(0), ..., E_n(0) from E_n(0) = -1/2 sum_{k<n} C(n,k) E_k(0), which is
// the midpoint relation E_n(x) + E_n(x+1) = 2x^n read at x = 0.
inline std::vector<Rational> euler_values_at_zero(unsigned n)
{
    std::vector<Rational> e;
    e.reserve(n + 1);
    e.emplace_back(1);
    for (unsigned m = 1; m <= n; ++m) {
        Rational acc;
        for (unsigned k = 0; k < m; ++k) {
            acc += Rational(binomial(m, k)) * e[k];
        }
        e.push_back(acc * Rational(-1, 2));
    }
    return e;
}

inline Rational euler_at_zero(unsigned n) { return euler_values_at_zero(n).back(); }

// E_n(x) = sum_k C(n,k) E_k(0) x^{n-k} (Appell expansion).
inline RatPoly euler_polynomial(unsigned n)
{
    auto e0 = euler_values_at_zero(n);
    std::vector<GaussianRational> coeffs(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        coeffs[n - k] = Rational(binomial(n, k)) * e0[k];
    }
    return RatPoly::from_coefficients(coeffs);
}

// E_n(x + 1/2)
inline RatPoly shifted_euler(unsigned n) { return euler_polynomial(n).shift(Rational(1, 2)); }

// Euler number 2^n E_n(1/2); integral for every n.
inline Rational euler_number(unsigned n)
{
    auto v = euler_polynomial(n).evaluate(Rational(1, 2)).re();
    auto r = v * Rational(pow2(n));
    if (!r.is_integer()) {
        throw InvariantViolation("Euler number " + std::to_string(n) + " is not an integer: " + r.to_string());
    }
    return r;
}

// B_0, ..., B_n from sum_{k=0}^{m} C(m+1,k) B_k = 0.
inline std::vector<Rational> bernoulli_numbers(unsigned n)
{
    std::vector<Rational> b;
    b.reserve(n + 1);
    b.emplace_back(1);
    for (unsigned m = 1; m <= n; ++m) {
        Rational acc;
        for (unsigned k = 0; k < m; ++k) {
            acc += Rational(binomial(m + 1, k)) * b[k];
        }
        b.push_back(-acc / Rational(m + 1));
    }
    return b;
}

inline Rational bernoulli_number(unsigned n) { return bernoulli_numbers(n).back(); }

// Solves (1/2)P(x) + (1/2)P(x+1) = x^n for the degree-n polynomial P by back
// substitution on the coefficient vector. The system matrix has entries
// M[j][k] = (delta_jk + C(k,j)) / 2, upper triangular with unit diagonal.
inline RatPoly solve_midpoint(unsigned n)
{
    std::vector<std::vector<Rational>> m(n + 1, std::vector<Rational>(n + 1));
    std::vector<Rational> rhs(n + 1);
    rhs[n] = 1;
    for (unsigned k = 0; k <= n; ++k) {
        for (unsigned j = 0; j <= k; ++j) {
            Rational entry = Rational(binomial(k, j)) * Rational(1, 2);
            if (j == k) {
                entry += Rational(1, 2);
            }
            m[j][k] = entry;
        }
    }
    std::vector<Rational> p(n + 1);
    for (unsigned j = n + 1; j-- > 0;) {
        Rational acc = rhs[j];
        for (unsigned k = j + 1; k <= n; ++k) {
            acc -= m[j][k] * p[k];
        }
        p[j] = acc / m[j][j];
    }
    std::vector<GaussianRational> coeffs(p.begin(), p.end());
    auto result = RatPoly::from_coefficients(coeffs);
    if (result != euler_polynomial(n)) {
        throw InvariantViolation("midpoint solution differs from E_" + std::to_string(n));
    }
    return result;
}

// Umbral substitution f(x + E) with E^k -> E_k(0):
// f(x + E) = sum_k f^(k)(x) E_k(0) / k!.
inline RatPoly umbral_euler(const RatPoly &f)
{
    auto e0 = euler_values_at_zero(f.degree());
    RatPoly r;
    RatPoly deriv = f;
    for (unsigned k = 0; k <= f.degree(); ++k) {
        r += deriv * GaussianRational(e0[k] / Rational(factorial(k)));
        deriv = deriv.derivative();
    }
    return r;
}

} // namespace weyl

#endif
