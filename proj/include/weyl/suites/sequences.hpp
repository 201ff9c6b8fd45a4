#ifndef WEYL_SUITES_SEQUENCES_HPP
#define WEYL_SUITES_SEQUENCES_HPP

#include <array>
#include <utility>

#include <weyl/suites/figueira.hpp>

namespace weyl::suites
{

// Odd kappa values kappa_1 .. kappa_9 as tabulated for the non-Hermitian
// oscillator (with kappa_9 = +31/2).
inline const std::array<std::pair<unsigned, Rational>, 5> &reference_odd_kappa()
{
    static const std::array<std::pair<unsigned, Rational>, 5> table{{
        {1, Rational(1, 2)},
        {3, Rational(-1, 4)},
        {5, Rational(1, 2)},
        {7, Rational(-17, 8)},
        {9, Rational(31, 2)},
    }};
    return table;
}

inline nlohmann::ordered_json rational_array(const std::vector<Rational> &v)
{
    auto a = nlohmann::ordered_json::array();
    for (const auto &x : v) {
        a.push_back(x.to_string());
    }
    return a;
}

// kappa_{2n} = 0, the reference odd kappa values, and
// lambda_n = 1 - sum 2^m C(n,m) kappa_m = Euler number (0 for odd n).
inline VerificationReport sequence_tables(unsigned big_n)
{
    return run_instance("sequences", {{"N", big_n}}, [&](VerificationReport &r) {
        const unsigned span = std::max(big_n, 9U);
        auto kappa = kappa_sequence(span);
        auto lambda = lambda_sequence(kappa);
        for (unsigned n = 0; n <= big_n; n += 2) {
            if (!kappa[n].is_zero()) {
                r.fail("kappa_" + std::to_string(n) + " = " + kappa[n].to_string() + ", expected 0");
            }
        }
        for (const auto &[n, value] : reference_odd_kappa()) {
            if (kappa[n] != value) {
                r.fail("kappa_" + std::to_string(n) + " = " + kappa[n].to_string() + ", expected " + value.to_string());
            }
        }
        std::vector<Rational> euler_numbers;
        for (unsigned n = 0; n <= big_n; ++n) {
            euler_numbers.push_back(euler_number(n));
            Rational expected = n % 2 == 0 ? euler_numbers.back() : Rational(0);
            if (lambda[n] != expected || euler_numbers.back() != expected) {
                r.fail("lambda_" + std::to_string(n) + " = " + lambda[n].to_string() + ", Euler number "
                       + euler_numbers.back().to_string());
            }
        }
        kappa.resize(big_n + 1);
        lambda.resize(big_n + 1);
        r.data["kappa"] = rational_array(kappa);
        r.data["lambda"] = rational_array(lambda);
        r.data["euler_numbers"] = rational_array(euler_numbers);
        r.data["bernoulli"] = rational_array(bernoulli_numbers(big_n));
    });
}

// Euler/Bernoulli invariants for indices up to big_n:
//   E_n(x) + E_n(x+1) = 2x^n, E_n' = n E_{n-1}, E_n(1) = (-1)^n E_n(0),
//   E_n(1) = -E_n(0) (n >= 1), E_{2k}(0) = 0 (k >= 1),
//   v_k + sum_{l=1}^k C(k,l) v_l = 1 for v_0 = 1, v_k = -E_k(0),
//   E_k(0) = -2 (2^{k+1} - 1) B_{k+1}/(k+1), B_{2k+1} = 0 (k >= 1),
// and solve_midpoint(n) = euler_polynomial(n) for n <= midpoint_n.
inline VerificationReport sequence_properties(unsigned big_n, unsigned midpoint_n)
{
    return run_instance("sequence-properties", {{"N", big_n}, {"midpoint_n", midpoint_n}}, [&](VerificationReport &r) {
        auto e0 = euler_values_at_zero(big_n);
        auto bern = bernoulli_numbers(big_n + 1);
        auto at = [](unsigned n) { return " at n=" + std::to_string(n); };
        RatPoly previous;
        for (unsigned n = 0; n <= big_n; ++n) {
            auto e = euler_polynomial(n);
            if (e.degree() != n || e.leading_coefficient() != GaussianRational(1) || !e.is_real()) {
                r.fail("E_n is not a real monic polynomial of degree n" + at(n));
            }
            if (e + e.shift(1) != RatPoly::monomial(2, n)) {
                r.fail("midpoint identity" + at(n));
            }
            if (n > 0 && e.derivative() != previous * GaussianRational(n)) {
                r.fail("Appell property" + at(n));
            }
            const auto e_one = e.evaluate(1).re();
            if (e_one != (n % 2 == 0 ? e0[n] : -e0[n])) {
                r.fail("E_n(1) = (-1)^n E_n(0)" + at(n));
            }
            if (n >= 1 && e_one != -e0[n]) {
                r.fail("E_n(1) = -E_n(0)" + at(n));
            }
            if (n >= 2 && n % 2 == 0 && !e0[n].is_zero()) {
                r.fail("E_n(0) = 0 for even n" + at(n));
            }
            if (n >= 1) {
                // v_n + sum_{l=1}^{n} C(n,l) v_l with v_l = -E_l(0)
                Rational s = -e0[n];
                for (unsigned l = 1; l <= n; ++l) {
                    s -= Rational(binomial(n, l)) * e0[l];
                }
                if (s != Rational(1)) {
                    r.fail("v_k characterization" + at(n));
                }
            }
            if (e0[n] != Rational(-2) * Rational(pow2(n + 1) - 1) * bern[n + 1] / Rational(n + 1)) {
                r.fail("Bernoulli-Euler bridge" + at(n));
            }
            if (n >= 1 && !bern[2 * n + 1 <= big_n + 1 ? 2 * n + 1 : 0].is_zero() && 2 * n + 1 <= big_n + 1) {
                r.fail("odd Bernoulli number nonzero" + at(2 * n + 1));
            }
            previous = std::move(e);
        }
        for (unsigned n = 0; n <= midpoint_n; ++n) {
            if (solve_midpoint(n) != euler_polynomial(n)) {
                r.fail("solve_midpoint" + at(n));
            }
        }
    });
}

} // namespace weyl::suites

#endif
