#ifndef WEYL_SUITES_FUNCTIONS_HPP
#define WEYL_SUITES_FUNCTIONS_HPP

#include <algorithm>

#include <weyl/suites/common.hpp>

namespace weyl::suites
{

namespace detail
{

inline nlohmann::ordered_json fg_params(const RatPoly &f, const RatPoly &g)
{
    return {{"f", f.to_string()}, {"g", g.to_string()}};
}

// Scalar factor c^k * w.
inline CPoly c_pow(const WeylAlgebra &alg, unsigned k, const Rational &w) { return alg.central().pow(k) * GaussianRational(w); }

// (-c)^k * w
inline CPoly minus_c_pow(const WeylAlgebra &alg, unsigned k, const Rational &w)
{
    return c_pow(alg, k, k % 2 == 0 ? w : -w);
}

} // namespace detail

// [f(p), g(q)] = -sum_{k>=1} (-c)^k/k! f^(k)(p) g^(k)(q)
inline VerificationReport verify_mccoy(const RatPoly &f, const RatPoly &g, const WeylAlgebra &alg = WeylAlgebra::formal())
{
    return run_instance("mccoy", detail::fg_params(f, g), [&](VerificationReport &r) {
        auto lhs = alg.commutator(of_p(f), of_q(g));
        WeylElement rhs;
        const unsigned top = std::min(f.degree(), g.degree());
        for (unsigned k = 1; k <= top; ++k) {
            auto prod = alg.mul(of_p(f.derivative(k)), of_q(g.derivative(k)));
            rhs -= prod * detail::minus_c_pow(alg, k, Rational(1) / Rational(factorial(k)));
        }
        expect_equal(r, "McCoy expansion", lhs, rhs);
    });
}

// The five expansions of [f(p), g(q)], {f(p), g(q)} and f(p) g(q) for
// polynomial f, g, with F, G the antiderivatives vanishing at 0:
//   [f,g]  = -sum_{k>=1} E_k(0) c^k/k! {f^(k), g^(k)}
//   {f,g}  = (2/c)[F,G] + 2 sum_{k>=1} B_{k+1}/(k+1) c^k/k! [f^(k), g^(k)]
//   {f,g}  = 2 f g + sum_{k>=1} (-c)^k/k! f^(k) g^(k)
//   f g    = (1/c)[F,G] - sum_{k>=0} B_{k+1}/(k+1) (-c)^k/k! [f^(k), g^(k)]
//   f g    = (1/2) sum_{k>=0} E_k(0) (-c)^k/k! {f^(k), g^(k)}
inline VerificationReport verify_function_identities(const RatPoly &f, const RatPoly &g,
                                                     const WeylAlgebra &alg = WeylAlgebra::formal())
{
    return run_instance("functions", detail::fg_params(f, g), [&](VerificationReport &r) {
        const unsigned top = std::min(f.degree(), g.degree());
        auto e0 = euler_values_at_zero(top);
        auto bern = bernoulli_numbers(top + 1);
        auto fk = [&](unsigned k) { return of_p(f.derivative(k)); };
        auto gk = [&](unsigned k) { return of_q(g.derivative(k)); };
        auto inv_fact = [](unsigned k) { return Rational(1) / Rational(factorial(k)); };

        const auto fp = of_p(f);
        const auto gq = of_q(g);
        const auto comm = alg.commutator(fp, gq);
        const auto anti = alg.anticommutator(fp, gq);
        const auto prod = alg.mul(fp, gq);
        const auto big_comm = alg.commutator(of_p(f.antiderivative()), of_q(g.antiderivative()));

        WeylElement rhs1;
        for (unsigned k = 1; k <= top; ++k) {
            rhs1 -= alg.anticommutator(fk(k), gk(k)) * detail::c_pow(alg, k, e0[k] * inv_fact(k));
        }
        expect_equal(r, "commutator via Euler", comm, rhs1);

        WeylElement rhs2 = scaled(divide_by_c(big_comm, alg), Rational(2));
        for (unsigned k = 1; k <= top; ++k) {
            rhs2 += alg.commutator(fk(k), gk(k))
                    * detail::c_pow(alg, k, Rational(2) * bern[k + 1] / Rational(k + 1) * inv_fact(k));
        }
        expect_equal(r, "anti-commutator via Bernoulli", anti, rhs2);

        WeylElement rhs3 = scaled(prod, Rational(2));
        for (unsigned k = 1; k <= top; ++k) {
            rhs3 += alg.mul(fk(k), gk(k)) * detail::minus_c_pow(alg, k, inv_fact(k));
        }
        expect_equal(r, "anti-commutator expansion", anti, rhs3);

        WeylElement rhs4 = divide_by_c(big_comm, alg);
        for (unsigned k = 0; k <= top; ++k) {
            rhs4 -= alg.commutator(fk(k), gk(k)) * detail::minus_c_pow(alg, k, bern[k + 1] / Rational(k + 1) * inv_fact(k));
        }
        expect_equal(r, "product via Bernoulli", prod, rhs4);

        WeylElement rhs5;
        for (unsigned k = 0; k <= top; ++k) {
            rhs5 += alg.anticommutator(fk(k), gk(k)) * detail::minus_c_pow(alg, k, Rational(1, 2) * e0[k] * inv_fact(k));
        }
        expect_equal(r, "product via Euler", prod, rhs5);
    });
}

} // namespace weyl::suites

#endif
