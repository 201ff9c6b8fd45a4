#ifndef WEYL_SUITES_COMMON_HPP
#define WEYL_SUITES_COMMON_HPP

#include <random>
#include <string>

#include <weyl/report.hpp>
#include <weyl/special_sequences.hpp>
#include <weyl/weyl_algebra.hpp>

namespace weyl::suites
{

inline WeylElement scaled(const WeylElement &w, const Rational &r) { return w * CPoly(r); }
inline WeylElement scaled(const WeylElement &w, const GaussianRational &g) { return w * CPoly(g); }

// p^n / n!
inline WeylElement p_divided_power(unsigned n) { return WeylElement::monomial(CPoly(Rational(1, factorial(n))), 0, n); }
// q^m / m!
inline WeylElement q_divided_power(unsigned m) { return WeylElement::monomial(CPoly(Rational(1, factorial(m))), m, 0); }

// f(p) or f(q) for a commuting polynomial f; powers of a single generator
// are already in normal order.
inline WeylElement of_p(const RatPoly &f)
{
    WeylElement w;
    for (const auto &[d, g] : f.terms()) {
        w += WeylElement::monomial(CPoly(g), 0, d);
    }
    return w;
}
inline WeylElement of_q(const RatPoly &f)
{
    WeylElement w;
    for (const auto &[d, g] : f.terms()) {
        w += WeylElement::monomial(CPoly(g), d, 0);
    }
    return w;
}

// Divides every coefficient by c; the caller's identity guarantees
// divisibility, so a remainder is reported as NonDivisible.
inline WeylElement divide_by_c(const WeylElement &w, const WeylAlgebra &algebra)
{
    if (algebra.central().is_constant()) {
        return w * CPoly(algebra.central().constant_term().inverse());
    }
    WeylElement r;
    for (const auto &[m, cf] : w.terms()) {
        r.add_term(m, cf.divide_by_c(1));
    }
    return r;
}

// Records a mismatch with the rendered difference lhs - rhs.
inline bool expect_equal(VerificationReport &r, const std::string &label, const WeylElement &lhs, const WeylElement &rhs)
{
    if (lhs == rhs) {
        return true;
    }
    r.fail(label + ": lhs - rhs = " + (lhs - rhs).to_string());
    return false;
}

// Seeded polynomial with degree <= max_degree and integer coefficients in
// [-bound, bound].
inline RatPoly random_polynomial(std::mt19937_64 &rng, unsigned max_degree = 4, int bound = 5)
{
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<int> coef(-bound, bound);
    unsigned d = deg(rng);
    std::vector<GaussianRational> cs(d + 1);
    for (auto &c : cs) {
        c = coef(rng);
    }
    return RatPoly::from_coefficients(cs);
}

} // namespace weyl::suites

#endif
