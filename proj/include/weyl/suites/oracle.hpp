#ifndef WEYL_SUITES_ORACLE_HPP
#define WEYL_SUITES_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>

#include <weyl/hermite_oracle.hpp>
#include <weyl/poly_realization.hpp>
#include <weyl/suites/common.hpp>

namespace weyl::suites
{

// Seeded element with total degree <= max_degree; coefficients are integer
// polynomials in c of degree <= 2 with entries in [-bound, bound].
inline WeylElement random_element(std::mt19937_64 &rng, unsigned max_degree = 4, int bound = 5)
{
    std::uniform_int_distribution<unsigned> count(1, 5);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<int> coef(-bound, bound);
    std::uniform_int_distribution<unsigned> cdeg(0, 2);
    WeylElement w;
    const unsigned terms = count(rng);
    for (unsigned t = 0; t < terms; ++t) {
        const unsigned total = deg(rng);
        std::uniform_int_distribution<unsigned> split(0, total);
        const unsigned a = split(rng);
        CPoly cf = CPoly::monomial(GaussianRational(coef(rng)), cdeg(rng));
        w.add_term({a, total - a}, cf);
    }
    return w;
}

// The product kernel against the polynomial realization on random pairs:
// (uv) x^l = u (v x^l) for l <= max_l, and recovery of u from its action.
inline VerificationReport realization_agreement(std::uint64_t seed, unsigned cases, unsigned max_degree, unsigned max_l)
{
    nlohmann::ordered_json params{{"seed", seed}, {"cases", cases}, {"max_degree", max_degree}, {"max_l", max_l}};
    return run_instance("oracle-realization", std::move(params), [&](VerificationReport &r) {
        const auto &alg = WeylAlgebra::formal();
        const Realization real(alg);
        std::mt19937_64 rng(seed);
        for (unsigned k = 0; k < cases; ++k) {
            auto u = random_element(rng, max_degree);
            auto v = random_element(rng, max_degree);
            auto uv = alg.mul(u, v);
            for (unsigned l = 0; l <= max_l; ++l) {
                if (real.apply_monomial(uv, l) != real.apply(u, real.apply_monomial(v, l))) {
                    r.fail("case " + std::to_string(k) + ": (uv) x^" + std::to_string(l) + " != u(v x^" + std::to_string(l)
                           + ") for u = " + u.to_string() + ", v = " + v.to_string());
                    break;
                }
            }
            auto back = real.recover([&](unsigned l) { return real.apply_monomial(u, l); }, max_l);
            if (back != u) {
                r.fail("case " + std::to_string(k) + ": recovery of " + u.to_string() + " gave " + back.to_string());
            }
        }
    });
}

// Symbolic [p^n/n!, q^m/m!] and {p^n/n!, q^m/m!} acting on x^l against the
// closed-form action, for n, m <= max_nm and n <= l <= max_l.
inline VerificationReport pain_realization(unsigned max_nm, unsigned max_l)
{
    return run_instance("oracle-pain", {{"max_nm", max_nm}, {"max_l", max_l}}, [&](VerificationReport &r) {
        const auto &alg = WeylAlgebra::formal();
        const Realization real(alg);
        for (unsigned n = 0; n <= max_nm; ++n) {
            for (unsigned m = 0; m <= max_nm; ++m) {
                auto comm = alg.commutator(p_divided_power(n), q_divided_power(m));
                auto anti = alg.anticommutator(p_divided_power(n), q_divided_power(m));
                for (unsigned l = n; l <= max_l; ++l) {
                    auto [cc, cd] = real.monomial_commutator_action(n, m, l);
                    auto [ac, ad] = real.monomial_anticommutator_action(n, m, l);
                    const auto at = " at n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", l=" + std::to_string(l);
                    if (real.apply_monomial(comm, l) != XPoly::monomial(cd, cc)) {
                        r.fail("commutator action" + at);
                    }
                    if (real.apply_monomial(anti, l) != XPoly::monomial(ad, ac)) {
                        r.fail("anti-commutator action" + at);
                    }
                }
            }
        }
    });
}

// Symbolic {q,H}_n (c = -i) realized on the truncated Hermite basis against
// the matrix nested anti-commutators and the closed-form column, over the
// columns l with l + 2n + 1 <= dim - 1. The exact column is also compared
// with the closed form in reduced coefficients:
//   {q,H}_n psi_l = i 2^n l^n s(l,l-1) psi_{l-1} - i 2^n (l+1)^n s(l,l+1) psi_{l+1}.
inline VerificationReport bender_vs_hermite(unsigned max_n, int dim, double tol)
{
    return run_instance("oracle-hermite", {{"max_n", max_n}, {"dim", dim}, {"tol", tol}}, [&](VerificationReport &r) {
        const Hamiltonian ham;
        const auto m = hermite::build_operators(dim);
        const auto symbolic = ham.nested_anticommutators(max_n);
        const auto matrices = hermite::nested_anticommutators(m, max_n);
        double worst = 0.0;
        for (unsigned n = 0; n <= max_n; ++n) {
            const int limit = hermite::safe_limit(dim, 2 * n + 1);
            if (limit < 0) {
                throw PreconditionViolation("dim too small for n=" + std::to_string(n));
            }
            for (int l = 0; l <= limit; ++l) {
                const auto i = GaussianRational::i();
                const Rational scale(pow2(n));
                hermite::ReducedColumn expected{{l + 1, -i * GaussianRational(scale * Rational(l + 1).pow(n))}};
                if (l > 0) {
                    expected[l - 1] = i * GaussianRational(scale * Rational(l).pow(n));
                }
                if (hermite::realize_column_exact(symbolic[n], l) != expected) {
                    r.fail("exact column differs from the closed form at n=" + std::to_string(n) + ", l="
                           + std::to_string(l));
                }
                auto col = hermite::realize_column(symbolic[n], l, m);
                double e1 = hermite::column_relative_error(col, matrices[n].col(l));
                double e2 = hermite::column_relative_error(col, hermite::closed_form_column(n, l, dim));
                double e = std::max(e1, e2);
                worst = std::max(worst, e);
                if (!(e <= tol)) {
                    std::ostringstream os;
                    os << "ToleranceExceeded at n=" << n << ", l=" << l << ", error=" << e;
                    r.fail(os.str());
                }
            }
        }
        r.data["max_rel_error"] = worst;
    });
}

} // namespace weyl::suites

#endif
