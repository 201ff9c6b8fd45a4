#ifndef WEYL_SUITES_FIGUEIRA_HPP
#define WEYL_SUITES_FIGUEIRA_HPP

#include <string>
#include <utility>
#include <vector>

#include <weyl/suites/common.hpp>

namespace weyl::suites
{

// kappa_0 = 0, kappa_n = -E_n(0)
inline std::vector<Rational> kappa_sequence(unsigned big_n)
{
    auto e0 = euler_values_at_zero(big_n);
    std::vector<Rational> kappa(big_n + 1);
    for (unsigned n = 1; n <= big_n; ++n) {
        kappa[n] = -e0[n];
    }
    return kappa;
}

// lambda_n = 1 - sum_{m=0}^{n} 2^m C(n,m) kappa_m
inline std::vector<Rational> lambda_sequence(const std::vector<Rational> &kappa)
{
    std::vector<Rational> lambda(kappa.size());
    for (unsigned n = 0; n < kappa.size(); ++n) {
        Rational acc(1);
        for (unsigned m = 0; m <= n; ++m) {
            acc -= Rational(pow2(m) * binomial(n, m)) * kappa[m];
        }
        lambda[n] = acc;
    }
    return lambda;
}

// ad_x^n(h0) for n = 0.. until the first zero iterate.
inline std::vector<WeylElement> ad_iterates(const WeylElement &h0, const WeylElement &x, const WeylAlgebra &alg,
                                            unsigned cap = WeylAlgebra::default_hadamard_cap)
{
    std::vector<WeylElement> out;
    WeylElement it = h0;
    while (!it.is_zero()) {
        if (out.size() >= cap) {
            throw NonTerminatingSeries("ad_x is not nilpotent on h0 within " + std::to_string(cap) + " iterations");
        }
        out.push_back(it);
        it = alg.commutator(x, it);
    }
    return out;
}

// h1 = i h0 - i sum_{n>=0} E_n(0)/n! ad_x^n(h0)
inline WeylElement figueira_h1(const WeylElement &h0, const WeylElement &x, const WeylAlgebra &alg)
{
    auto ads = ad_iterates(h0, x, alg);
    auto e0 = euler_values_at_zero(ads.empty() ? 0 : static_cast<unsigned>(ads.size() - 1));
    const GaussianRational i = GaussianRational::i();
    WeylElement sum;
    for (unsigned n = 0; n < ads.size(); ++n) {
        sum += scaled(ads[n], e0[n] / Rational(factorial(n)));
    }
    return scaled(h0, i) - scaled(sum, i);
}

// Pseudo-Hermiticity construction: with h1 as above,
//   h0 - e^x h0 e^{-x} = i (h1 + e^x h1 e^{-x})
// and h = e^{x/2} (h0 + i h1) e^{-x/2} = sum E_n(1/2)/n! ad_x^n(h0)
//                                     = sum lambda_n/(2^n n!) ad_x^n(h0).
inline VerificationReport verify_figueira(const WeylElement &h0, const WeylElement &x, const std::string &label = {},
                                          const WeylAlgebra &alg = WeylAlgebra::formal())
{
    nlohmann::ordered_json params{{"h0", h0.to_string()}, {"x", x.to_string()}};
    if (!label.empty()) {
        params["label"] = label;
    }
    return run_instance("figueira", std::move(params), [&](VerificationReport &r) {
        const GaussianRational i = GaussianRational::i();
        auto ads = ad_iterates(h0, x, alg);
        const unsigned top = ads.empty() ? 0 : static_cast<unsigned>(ads.size() - 1);
        auto kappa = kappa_sequence(top);
        auto lambda = lambda_sequence(kappa);

        auto h1 = figueira_h1(h0, x, alg);
        WeylElement h1_kappa;
        for (unsigned n = 1; n <= top; ++n) {
            h1_kappa += scaled(ads[n], kappa[n] / Rational(factorial(n)));
        }
        expect_equal(r, "h1 in kappa form", h1, scaled(h1_kappa, i));

        auto lhs = h0 - alg.hadamard_conjugate(x, h0, 1);
        auto rhs = scaled(h1 + alg.hadamard_conjugate(x, h1, 1), i);
        expect_equal(r, "pseudo-Hermiticity condition", lhs, rhs);

        auto h = alg.hadamard_conjugate(x, h0 + scaled(h1, i), Rational(1, 2));
        WeylElement h_euler, h_lambda;
        for (unsigned n = 0; n <= top && !ads.empty(); ++n) {
            auto en_half = euler_polynomial(n).evaluate(Rational(1, 2));
            h_euler += ads[n] * CPoly(en_half * GaussianRational(Rational(1) / Rational(factorial(n))));
            h_lambda += scaled(ads[n], lambda[n] / Rational(pow2(n) * factorial(n)));
        }
        expect_equal(r, "h via E_n(1/2)", h, h_euler);
        expect_equal(r, "h via lambda", h, h_lambda);

        r.data["h1"] = h1.to_string();
        r.data["h"] = h.to_string();
        r.data["nilpotency"] = ads.size();
    });
}

// f(z + E) + f(z + E + 1) = 2 f(z) with the umbral rule E^k -> E_k(0).
inline VerificationReport verify_umbral(const RatPoly &f)
{
    return run_instance("umbral", {{"f", f.to_string("z")}}, [&](VerificationReport &r) {
        auto g = umbral_euler(f);
        auto lhs = g + g.shift(1);
        auto rhs = f * GaussianRational(2);
        if (lhs != rhs) {
            r.fail("lhs - rhs = " + (lhs - rhs).to_string("z"));
        }
    });
}

// The fixture set: (p^2, q), ((p^2 + q^2)/2, q), (p^2, q^2), ((qp + pq)/2, q).
inline std::vector<std::pair<std::string, std::pair<WeylElement, WeylElement>>> figueira_fixtures(const WeylAlgebra &alg)
{
    const auto p = WeylElement::p();
    const auto q = WeylElement::q();
    const auto p2 = alg.mul(p, p);
    const auto q2 = alg.mul(q, q);
    return {
        {"p^2 | q", {p2, q}},
        {"(p^2+q^2)/2 | q", {scaled(p2 + q2, Rational(1, 2)), q}},
        {"p^2 | q^2", {p2, q2}},
        {"(qp+pq)/2 | q", {scaled(alg.anticommutator(q, p), Rational(1, 2)), q}},
    };
}

} // namespace weyl::suites

#endif
