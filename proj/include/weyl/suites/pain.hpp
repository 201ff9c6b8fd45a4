#ifndef WEYL_SUITES_PAIN_HPP
#define WEYL_SUITES_PAIN_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include <weyl/suites/common.hpp>

namespace weyl::suites
{

// [p^n/n!, q^m/m!] = -sum_{k=1}^{min(m,n)} c^k E_k(0)/k! {p^{n-k}/(n-k)!, q^{m-k}/(m-k)!}
inline VerificationReport verify_pain(unsigned n, unsigned m, const WeylAlgebra &alg = WeylAlgebra::formal())
{
    return run_instance("pain", {{"n", n}, {"m", m}}, [&](VerificationReport &r) {
        auto e0 = euler_values_at_zero(std::min(m, n));
        auto lhs = alg.commutator(p_divided_power(n), q_divided_power(m));
        WeylElement rhs;
        for (unsigned k = 1; k <= std::min(m, n); ++k) {
            auto anti = alg.anticommutator(p_divided_power(n - k), q_divided_power(m - k));
            rhs -= anti * (alg.central().pow(k) * GaussianRational(e0[k] / Rational(factorial(k))));
        }
        expect_equal(r, "commutator/anti-commutator convolution", lhs, rhs);
    });
}

// {p^n/n!, q^m/m!} = (2/c)[p^{n+1}/(n+1)!, q^{m+1}/(m+1)!]
//                    + 2 sum_{k=1}^{min(m,n)} (c^k/k!) (B_{k+1}/(k+1)) [p^{n-k}/(n-k)!, q^{m-k}/(m-k)!]
// and the Bernoulli form of the forward identity, with E_k(0) replaced by
// -2 (2^{k+1} - 1) B_{k+1}/(k+1).
inline VerificationReport verify_reciprocal(unsigned n, unsigned m, const WeylAlgebra &alg = WeylAlgebra::formal())
{
    return run_instance("reciprocal", {{"n", n}, {"m", m}}, [&](VerificationReport &r) {
        const unsigned top = std::min(m, n);
        auto bern = bernoulli_numbers(top + 1);

        auto lhs = alg.anticommutator(p_divided_power(n), q_divided_power(m));
        auto bracket = alg.commutator(p_divided_power(n + 1), q_divided_power(m + 1));
        auto rhs = scaled(divide_by_c(bracket, alg), Rational(2));
        for (unsigned k = 1; k <= top; ++k) {
            auto comm = alg.commutator(p_divided_power(n - k), q_divided_power(m - k));
            Rational w = Rational(2) * bern[k + 1] / Rational(k + 1) / Rational(factorial(k));
            rhs += comm * (alg.central().pow(k) * GaussianRational(w));
        }
        expect_equal(r, "reciprocal identity", lhs, rhs);

        auto forward = alg.commutator(p_divided_power(n), q_divided_power(m));
        WeylElement rewritten;
        for (unsigned k = 1; k <= top; ++k) {
            auto anti = alg.anticommutator(p_divided_power(n - k), q_divided_power(m - k));
            Rational w = Rational(2) * Rational(pow2(k + 1) - 1) * bern[k + 1] / Rational(k + 1) / Rational(factorial(k));
            rewritten += anti * (alg.central().pow(k) * GaussianRational(w));
        }
        expect_equal(r, "Bernoulli form of the forward identity", forward, rewritten);
    });
}

// All words in p, q with a p's and b q's, summed: the coefficient of
// u^a v^b in (up + vq)^{a+b}.
class SymmetricWords
{
public:
    SymmetricWords(unsigned max_n, unsigned max_m, const WeylAlgebra &alg)
        : table_(max_n + 1, std::vector<WeylElement>(max_m + 1))
    {
        const auto p = WeylElement::p();
        const auto q = WeylElement::q();
        table_[0][0] = WeylElement::one();
        for (unsigned a = 0; a <= max_n; ++a) {
            for (unsigned b = 0; b <= max_m; ++b) {
                if (a == 0 && b == 0) {
                    continue;
                }
                WeylElement w;
                if (a > 0) {
                    w += alg.mul(table_[a - 1][b], p);
                }
                if (b > 0) {
                    w += alg.mul(table_[a][b - 1], q);
                }
                table_[a][b] = std::move(w);
            }
        }
    }

    [[nodiscard]] const WeylElement &at(unsigned a, unsigned b) const { return table_.at(a).at(b); }
    [[nodiscard]] bool covers(unsigned a, unsigned b) const { return a < table_.size() && b < table_[0].size(); }

private:
    std::vector<std::vector<WeylElement>> table_;
};

// Coefficient of u^n v^m in
//   [e^{up}, e^{vq}] = (1 - e^{-z}) e^{up} e^{vq},
//   {e^{up}, e^{vq}} = (1 + e^{-z}) e^{up} e^{vq},   z = cuv,
// and in the Baker-Campbell-Hausdorff forms
//   e^{up+vq} = e^{-z/2} e^{up} e^{vq} = e^{z/2} e^{vq} e^{up}.
inline VerificationReport verify_exp_series(unsigned n, unsigned m, const WeylAlgebra &alg = WeylAlgebra::formal(),
                                            const SymmetricWords *words = nullptr)
{
    return run_instance("exp-series", {{"n", n}, {"m", m}}, [&](VerificationReport &r) {
        const unsigned top = std::min(m, n);
        auto ordered = [&](unsigned k) { return alg.mul(p_divided_power(n - k), q_divided_power(m - k)); };
        auto ck = [&](unsigned k, const Rational &w) { return alg.central().pow(k) * GaussianRational(w); };

        WeylElement comm_rhs, anti_rhs = scaled(ordered(0), Rational(2));
        for (unsigned k = 1; k <= top; ++k) {
            Rational w = Rational(1) / Rational(factorial(k));
            comm_rhs += ordered(k) * ck(k, k % 2 == 1 ? w : -w);
            anti_rhs += ordered(k) * ck(k, k % 2 == 1 ? -w : w);
        }
        expect_equal(r, "commutator series", alg.commutator(p_divided_power(n), q_divided_power(m)), comm_rhs);
        expect_equal(r, "anti-commutator series", alg.anticommutator(p_divided_power(n), q_divided_power(m)), anti_rhs);

        std::optional<SymmetricWords> local;
        if (words == nullptr || !words->covers(n, m)) {
            local.emplace(n, m, alg);
            words = &*local;
        }
        auto symmetric = scaled(words->at(n, m), Rational(1) / Rational(factorial(n + m)));
        WeylElement pq_form, qp_form;
        for (unsigned k = 0; k <= top; ++k) {
            Rational w = Rational(1) / (Rational(factorial(k)) * Rational(pow2(k)));
            pq_form += ordered(k) * ck(k, k % 2 == 0 ? w : -w);
            qp_form += alg.mul(q_divided_power(m - k), p_divided_power(n - k)) * ck(k, w);
        }
        expect_equal(r, "BCH e^{-z/2} e^{up} e^{vq}", symmetric, pq_form);
        expect_equal(r, "BCH e^{z/2} e^{vq} e^{up}", symmetric, qp_form);
    });
}

// Recovers v_1..v_K in [p^k/k!, q^k/k!] = sum_j c^j v_j/j! {p^{k-j}/(k-j)!, q^{k-j}/(k-j)!}
// from the scalar (q^0 p^0) coefficients, solving for v_k at order (k, k)
// by dividing the commutator residual by the coefficient 2c^k/k! of
// {1, 1}. The result must equal E_k(1) = -E_k(0).
inline std::vector<Rational> extract_v(unsigned big_k, const WeylAlgebra &alg = WeylAlgebra::formal())
{
    std::vector<Rational> v(big_k + 1);
    v[0] = 1;
    for (unsigned k = 1; k <= big_k; ++k) {
        CPoly residual = alg.commutator(p_divided_power(k), q_divided_power(k)).coefficient(0, 0);
        for (unsigned j = 1; j < k; ++j) {
            CPoly anti0 = alg.anticommutator(p_divided_power(k - j), q_divided_power(k - j)).coefficient(0, 0);
            residual -= anti0 * alg.central().pow(j) * GaussianRational(v[j] / Rational(factorial(j)));
        }
        CPoly anti_top = alg.anticommutator(WeylElement::one(), WeylElement::one()).coefficient(0, 0)
                         * alg.central().pow(k) * GaussianRational(Rational(1) / Rational(factorial(k)));
        // Both are single monomials in c of degree k.
        auto num = residual.coefficient(k);
        auto den = anti_top.coefficient(k);
        if (residual != CPoly::monomial(num, k) || !num.is_real()) {
            throw InvariantViolation("scalar residual at order " + std::to_string(k) + " is " + residual.to_string());
        }
        v[k] = (num / den).re();
    }
    return v;
}

inline VerificationReport verify_v_extraction(unsigned big_k)
{
    return run_instance("v-extraction", {{"K", big_k}}, [&](VerificationReport &r) {
        auto v = extract_v(big_k);
        auto e0 = euler_values_at_zero(big_k);
        nlohmann::ordered_json vs = nlohmann::ordered_json::array();
        for (unsigned k = 1; k <= big_k; ++k) {
            vs.push_back(v[k].to_string());
            if (v[k] != -e0[k]) {
                r.fail("v_" + std::to_string(k) + " = " + v[k].to_string() + ", expected " + (-e0[k]).to_string());
            }
            Rational lhs = v[k];
            for (unsigned l = 1; l <= k; ++l) {
                lhs += Rational(binomial(k, l)) * v[l];
            }
            if (lhs != Rational(1)) {
                r.fail("v_k + sum C(k,l) v_l = " + lhs.to_string() + " at k=" + std::to_string(k));
            }
        }
        r.data["v"] = vs;
    });
}

} // namespace weyl::suites

#endif
