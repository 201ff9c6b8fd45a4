#ifndef WEYL_SUITES_BENDER_HPP
#define WEYL_SUITES_BENDER_HPP

#include <vector>

#include <weyl/suites/common.hpp>

namespace weyl::suites
{

// Nested anti-commutators of q with the oscillator Hamiltonian (c = -i).
// Checks, exactly:
//   (1/2^n) {q,H}_n         = (1/2) {q, E_n(H + 1/2)}
//   (1/2^n) {q,H - 1/2}_n   = (1/2) {q, E_n(H)}
//   (1/2^n) [({q,H}-1)_n + ({q,H}+1)_n] = {q, H^n}
// together with {q, H + a/2}_n = ({q,H} + a)_n for a = -1, +1.
inline VerificationReport verify_bender(unsigned n)
{
    return run_instance("bender", {{"n", n}}, [&](VerificationReport &r) {
        const Hamiltonian ham;
        const auto &alg = ham.algebra();
        const auto &h = ham.element();
        const auto q = WeylElement::q();
        const Rational half(1, 2);
        const Rational inv2n = Rational(1) / Rational(pow2(n));

        auto shifted = shifted_euler(n);
        r.data["polynomial"] = shifted.to_string("H");

        auto anti = ham.nested_anticommutators(n);
        expect_equal(r, "shifted Euler form", scaled(anti[n], inv2n),
                     scaled(alg.anticommutator(q, alg.poly_of_element(shifted, h)), half));

        auto h_minus = h - WeylElement(half);
        auto h_plus = h + WeylElement(half);
        auto minus_n = alg.nested_anticommutator(q, h_minus, n);
        auto plus_n = alg.nested_anticommutator(q, h_plus, n);
        expect_equal(r, "unshifted Euler form", scaled(minus_n, inv2n),
                     scaled(alg.anticommutator(q, alg.poly_of_element(euler_polynomial(n), h)), half));

        auto sub_minus = Hamiltonian::shifted_from(anti, Rational(-1), n);
        auto sub_plus = Hamiltonian::shifted_from(anti, Rational(1), n);
        expect_equal(r, "shift lemma a=-1", minus_n, sub_minus);
        expect_equal(r, "shift lemma a=+1", plus_n, sub_plus);

        expect_equal(r, "main identity", scaled(sub_minus + sub_plus, inv2n),
                     alg.anticommutator(q, alg.power(h, n)));
    });
}

// Superoperators A X = [X, H] and B X = {X, H} acting on q.
// A^k q and B^k q are compared against the closed binomial forms, and
// (A+B)^k q = 2^k q H^k, (B-A)^k q = 2^k H^k q, A B q = B A q.
inline VerificationReport verify_superoperators(unsigned n)
{
    return run_instance("superoperators", {{"n", n}}, [&](VerificationReport &r) {
        const Hamiltonian ham;
        const auto &alg = ham.algebra();
        const auto &h = ham.element();
        const auto q = WeylElement::q();

        auto op_a = [&](const WeylElement &x) { return alg.commutator(x, h); };
        auto op_b = [&](const WeylElement &x) { return alg.anticommutator(x, h); };

        std::vector<WeylElement> hpow{WeylElement::one()};
        for (unsigned k = 1; k <= n; ++k) {
            hpow.push_back(alg.mul(hpow.back(), h));
        }

        WeylElement a_k = q, b_k = q, sum_k = q, diff_k = q;
        for (unsigned k = 0; k <= n; ++k) {
            if (k > 0) {
                a_k = op_a(a_k);
                b_k = op_b(b_k);
                sum_k = op_a(sum_k) + op_b(sum_k);
                diff_k = op_b(diff_k) - op_a(diff_k);
            }
            WeylElement closed_a, closed_b;
            for (unsigned j = 0; j <= k; ++j) {
                auto word = alg.mul(alg.mul(hpow[j], q), hpow[k - j]);
                Rational b(binomial(k, j));
                closed_a += scaled(word, j % 2 == 0 ? b : -b);
                closed_b += scaled(word, b);
            }
            const std::string at = " (k=" + std::to_string(k) + ")";
            expect_equal(r, "A^k q" + at, a_k, closed_a);
            expect_equal(r, "B^k q" + at, b_k, closed_b);
            expect_equal(r, "(A+B)^k q" + at, sum_k, scaled(alg.mul(q, hpow[k]), Rational(pow2(k))));
            expect_equal(r, "(B-A)^k q" + at, diff_k, scaled(alg.mul(hpow[k], q), Rational(pow2(k))));
            expect_equal(r, "AB = BA on A^k q" + at, op_a(op_b(a_k)), op_b(op_a(a_k)));
        }
        auto h2 = alg.mul(h, h);
        expect_equal(r, "B A q", op_b(op_a(q)), alg.mul(q, h2) - alg.mul(h2, q));
        expect_equal(r, "A B q", op_a(op_b(q)), alg.mul(q, h2) - alg.mul(h2, q));
    });
}

} // namespace weyl::suites

#endif
