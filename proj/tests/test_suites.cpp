#include <gtest/gtest.h>

#include "generators.hpp"

using weyl::CPoly;
using weyl::GaussianRational;
using weyl::Rational;
using weyl::RatPoly;
using weyl::WeylAlgebra;
using weyl::WeylElement;
namespace suites = weyl::suites;

namespace
{

WeylElement el(const char *text) { return weyl::parse_element(text); }

} // namespace

TEST(Bender, LowOrderInstances)
{
    for (unsigned n = 0; n <= 6; ++n) {
        auto r = suites::verify_bender(n);
        EXPECT_TRUE(r.passed()) << r.witness;
    }
    EXPECT_EQ(suites::verify_bender(2).data["polynomial"], "H^2 - 1/4");
}

TEST(Bender, Superoperators)
{
    for (unsigned n = 0; n <= 5; ++n) {
        auto r = suites::verify_superoperators(n);
        EXPECT_TRUE(r.passed()) << r.witness;
    }
}

TEST(Bender, SignConventionForDifferenceOperator)
{
    // With A X = [X,H] and B X = {X,H}: (B - A) q = 2 H q, so (A - B) q = -2 H q.
    weyl::Hamiltonian ham;
    const auto &alg = ham.algebra();
    const auto q = WeylElement::q();
    const auto &h = ham.element();
    auto a_minus_b = alg.commutator(q, h) - alg.anticommutator(q, h);
    EXPECT_EQ(a_minus_b, alg.mul(h, q) * CPoly(-2));
}

TEST(Pain, DocumentedInstances)
{
    const auto &alg = WeylAlgebra::formal();
    auto comm11 = alg.commutator(suites::p_divided_power(1), suites::q_divided_power(1));
    EXPECT_EQ(comm11, WeylElement(CPoly::c()));
    auto comm22 = alg.commutator(suites::p_divided_power(2), suites::q_divided_power(2));
    EXPECT_EQ(comm22, el("c q p + c^2/2"));
    EXPECT_TRUE(suites::verify_pain(0, 0).passed());
    EXPECT_TRUE(suites::verify_pain(1, 1).passed());
    EXPECT_TRUE(suites::verify_pain(2, 2).passed());
    EXPECT_TRUE(suites::verify_pain(6, 3).passed());
}

TEST(Pain, ReciprocalInstances)
{
    const auto &alg = WeylAlgebra::formal();
    EXPECT_EQ(alg.anticommutator(suites::p_divided_power(0), suites::q_divided_power(0)), WeylElement(2));
    EXPECT_EQ(alg.anticommutator(WeylElement::p(), WeylElement::q()), el("2 q p + c"));
    for (auto [n, m] : {std::pair{0U, 0U}, {1U, 1U}, {4U, 2U}, {8U, 10U}}) {
        auto r = suites::verify_reciprocal(n, m);
        EXPECT_TRUE(r.passed()) << n << "," << m << ": " << r.witness;
    }
}

TEST(Pain, ExpSeriesInstances)
{
    for (auto [n, m] : {std::pair{0U, 0U}, {1U, 1U}, {3U, 2U}, {2U, 5U}}) {
        auto r = suites::verify_exp_series(n, m);
        EXPECT_TRUE(r.passed()) << n << "," << m << ": " << r.witness;
    }
}

TEST(Pain, VExtraction)
{
    auto v = suites::extract_v(12);
    EXPECT_EQ(v[1], Rational(1, 2));
    EXPECT_EQ(v[2], Rational(0));
    EXPECT_EQ(v[3], Rational(-1, 4));
    EXPECT_TRUE(suites::verify_v_extraction(12).passed());
}

TEST(Pain, DivideByCRejectsNonDivisible)
{
    EXPECT_THROW(suites::divide_by_c(el("q + c"), WeylAlgebra::formal()), weyl::NonDivisible);
    EXPECT_EQ(suites::divide_by_c(el("2 c q"), WeylAlgebra::formal()), el("2 q"));
}

TEST(Functions, McCoyInstances)
{
    const auto &alg = WeylAlgebra::formal();
    auto x2 = RatPoly::monomial(1, 2);
    EXPECT_EQ(alg.commutator(el("p^2"), el("q^2")), el("4 c q p + 2 c^2"));
    EXPECT_EQ(el("4 c p q - 2 c^2"), el("4 c q p + 2 c^2"));
    EXPECT_TRUE(suites::verify_mccoy(RatPoly::x(), RatPoly::x()).passed());
    EXPECT_TRUE(suites::verify_mccoy(x2, x2).passed());
}

TEST(Functions, FiveIdentities)
{
    EXPECT_TRUE(suites::verify_function_identities(RatPoly::x(), RatPoly::x()).passed());
    auto g = RatPoly::from_coefficients({3, 0, -1, 2});
    EXPECT_TRUE(suites::verify_function_identities(RatPoly::monomial(1, 0), g).passed());
    std::mt19937_64 rng(41);
    for (int k = 0; k < 10; ++k) {
        auto f = suites::random_polynomial(rng);
        auto h = suites::random_polynomial(rng);
        auto r = suites::verify_function_identities(f, h);
        EXPECT_TRUE(r.passed()) << r.params.dump() << ": " << r.witness;
    }
}

TEST(Functions, SpecializedAlgebra)
{
    auto f = RatPoly::from_coefficients({1, 2, 3});
    auto g = RatPoly::from_coefficients({0, -1, 0, 1});
    EXPECT_TRUE(suites::verify_function_identities(f, g, WeylAlgebra::oscillator()).passed());
    EXPECT_TRUE(suites::verify_mccoy(f, g, WeylAlgebra::oscillator()).passed());
}

TEST(Binomial, DocumentedInstances)
{
    auto [lhs, rhs] = suites::binomial_sides(1, 1, 1, false);
    EXPECT_EQ(lhs, RatPoly::x() + RatPoly::monomial(2, 0));
    EXPECT_EQ(rhs, lhs);
    for (unsigned m = 0; m <= 5; ++m) {
        auto [l0, r0] = suites::binomial_sides(m, 0, 3, false);
        EXPECT_EQ(l0, RatPoly::monomial(1, 0));
        EXPECT_EQ(r0, RatPoly::monomial(1, 0));
    }
    EXPECT_TRUE(suites::verify_binomial(6, 6, 6, true).passed());
    EXPECT_TRUE(suites::verify_binomial(5, 3, 2, false).passed());
}

TEST(Figueira, HandComputedFixture)
{
    const auto &alg = WeylAlgebra::formal();
    auto h0 = el("p^2");
    auto x = WeylElement::q();
    auto h1 = suites::figueira_h1(h0, x, alg);
    EXPECT_EQ(h1, el("-i c p"));
    auto lhs = h0 - alg.hadamard_conjugate(x, h0, 1);
    EXPECT_EQ(lhs, el("2 c p - c^2"));
    auto h = alg.hadamard_conjugate(x, h0 + h1 * CPoly(GaussianRational::i()), Rational(1, 2));
    EXPECT_EQ(h, el("p^2 - c^2/4"));
    EXPECT_TRUE(suites::verify_figueira(h0, x).passed());
}

TEST(Figueira, ScalarIsFixed)
{
    auto h0 = el("3 + c");
    EXPECT_TRUE(suites::figueira_h1(h0, el("q^2 + p"), WeylAlgebra::formal()).is_zero());
    auto r = suites::verify_figueira(h0, el("q^2 + p"));
    EXPECT_TRUE(r.passed()) << r.witness;
}

TEST(Figueira, FixtureSet)
{
    for (const auto &alg : {WeylAlgebra::formal(), WeylAlgebra::oscillator()}) {
        for (const auto &[label, fx] : suites::figueira_fixtures(alg)) {
            auto r = suites::verify_figueira(fx.first, fx.second, label, alg);
            EXPECT_TRUE(r.passed()) << label << ": " << r.witness;
        }
    }
}

TEST(Figueira, NonNilpotentIsAnError)
{
    auto r = suites::verify_figueira(WeylElement::p(), el("q p"));
    EXPECT_EQ(r.status, weyl::Status::error);
    EXPECT_NE(r.witness.find("nilpotent"), std::string::npos);
}

TEST(Sequences, TablesAndProperties)
{
    auto r = suites::sequence_tables(16);
    EXPECT_TRUE(r.passed()) << r.witness;
    EXPECT_EQ(r.data["kappa"][9], "31/2");
    EXPECT_EQ(r.data["lambda"][6], "-61");
    EXPECT_EQ(r.data["kappa"].size(), 17U);
    auto props = suites::sequence_properties(20, 12);
    EXPECT_TRUE(props.passed()) << props.witness;
}

TEST(Combinatorics, Sums)
{
    EXPECT_EQ(suites::b_coefficient(4, 0), 8);
    EXPECT_EQ(suites::b_coefficient(4, 2), 0);
    // Odd N: b_0 = b_N = 2^{N-1}, zero in between.
    EXPECT_EQ(suites::b_coefficient(5, 0), 16);
    EXPECT_EQ(suites::b_coefficient(5, 5), 16);
    EXPECT_EQ(suites::b_coefficient(5, 3), 0);
    for (unsigned n = 1; n <= 8; ++n) {
        EXPECT_TRUE(suites::combinatorial_sums(n).passed()) << n;
    }
    EXPECT_EQ(suites::combinatorial_sums(0).status, weyl::Status::error);
}

TEST(Oracle, CrossChecks)
{
    EXPECT_TRUE(suites::realization_agreement(99, 20, 4, 8).passed());
    EXPECT_TRUE(suites::pain_realization(4, 8).passed());
    auto r = suites::bender_vs_hermite(5, 40, 1e-9);
    EXPECT_TRUE(r.passed()) << r.witness;
}

TEST(Reports, MismatchWitnessRendersDifference)
{
    weyl::VerificationReport r;
    EXPECT_FALSE(suites::expect_equal(r, "demo", el("q p"), el("p q")));
    EXPECT_EQ(r.status, weyl::Status::fail);
    EXPECT_EQ(r.witness, "demo: lhs - rhs = (-c) * q^0 p^0");
    r.fail("second");
    EXPECT_EQ(r.witness, "demo: lhs - rhs = (-c) * q^0 p^0; second");
    auto j = r.to_json(false);
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["elapsed_ms"], 0.0);
    EXPECT_FALSE(j.contains("data"));
}
