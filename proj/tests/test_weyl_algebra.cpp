#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"

using weyl::CPoly;
using weyl::GaussianRational;
using weyl::Rational;
using weyl::WeylAlgebra;
using weyl::WeylElement;

namespace
{

const WeylAlgebra &formal()
{
    static const WeylAlgebra alg = WeylAlgebra::formal();
    return alg;
}

WeylElement el(const char *text) { return weyl::parse_element(text); }

} // namespace

TEST(WeylAlgebra, CanonicalCommutator)
{
    const auto p = WeylElement::p();
    const auto q = WeylElement::q();
    EXPECT_EQ(formal().commutator(p, q), WeylElement(CPoly::c()));
    EXPECT_EQ(formal().mul(p, q), formal().mul(q, p) + WeylElement(CPoly::c()));
}

TEST(WeylAlgebra, FrozenReorderings)
{
    // p^2 q^2 = q^2 p^2 + 4c qp + 2c^2
    EXPECT_EQ(formal().mul(el("p^2"), el("q^2")), el("q^2 p^2 + 4 c q p + 2 c^2"));
    // p^3 q = q p^3 + 3c p^2
    EXPECT_EQ(formal().mul(el("p^3"), el("q")), el("q p^3 + 3 c p^2"));
    EXPECT_EQ(formal().mul(el("p^2"), el("q^2")).to_string(),
              "(2*c^2) * q^0 p^0 + (4*c) * q^1 p^1 + (1) * q^2 p^2");
}

TEST(WeylAlgebra, OscillatorSpecialization)
{
    const auto osc = WeylAlgebra::oscillator();
    EXPECT_EQ(osc.commutator(WeylElement::p(), WeylElement::q()), WeylElement(-GaussianRational::i()));
    weyl::Hamiltonian ham;
    EXPECT_EQ(ham.element(), osc.poly_of_element(weyl::RatPoly::monomial(Rational(1, 2), 2), WeylElement::p())
                                 + osc.poly_of_element(weyl::RatPoly::monomial(Rational(1, 2), 2), WeylElement::q()));
}

TEST(WeylAlgebra, RingAxiomsProperty)
{
    std::mt19937_64 rng(19);
    for (int k = 0; k < 150; ++k) {
        auto a = weyl::testing::random_weyl(rng);
        auto b = weyl::testing::random_weyl(rng);
        auto c = weyl::testing::random_weyl(rng);
        EXPECT_EQ(formal().mul(formal().mul(a, b), c), formal().mul(a, formal().mul(b, c)));
        EXPECT_EQ(formal().mul(a, b + c), formal().mul(a, b) + formal().mul(a, c));
        EXPECT_EQ(formal().mul(a + b, c), formal().mul(a, c) + formal().mul(b, c));
        EXPECT_EQ(formal().mul(a, WeylElement::one()), a);
        // Jacobi identity
        auto j = formal().commutator(a, formal().commutator(b, c)) + formal().commutator(b, formal().commutator(c, a))
                 + formal().commutator(c, formal().commutator(a, b));
        EXPECT_TRUE(j.is_zero());
    }
}

TEST(WeylAlgebra, SpecializationIsAHomomorphism)
{
    std::mt19937_64 rng(23);
    const auto v = GaussianRational(0, -1);
    const auto osc = WeylAlgebra::oscillator();
    for (int k = 0; k < 100; ++k) {
        auto a = weyl::testing::random_weyl(rng);
        auto b = weyl::testing::random_weyl(rng);
        EXPECT_EQ(weyl::specialize_c(formal().mul(a, b), v),
                  osc.mul(weyl::specialize_c(a, v), weyl::specialize_c(b, v)));
    }
}

TEST(WeylAlgebra, NestedBrackets)
{
    const auto p = WeylElement::p();
    const auto q = WeylElement::q();
    // ad_q^n p^2: -2cp, 2c^2, 0
    EXPECT_EQ(formal().left_nested_commutator(el("p^2"), q, 1), el("-2 c p"));
    EXPECT_EQ(formal().left_nested_commutator(el("p^2"), q, 2), el("2 c^2"));
    EXPECT_TRUE(formal().left_nested_commutator(el("p^2"), q, 3).is_zero());
    EXPECT_EQ(formal().nested_commutator(p, q, 1), formal().commutator(p, q));
    EXPECT_EQ(formal().nested_anticommutator(q, p, 0), q);
    EXPECT_EQ(formal().nested_anticommutator(q, p, 2),
              formal().anticommutator(formal().anticommutator(q, p), p));
}

TEST(WeylAlgebra, HadamardConjugation)
{
    const auto q = WeylElement::q();
    // e^q p e^{-q} = p + [q,p] = p - c
    EXPECT_EQ(formal().hadamard_conjugate(q, WeylElement::p(), 1), el("p - c"));
    // e^{tq} p^2 e^{-tq} = p^2 - 2tc p + t^2 c^2
    EXPECT_EQ(formal().hadamard_conjugate(q, el("p^2"), Rational(1, 2)), el("p^2 - c p + c^2/4"));
    // ad_p never terminates on q^k p^0 ... ad_{qp} does not terminate on p.
    EXPECT_THROW((void)formal().hadamard_conjugate(el("q p"), WeylElement::p(), 1, 16), weyl::NonTerminatingSeries);
}

TEST(WeylAlgebra, HamiltonianNestedAnticommutators)
{
    weyl::Hamiltonian ham;
    auto anti = ham.nested_anticommutators(3);
    ASSERT_EQ(anti.size(), 4U);
    EXPECT_EQ(anti[0], WeylElement::q());
    EXPECT_EQ(anti[1], ham.algebra().anticommutator(WeylElement::q(), ham.element()));
    EXPECT_EQ(ham.shifted_nested_anticomm(0, 3), anti[3]);
}

TEST(Text, ParseAndRoundTrip)
{
    EXPECT_EQ(el("[p, q]"), WeylElement(CPoly::c()));
    EXPECT_EQ(el("{p, q}"), el("2 q p + c"));
    EXPECT_EQ(el("(p + q)^2"), el("p^2 + 2 q p + c + q^2"));
    EXPECT_EQ(el("p/2 + i*q"), el("(1/2) p + i q"));
    EXPECT_EQ(weyl::parse_element("[p, q]", WeylAlgebra::oscillator()), WeylElement(-GaussianRational::i()));
    EXPECT_THROW(el("p / q"), weyl::ParseError);
    EXPECT_THROW(el("p +"), weyl::ParseError);
    EXPECT_THROW(el("p / 0"), weyl::DivisionByZero);
    EXPECT_THROW(el("x"), weyl::ParseError);

    std::mt19937_64 rng(29);
    for (int k = 0; k < 100; ++k) {
        auto w = weyl::testing::random_weyl(rng);
        EXPECT_EQ(el(w.to_string().c_str()), w) << w.to_string();
    }
}
