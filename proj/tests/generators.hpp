#ifndef WEYL_TESTS_GENERATORS_HPP
#define WEYL_TESTS_GENERATORS_HPP

#include <random>

#include <weyl/weyl.hpp>

namespace weyl::testing
{

inline Rational random_rational(std::mt19937_64 &rng, int bound = 9)
{
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    return {num(rng), den(rng)};
}

inline GaussianRational random_gaussian(std::mt19937_64 &rng, int bound = 9)
{
    return {random_rational(rng, bound), random_rational(rng, bound)};
}

inline CPoly random_cpoly(std::mt19937_64 &rng, unsigned max_degree = 3)
{
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    CPoly r;
    for (unsigned k = 0, n = deg(rng); k <= n; ++k) {
        r += CPoly::monomial(random_gaussian(rng, 4), deg(rng));
    }
    return r;
}

inline WeylElement random_weyl(std::mt19937_64 &rng, unsigned max_degree = 3)
{
    std::uniform_int_distribution<unsigned> count(0, 4);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    WeylElement w;
    for (unsigned k = 0, n = count(rng); k < n; ++k) {
        w.add_term({deg(rng), deg(rng)}, random_cpoly(rng, 2));
    }
    return w;
}

inline RatPoly random_ratpoly(std::mt19937_64 &rng, unsigned max_degree = 5)
{
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::vector<GaussianRational> cs(deg(rng) + 1);
    for (auto &c : cs) {
        c = random_rational(rng, 6);
    }
    return RatPoly::from_coefficients(cs);
}

} // namespace weyl::testing

#endif
