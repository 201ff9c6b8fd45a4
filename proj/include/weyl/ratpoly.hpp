#ifndef WEYL_RATPOLY_HPP
#define WEYL_RATPOLY_HPP

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <weyl/gaussian.hpp>

namespace weyl
{

// Univariate polynomial over Q(i) in a commuting indeterminate. Used for
// Euler polynomials, for f(p), g(q) and for polynomials in z.
class RatPoly
{
public:
    using map_type = std::map<unsigned, GaussianRational>;

    RatPoly() = default;
    RatPoly(GaussianRational constant) // NOLINT(google-explicit-constructor)
    {
        if (!constant.is_zero()) {
            terms_.emplace(0U, std::move(constant));
        }
    }
    template <std::integral I>
    RatPoly(I n) : RatPoly(GaussianRational(n)) // NOLINT(google-explicit-constructor)
    {
    }
    RatPoly(Rational r) : RatPoly(GaussianRational(std::move(r))) {} // NOLINT(google-explicit-constructor)

    // Dense coefficients, lowest degree first.
    static RatPoly from_coefficients(const std::vector<GaussianRational> &coeffs)
    {
        RatPoly r;
        for (unsigned k = 0; k < coeffs.size(); ++k) {
            r.add_term(k, coeffs[k]);
        }
        return r;
    }

    static RatPoly monomial(GaussianRational coeff, unsigned degree)
    {
        RatPoly r;
        r.add_term(degree, coeff);
        return r;
    }

    static RatPoly x() { return monomial(1, 1); }

    [[nodiscard]] const map_type &terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    [[nodiscard]] GaussianRational leading_coefficient() const
    {
        return terms_.empty() ? GaussianRational() : terms_.rbegin()->second;
    }
    [[nodiscard]] GaussianRational coefficient(unsigned k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    [[nodiscard]] bool is_real() const
    {
        for (const auto &[d, g] : terms_) {
            if (!g.is_real()) {
                return false;
            }
        }
        return true;
    }

    [[nodiscard]] GaussianRational evaluate(const GaussianRational &v) const
    {
        GaussianRational acc;
        for (unsigned k = degree() + 1; k-- > 0;) {
            acc *= v;
            acc += coefficient(k);
        }
        return acc;
    }

    // P(x + a)
    [[nodiscard]] RatPoly shift(const GaussianRational &a) const
    {
        RatPoly r;
        for (const auto &[d, g] : terms_) {
            GaussianRational apow(1);
            for (unsigned j = 0; j <= d; ++j) {
                // coefficient of x^{d-j} in (x + a)^d is C(d, j) a^j
                r.add_term(d - j, g * GaussianRational(Rational(binomial(d, j))) * apow);
                apow *= a;
            }
        }
        return r;
    }

    [[nodiscard]] RatPoly derivative(unsigned k = 1) const
    {
        RatPoly r;
        for (const auto &[d, g] : terms_) {
            if (d < k) {
                continue;
            }
            mpz_class falling = 1;
            for (unsigned j = 0; j < k; ++j) {
                falling *= d - j;
            }
            r.add_term(d - k, g * GaussianRational(Rational(falling)));
        }
        return r;
    }

    // Antiderivative with zero constant term.
    [[nodiscard]] RatPoly antiderivative() const
    {
        RatPoly r;
        for (const auto &[d, g] : terms_) {
            r.add_term(d + 1, g * GaussianRational(Rational(1, d + 1)));
        }
        return r;
    }

    RatPoly operator-() const
    {
        RatPoly r(*this);
        for (auto &[d, g] : r.terms_) {
            g = -g;
        }
        return r;
    }

    RatPoly &operator+=(const RatPoly &o)
    {
        for (const auto &[d, g] : o.terms_) {
            add_term(d, g);
        }
        return *this;
    }
    RatPoly &operator-=(const RatPoly &o)
    {
        for (const auto &[d, g] : o.terms_) {
            add_term(d, -g);
        }
        return *this;
    }
    RatPoly &operator*=(const GaussianRational &s)
    {
        if (s.is_zero()) {
            terms_.clear();
        }
        for (auto &[d, g] : terms_) {
            g *= s;
        }
        return *this;
    }

    friend RatPoly operator+(RatPoly a, const RatPoly &b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly &b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const GaussianRational &s) { return a *= s; }
    friend RatPoly operator*(const GaussianRational &s, RatPoly a) { return a *= s; }
    friend RatPoly operator*(const RatPoly &a, const RatPoly &b)
    {
        RatPoly r;
        for (const auto &[da, ga] : a.terms_) {
            for (const auto &[db, gb] : b.terms_) {
                r.add_term(da + db, ga * gb);
            }
        }
        return r;
    }

    friend bool operator==(const RatPoly &, const RatPoly &) = default;

    // Descending powers: "x^6 - 15/4*x^4 + 75/16*x^2 - 61/64".
    [[nodiscard]] std::string to_string(const std::string &var = "x") const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto &[d, g] = *it;
            std::string xpow = d == 0 ? "" : (d == 1 ? var : var + "^" + std::to_string(d));
            std::string body;
            bool negative = false;
            if (g.is_atomic()) {
                std::string s = g.to_string();
                if (s.front() == '-') {
                    negative = true;
                    s.erase(0, 1);
                }
                if (d == 0) {
                    body = s;
                } else if (s == "1") {
                    body = xpow;
                } else {
                    body = s + "*" + xpow;
                }
            } else {
                body = "(" + g.to_string() + ")" + (d == 0 ? "" : "*" + xpow);
            }
            if (first) {
                out = negative ? "-" + body : body;
            } else {
                out += negative ? " - " : " + ";
                out += body;
            }
            first = false;
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const RatPoly &p) { return os << p.to_string(); }

private:
    void add_term(unsigned d, const GaussianRational &g)
    {
        if (g.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(d, g);
        if (!inserted) {
            it->second += g;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    map_type terms_;
};

} // namespace weyl

#endif
