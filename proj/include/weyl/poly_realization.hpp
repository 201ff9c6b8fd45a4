#ifndef WEYL_POLY_REALIZATION_HPP
#define WEYL_POLY_REALIZATION_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>

#include <weyl/weyl_algebra.hpp>

namespace weyl
{

// Polynomial in x with coefficients in Q(i)[c]; the space the realization
// p = c d/dx, q = x acts on.
class XPoly
{
public:
    using map_type = std::map<unsigned, CPoly>;

    XPoly() = default;

    static XPoly monomial(unsigned degree, CPoly coeff = 1)
    {
        XPoly r;
        r.add_term(degree, coeff);
        return r;
    }

    [[nodiscard]] const map_type &terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] CPoly coefficient(unsigned k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? CPoly() : it->second;
    }

    XPoly &operator+=(const XPoly &o)
    {
        for (const auto &[d, cf] : o.terms_) {
            add_term(d, cf);
        }
        return *this;
    }
    XPoly &operator-=(const XPoly &o)
    {
        for (const auto &[d, cf] : o.terms_) {
            add_term(d, -cf);
        }
        return *this;
    }
    friend XPoly operator+(XPoly a, const XPoly &b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly &b) { return a -= b; }
    friend bool operator==(const XPoly &, const XPoly &) = default;

    [[nodiscard]] std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto &[d, cf] : terms_) {
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + cf.to_string() + ")*x^" + std::to_string(d);
        }
        return out;
    }

    void add_term(unsigned d, const CPoly &cf)
    {
        if (cf.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(d, cf);
        if (!inserted) {
            it->second += cf;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

private:
    map_type terms_;
};

// Concrete action of the algebra on XPoly: q multiplies by x, p is
// `central` times d/dx. Each normal-ordered monomial q^a p^b acts on x^l as
// central^b (l)_b x^{l-b+a}; no reordering is involved, so this path is
// independent of the product kernel in WeylAlgebra.
class Realization
{
public:
    explicit Realization(const WeylAlgebra &algebra = WeylAlgebra::formal()) : central_(algebra.central()) {}

    [[nodiscard]] XPoly apply(const WeylElement &w, const XPoly &f) const
    {
        XPoly r;
        for (const auto &[m, wc] : w.terms()) {
            for (const auto &[l, fc] : f.terms()) {
                if (m.p > l) {
                    continue;
                }
                mpz_class falling = 1;
                for (unsigned j = 0; j < m.p; ++j) {
                    falling *= l - j;
                }
                CPoly cf = wc * fc * central_.pow(m.p);
                cf *= GaussianRational(Rational(falling));
                r.add_term(l - m.p + m.q, cf);
            }
        }
        return r;
    }

    [[nodiscard]] XPoly apply_monomial(const WeylElement &w, unsigned l) const { return apply(w, XPoly::monomial(l)); }

    // Reconstructs the normal-ordered coefficients of an element from its
    // action on x^0 .. x^max_l. Terms with p-degree > max_l are invisible.
    [[nodiscard]] WeylElement recover(const std::function<XPoly(unsigned)> &action, unsigned max_l) const
    {
        WeylElement w;
        for (unsigned l = 0; l <= max_l; ++l) {
            XPoly residual = action(l) - apply_monomial(w, l);
            // residual = sum_a coeff_{a,l} central^l l! x^a
            for (const auto &[a, cf] : residual.terms()) {
                CPoly scaled = divide_by_central_power(cf, l);
                scaled *= GaussianRational(Rational(factorial(l))).inverse();
                w.add_term({a, l}, scaled);
            }
        }
        return w;
    }

    // Closed form [p^n/n!, q^m/m!] x^l = (c^n/m!)(C(m+l,n) - C(l,n)) x^{l-n+m}.
    [[nodiscard]] std::pair<CPoly, unsigned> monomial_commutator_action(unsigned n, unsigned m, unsigned l) const
    {
        if (l < n) {
            throw PreconditionViolation("monomial_commutator_action requires l >= n");
        }
        Rational k = Rational(binomial(m + l, n) - binomial(l, n)) / Rational(factorial(m));
        return {central_.pow(n) * GaussianRational(k), l - n + m};
    }

    // Closed form {p^n/n!, q^m/m!} x^l = (c^n/m!)(C(m+l,n) + C(l,n)) x^{l-n+m}.
    [[nodiscard]] std::pair<CPoly, unsigned> monomial_anticommutator_action(unsigned n, unsigned m, unsigned l) const
    {
        if (l < n) {
            throw PreconditionViolation("monomial_anticommutator_action requires l >= n");
        }
        Rational k = Rational(binomial(m + l, n) + binomial(l, n)) / Rational(factorial(m));
        return {central_.pow(n) * GaussianRational(k), l - n + m};
    }

    [[nodiscard]] const CPoly &central() const noexcept { return central_; }

private:
    [[nodiscard]] CPoly divide_by_central_power(const CPoly &cf, unsigned l) const
    {
        if (l == 0) {
            return cf;
        }
        if (central_.is_constant()) {
            return cf * central_.constant_term().pow(l).inverse();
        }
        if (central_ != CPoly::c()) {
            throw PreconditionViolation("recovery supports central = c or a nonzero constant");
        }
        return cf.divide_by_c(l);
    }

    CPoly central_;
};

inline XPoly apply_element(const WeylElement &w, const XPoly &f) { return Realization().apply(w, f); }

inline std::pair<CPoly, unsigned> monomial_commutator_action(unsigned n, unsigned m, unsigned l)
{
    return Realization().monomial_commutator_action(n, m, l);
}

// Checks the product kernel against the realization on all monomial pairs
// p^b * q^a with a, b <= max_exp, acting on x^0 .. x^{max_exp + 2}.
inline bool validate_reordering_kernel(unsigned max_exp = 6, const WeylAlgebra &algebra = WeylAlgebra::formal())
{
    Realization real(algebra);
    for (unsigned b = 0; b <= max_exp; ++b) {
        for (unsigned a = 0; a <= max_exp; ++a) {
            auto pb = WeylElement::monomial(1, 0, b);
            auto qa = WeylElement::monomial(1, a, 0);
            auto product = algebra.mul(pb, qa);
            for (unsigned l = 0; l <= max_exp + 2; ++l) {
                auto direct = real.apply(pb, real.apply_monomial(qa, l));
                if (real.apply_monomial(product, l) != direct) {
                    return false;
                }
            }
        }
    }
    return true;
}

} // namespace weyl

#endif
