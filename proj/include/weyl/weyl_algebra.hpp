#ifndef WEYL_WEYL_ALGEBRA_HPP
#define WEYL_WEYL_ALGEBRA_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <weyl/cpoly.hpp>
#include <weyl/ratpoly.hpp>

namespace weyl
{

// q^q p^p. Ordered lexicographically by (q, p).
struct Monomial {
    unsigned q = 0;
    unsigned p = 0;

    friend auto operator<=>(const Monomial &, const Monomial &) = default;
};

// Normal-ordered element sum coeff_{a,b} q^a p^b of the algebra generated by
// p, q with pq - qp = c. Canonical: no zero coefficient is stored.
class WeylElement
{
public:
    using map_type = std::map<Monomial, CPoly>;

    WeylElement() = default;
    WeylElement(CPoly scalar) // NOLINT(google-explicit-constructor)
    {
        add_term({0, 0}, scalar);
    }
    template <std::integral I>
    WeylElement(I n) : WeylElement(CPoly(n)) // NOLINT(google-explicit-constructor)
    {
    }
    WeylElement(GaussianRational g) : WeylElement(CPoly(std::move(g))) {} // NOLINT(google-explicit-constructor)
    WeylElement(Rational r) : WeylElement(CPoly(std::move(r))) {}         // NOLINT(google-explicit-constructor)

    static WeylElement monomial(CPoly coeff, unsigned q_exp, unsigned p_exp)
    {
        WeylElement w;
        w.add_term({q_exp, p_exp}, coeff);
        return w;
    }
    static WeylElement q() { return monomial(1, 1, 0); }
    static WeylElement p() { return monomial(1, 0, 1); }
    static WeylElement one() { return monomial(1, 0, 0); }

    [[nodiscard]] const map_type &terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    [[nodiscard]] CPoly coefficient(unsigned q_exp, unsigned p_exp) const
    {
        auto it = terms_.find({q_exp, p_exp});
        return it == terms_.end() ? CPoly() : it->second;
    }

    [[nodiscard]] bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0}); }

    // Total degree in (q, p).
    [[nodiscard]] unsigned degree() const
    {
        unsigned d = 0;
        for (const auto &[m, cf] : terms_) {
            d = std::max(d, m.q + m.p);
        }
        return d;
    }
    [[nodiscard]] unsigned p_degree() const
    {
        unsigned d = 0;
        for (const auto &[m, cf] : terms_) {
            d = std::max(d, m.p);
        }
        return d;
    }
    [[nodiscard]] unsigned q_degree() const
    {
        unsigned d = 0;
        for (const auto &[m, cf] : terms_) {
            d = std::max(d, m.q);
        }
        return d;
    }

    WeylElement operator-() const
    {
        WeylElement r(*this);
        for (auto &[m, cf] : r.terms_) {
            cf = -cf;
        }
        return r;
    }

    WeylElement &operator+=(const WeylElement &o)
    {
        for (const auto &[m, cf] : o.terms_) {
            add_term(m, cf);
        }
        return *this;
    }
    WeylElement &operator-=(const WeylElement &o)
    {
        for (const auto &[m, cf] : o.terms_) {
            add_term(m, -cf);
        }
        return *this;
    }
    // Multiplication by a central scalar.
    WeylElement &operator*=(const CPoly &s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        map_type out;
        for (auto &[m, cf] : terms_) {
            CPoly prod = cf * s;
            if (!prod.is_zero()) {
                out.emplace_hint(out.end(), m, std::move(prod));
            }
        }
        terms_ = std::move(out);
        return *this;
    }

    friend WeylElement operator+(WeylElement a, const WeylElement &b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement &b) { return a -= b; }
    friend WeylElement operator*(WeylElement a, const CPoly &s) { return a *= s; }
    friend WeylElement operator*(const CPoly &s, WeylElement a) { return a *= s; }

    friend bool operator==(const WeylElement &, const WeylElement &) = default;

    // Terms "(coeff) * q^a p^b" sorted by (a, b) and joined by " + ".
    [[nodiscard]] std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (const auto &[m, cf] : terms_) {
            if (!out.empty()) {
                out += " + ";
            }
            out += "(" + cf.to_string() + ") * q^" + std::to_string(m.q) + " p^" + std::to_string(m.p);
        }
        return out;
    }

    friend std::ostream &operator<<(std::ostream &os, const WeylElement &w) { return os << w.to_string(); }

    // Accumulation used by the product kernel.
    void add_term(const Monomial &m, const CPoly &cf)
    {
        if (cf.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, cf);
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

// Evaluates every coefficient at c = v.
inline WeylElement specialize_c(const WeylElement &w, const GaussianRational &v)
{
    WeylElement r;
    for (const auto &[m, cf] : w.terms()) {
        r.add_term(m, CPoly(cf.subst(v)));
    }
    return r;
}

// The algebra with a fixed central value of pq - qp: either the formal
// symbol c or a specialization such as c = -i.
class WeylAlgebra
{
public:
    static WeylAlgebra formal() { return WeylAlgebra(CPoly::c()); }
    static WeylAlgebra specialized(const GaussianRational &v) { return WeylAlgebra(CPoly(v)); }
    static WeylAlgebra oscillator() { return specialized({0, -1}); }

    explicit WeylAlgebra(CPoly central) : central_(std::move(central)) {}

    [[nodiscard]] const CPoly &central() const noexcept { return central_; }

    // Product kernel. Moving p^b past q^a uses
    //   p^b q^a = sum_k k! C(b,k) C(a,k) c^k q^{a-k} p^{b-k}.
    [[nodiscard]] WeylElement mul(const WeylElement &x, const WeylElement &y) const
    {
        if (x.is_zero() || y.is_zero()) {
            return {};
        }
        unsigned kmax = std::min(x.p_degree(), y.q_degree());
        std::vector<CPoly> cpow(kmax + 1);
        cpow[0] = 1;
        for (unsigned k = 1; k <= kmax; ++k) {
            cpow[k] = cpow[k - 1] * central_;
        }
        WeylElement r;
        for (const auto &[mx, cx] : x.terms()) {
            for (const auto &[my, cy] : y.terms()) {
                CPoly base = cx * cy;
                unsigned top = std::min(mx.p, my.q);
                mpz_class kfact = 1;
                for (unsigned k = 0; k <= top; ++k) {
                    if (k > 0) {
                        kfact *= k;
                    }
                    mpz_class weight = kfact * binomial(mx.p, k) * binomial(my.q, k);
                    CPoly term = base * cpow[k];
                    term *= GaussianRational(Rational(weight));
                    r.add_term({mx.q + my.q - k, mx.p + my.p - k}, term);
                }
            }
        }
        return r;
    }

    [[nodiscard]] WeylElement power(const WeylElement &w, unsigned n) const
    {
        WeylElement r = WeylElement::one();
        for (unsigned k = 0; k < n; ++k) {
            r = mul(r, w);
        }
        return r;
    }

    [[nodiscard]] WeylElement commutator(const WeylElement &a, const WeylElement &b) const { return mul(a, b) - mul(b, a); }
    [[nodiscard]] WeylElement anticommutator(const WeylElement &a, const WeylElement &b) const { return mul(a, b) + mul(b, a); }

    // [w, v]_n = [[w, v]_{n-1}, v], with [w, v]_0 = w.
    [[nodiscard]] WeylElement nested_commutator(const WeylElement &w, const WeylElement &v, unsigned n) const
    {
        WeylElement r = w;
        for (unsigned k = 0; k < n; ++k) {
            r = commutator(r, v);
        }
        return r;
    }

    // {w, v}_n = {{w, v}_{n-1}, v}, with {w, v}_0 = w.
    [[nodiscard]] WeylElement nested_anticommutator(const WeylElement &w, const WeylElement &v, unsigned n) const
    {
        WeylElement r = w;
        for (unsigned k = 0; k < n; ++k) {
            r = anticommutator(r, v);
        }
        return r;
    }

    // ad_x^n(h) = [x, [x, ..., [x, h]]].
    [[nodiscard]] WeylElement left_nested_commutator(const WeylElement &h, const WeylElement &x, unsigned n) const
    {
        WeylElement r = h;
        for (unsigned k = 0; k < n && !r.is_zero(); ++k) {
            r = commutator(x, r);
        }
        return r;
    }

    // sum_k P_k w^k
    [[nodiscard]] WeylElement poly_of_element(const RatPoly &poly, const WeylElement &w) const
    {
        WeylElement r;
        WeylElement wpow = WeylElement::one();
        for (unsigned k = 0; k <= poly.degree(); ++k) {
            if (k > 0) {
                wpow = mul(wpow, w);
            }
            auto cf = poly.coefficient(k);
            if (!cf.is_zero()) {
                r += wpow * CPoly(cf);
            }
        }
        return r;
    }

    // e^{t x} w e^{-t x} = sum_n t^n / n! ad_x^n(w), which must terminate
    // within `cap` iterations.
    [[nodiscard]] WeylElement hadamard_conjugate(const WeylElement &x, const WeylElement &w, const Rational &t,
                                                 unsigned cap = default_hadamard_cap) const
    {
        WeylElement sum;
        WeylElement iterate = w;
        Rational weight(1);
        for (unsigned n = 0; !iterate.is_zero(); ++n) {
            if (n >= cap) {
                throw NonTerminatingSeries("ad_x^" + std::to_string(n) + " is still nonzero after " + std::to_string(cap)
                                           + " iterations");
            }
            sum += iterate * CPoly(weight);
            iterate = commutator(x, iterate);
            weight = weight * t / Rational(n + 1);
        }
        return sum;
    }

    static constexpr unsigned default_hadamard_cap = 64;

private:
    CPoly central_;
};

inline WeylElement normal_mul(const WeylElement &a, const WeylElement &b) { return WeylAlgebra::formal().mul(a, b); }

// H = (p^2 + q^2) / 2 in the algebra with c = -i, i.e. qp - pq = i.
class Hamiltonian
{
public:
    Hamiltonian() : algebra_(WeylAlgebra::oscillator())
    {
        const auto p = WeylElement::p();
        const auto q = WeylElement::q();
        element_ = (algebra_.mul(p, p) + algebra_.mul(q, q)) * CPoly(Rational(1, 2));
        const CPoly i = GaussianRational::i();
        if (algebra_.commutator(q, element_) != p * i || algebra_.commutator(p, element_) != q * (-i)) {
            throw InvariantViolation("oscillator Hamiltonian fails [q,H] = ip, [p,H] = -iq");
        }
    }

    [[nodiscard]] const WeylElement &element() const noexcept { return element_; }
    [[nodiscard]] const WeylAlgebra &algebra() const noexcept { return algebra_; }

    // {q, H}_k for k = 0..n, with {q, H}_0 = q.
    [[nodiscard]] std::vector<WeylElement> nested_anticommutators(unsigned n) const
    {
        std::vector<WeylElement> out;
        out.reserve(n + 1);
        out.push_back(WeylElement::q());
        for (unsigned k = 1; k <= n; ++k) {
            out.push_back(algebra_.anticommutator(out.back(), element_));
        }
        return out;
    }

    // ({q,H} + a)_n = sum_k C(n,k) a^{n-k} {q,H}_k
    [[nodiscard]] WeylElement shifted_nested_anticomm(const Rational &a, unsigned n) const
    {
        return shifted_from(nested_anticommutators(n), a, n);
    }

    static WeylElement shifted_from(const std::vector<WeylElement> &anticomms, const Rational &a, unsigned n)
    {
        WeylElement r;
        for (unsigned k = 0; k <= n; ++k) {
            r += anticomms.at(k) * CPoly(Rational(binomial(n, k)) * a.pow(n - k));
        }
        return r;
    }

private:
    WeylAlgebra algebra_;
    WeylElement element_;
};

} // namespace weyl

#endif
