#ifndef WEYL_CPOLY_HPP
#define WEYL_CPOLY_HPP

#include <map>
#include <ostream>
#include <string>

#include <weyl/gaussian.hpp>

namespace weyl
{

// Polynomial in the central commutation symbol c with Q(i) coefficients.
// Sparse and canonical: no zero coefficient is ever stored.
class CPoly
{
public:
    using map_type = std::map<unsigned, GaussianRational>;

    CPoly() = default;
    CPoly(GaussianRational constant) // NOLINT(google-explicit-constructor)
    {
        if (!constant.is_zero()) {
            terms_.emplace(0U, std::move(constant));
        }
    }
    template <std::integral I>
    CPoly(I n) : CPoly(GaussianRational(n)) // NOLINT(google-explicit-constructor)
    {
    }
    CPoly(Rational r) : CPoly(GaussianRational(std::move(r))) {} // NOLINT(google-explicit-constructor)

    static CPoly c() { return monomial(1, 1); }

    static CPoly monomial(GaussianRational coeff, unsigned degree)
    {
        CPoly r;
        if (!coeff.is_zero()) {
            r.terms_.emplace(degree, std::move(coeff));
        }
        return r;
    }

    [[nodiscard]] const map_type &terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    [[nodiscard]] unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
    [[nodiscard]] unsigned low_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }

    [[nodiscard]] GaussianRational coefficient(unsigned k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? GaussianRational() : it->second;
    }
    [[nodiscard]] GaussianRational constant_term() const { return coefficient(0); }

    // Evaluation at c = v (Horner over the sparse degrees).
    [[nodiscard]] GaussianRational subst(const GaussianRational &v) const
    {
        GaussianRational acc;
        unsigned prev = degree();
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            acc *= v.pow(prev - it->first);
            acc += it->second;
            prev = it->first;
        }
        return acc * v.pow(prev);
    }

    // Exact division by c^k; throws NonDivisible if a lower power is present.
    [[nodiscard]] CPoly divide_by_c(unsigned k = 1) const
    {
        CPoly r;
        for (const auto &[d, g] : terms_) {
            if (d < k) {
                throw NonDivisible("coefficient " + to_string() + " is not divisible by c^" + std::to_string(k));
            }
            r.terms_.emplace_hint(r.terms_.end(), d - k, g);
        }
        return r;
    }

    [[nodiscard]] CPoly shift_c(unsigned k) const
    {
        CPoly r;
        for (const auto &[d, g] : terms_) {
            r.terms_.emplace_hint(r.terms_.end(), d + k, g);
        }
        return r;
    }

    CPoly operator-() const
    {
        CPoly r(*this);
        for (auto &[d, g] : r.terms_) {
            g = -g;
        }
        return r;
    }

    CPoly &operator+=(const CPoly &o)
    {
        for (const auto &[d, g] : o.terms_) {
            add_term(d, g);
        }
        return *this;
    }
    CPoly &operator-=(const CPoly &o)
    {
        for (const auto &[d, g] : o.terms_) {
            add_term(d, -g);
        }
        return *this;
    }
    CPoly &operator*=(const CPoly &o)
    {
        *this = *this * o;
        return *this;
    }
    CPoly &operator*=(const GaussianRational &s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto &[d, g] : terms_) {
            g *= s;
        }
        return *this;
    }

    friend CPoly operator+(CPoly a, const CPoly &b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly &b) { return a -= b; }
    friend CPoly operator*(const CPoly &a, const CPoly &b)
    {
        CPoly r;
        for (const auto &[da, ga] : a.terms_) {
            for (const auto &[db, gb] : b.terms_) {
                r.add_term(da + db, ga * gb);
            }
        }
        return r;
    }
    friend CPoly operator*(CPoly a, const GaussianRational &s) { return a *= s; }
    friend CPoly operator*(const GaussianRational &s, CPoly a) { return a *= s; }

    [[nodiscard]] CPoly pow(unsigned n) const
    {
        CPoly r(1);
        for (unsigned k = 0; k < n; ++k) {
            r *= *this;
        }
        return r;
    }

    friend bool operator==(const CPoly &, const CPoly &) = default;

    // Ascending powers of c: "1 + 4*c + 2*c^2", complex coefficients in
    // parentheses: "(1+2*i)*c".
    [[nodiscard]] std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        bool first = true;
        for (const auto &[d, g] : terms_) {
            std::string body;
            bool negative = false;
            if (d == 0) {
                body = g.to_string();
                if (g.is_atomic() && body.front() == '-') {
                    negative = true;
                    body.erase(0, 1);
                }
            } else {
                std::string cpow = d == 1 ? "c" : "c^" + std::to_string(d);
                if (g == GaussianRational(1)) {
                    body = cpow;
                } else if (g == GaussianRational(-1)) {
                    negative = true;
                    body = cpow;
                } else if (g.is_atomic()) {
                    body = g.to_string();
                    if (body.front() == '-') {
                        negative = true;
                        body.erase(0, 1);
                    }
                    body += "*" + cpow;
                } else {
                    body = "(" + g.to_string() + ")*" + cpow;
                }
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

    friend std::ostream &operator<<(std::ostream &os, const CPoly &p) { return os << p.to_string(); }

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

inline GaussianRational cpoly_subst(const CPoly &p, const GaussianRational &v) { return p.subst(v); }

} // namespace weyl

#endif
