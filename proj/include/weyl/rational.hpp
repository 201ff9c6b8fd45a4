#ifndef WEYL_RATIONAL_HPP
#define WEYL_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include <weyl/errors.hpp>

namespace weyl
{

// Exact rational number backed by GMP. Always held in lowest terms with a
// positive denominator, so structural equality is value equality.
class Rational
{
public:
    Rational() = default;

    template <std::integral I>
    Rational(I n) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<I>) {
            value_ = static_cast<long>(n);
        } else {
            value_ = static_cast<unsigned long>(n);
        }
    }

    Rational(const mpz_class &n) : value_(n) {} // NOLINT(google-explicit-constructor)
    // Unevaluated integer expressions such as binomial(n, k) * pow2(k).
    template <class E>
    Rational(const __gmp_expr<mpz_t, E> &e) : value_(mpz_class(e)) // NOLINT(google-explicit-constructor)
    {
    }

    Rational(const mpz_class &num, const mpz_class &den)
    {
        if (den == 0) {
            throw DivisionByZero();
        }
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    explicit Rational(mpq_class v) : value_(std::move(v))
    {
        if (value_.get_den() == 0) {
            throw DivisionByZero();
        }
        value_.canonicalize();
    }

    // Accepts "n" or "n/d" with an optional sign on n.
    static Rational parse(std::string_view text)
    {
        std::string s(text);
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) {
                return Rational(mpz_class(strip_plus(s)));
            }
            return Rational(mpz_class(strip_plus(s.substr(0, slash))), mpz_class(s.substr(slash + 1)));
        } catch (const std::invalid_argument &) {
            throw ParseError("malformed rational '" + s + "'");
        }
    }

    [[nodiscard]] const mpq_class &value() const noexcept { return value_; }
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] bool is_zero() const noexcept { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const noexcept { return sgn(value_); }
    [[nodiscard]] double to_double() const { return value_.get_d(); }

    [[nodiscard]] Rational inverse() const
    {
        if (is_zero()) {
            throw DivisionByZero();
        }
        return Rational(mpq_class(1) / value_);
    }

    [[nodiscard]] Rational pow(unsigned n) const
    {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), n);
        mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), n);
        return Rational(num, den);
    }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational &operator+=(const Rational &o)
    {
        value_ += o.value_;
        return *this;
    }
    Rational &operator-=(const Rational &o)
    {
        value_ -= o.value_;
        return *this;
    }
    Rational &operator*=(const Rational &o)
    {
        value_ *= o.value_;
        return *this;
    }
    Rational &operator/=(const Rational &o)
    {
        if (o.is_zero()) {
            throw DivisionByZero();
        }
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        int r = cmp(a.value_, b.value_);
        return r < 0 ? std::strong_ordering::less : (r > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    // "num/den", or just "num" when the denominator is 1.
    [[nodiscard]] std::string to_string() const
    {
        if (is_integer()) {
            return value_.get_num().get_str();
        }
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

private:
    static std::string strip_plus(std::string s)
    {
        if (!s.empty() && s.front() == '+') {
            s.erase(0, 1);
        }
        return s;
    }

    mpq_class value_{0};
};

enum class ArithOp { add, sub, mul, div };

inline Rational rational_arith(const Rational &a, const Rational &b, ArithOp op)
{
    switch (op) {
        case ArithOp::add:
            return a + b;
        case ArithOp::sub:
            return a - b;
        case ArithOp::mul:
            return a * b;
        case ArithOp::div:
            return a / b;
    }
    return {};
}

// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n.
inline mpz_class binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline mpz_class factorial(unsigned long n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline mpz_class pow2(unsigned long n)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
    return r;
}

} // namespace weyl

#endif
