#ifndef WEYL_GAUSSIAN_HPP
#define WEYL_GAUSSIAN_HPP

#include <complex>
#include <ostream>
#include <string>

#include <weyl/rational.hpp>

namespace weyl
{

// Element of Q(i): re + im * i with exact rational parts.
class GaussianRational
{
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {} // NOLINT(google-explicit-constructor)
    template <std::integral I>
    GaussianRational(I n) : re_(n) // NOLINT(google-explicit-constructor)
    {
    }
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {0, 1}; }

    [[nodiscard]] const Rational &re() const noexcept { return re_; }
    [[nodiscard]] const Rational &im() const noexcept { return im_; }
    [[nodiscard]] bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_real() const noexcept { return im_.is_zero(); }

    [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
    // N(a + bi) = a^2 + b^2
    [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }

    [[nodiscard]] GaussianRational inverse() const
    {
        if (is_zero()) {
            throw DivisionByZero();
        }
        auto n = norm();
        return {re_ / n, -im_ / n};
    }

    [[nodiscard]] GaussianRational pow(unsigned n) const
    {
        GaussianRational r(1), b(*this);
        while (n != 0) {
            if (n & 1U) {
                r *= b;
            }
            n >>= 1U;
            if (n != 0) {
                b *= b;
            }
        }
        return r;
    }

    [[nodiscard]] std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    GaussianRational &operator+=(const GaussianRational &o)
    {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational &operator-=(const GaussianRational &o)
    {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational &operator*=(const GaussianRational &o)
    {
        if (o.im_.is_zero()) {
            re_ *= o.re_;
            im_ *= o.re_;
            return *this;
        }
        Rational re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        return *this;
    }
    GaussianRational &operator/=(const GaussianRational &o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational &b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational &b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational &b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational &b) { return a /= b; }

    friend bool operator==(const GaussianRational &, const GaussianRational &) = default;

    // "a", "b*i" or "a+b*i"; unit imaginary parts print as "i" / "-i".
    [[nodiscard]] std::string to_string() const
    {
        if (im_.is_zero()) {
            return re_.to_string();
        }
        std::string imag;
        if (im_ == Rational(1)) {
            imag = "i";
        } else if (im_ == Rational(-1)) {
            imag = "-i";
        } else {
            imag = im_.to_string() + "*i";
        }
        if (re_.is_zero()) {
            return imag;
        }
        if (imag.front() == '-') {
            return re_.to_string() + imag;
        }
        return re_.to_string() + "+" + imag;
    }

    // True when to_string() is a single signed factor that needs no
    // parentheses as a multiplicand.
    [[nodiscard]] bool is_atomic() const { return re_.is_zero() || im_.is_zero(); }

    friend std::ostream &operator<<(std::ostream &os, const GaussianRational &g) { return os << g.to_string(); }

private:
    Rational re_;
    Rational im_;
};

} // namespace weyl

#endif
