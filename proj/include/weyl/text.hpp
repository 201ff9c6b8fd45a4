#ifndef WEYL_TEXT_HPP
#define WEYL_TEXT_HPP

#include <cctype>
#include <string>
#include <string_view>

#include <weyl/weyl_algebra.hpp>

namespace weyl
{

namespace detail
{

// Recursive-descent evaluator for algebra expressions:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (['*' | '/'] power | <juxtaposed> power)*
//   power  := atom ['^' integer]
//   atom   := integer | 'i' | 'c' | 'p' | 'q' | '(' expr ')'
//           | '[' expr ',' expr ']' | '{' expr ',' expr '}'
//
// The rendered forms of Rational, GaussianRational, CPoly and WeylElement
// are all sentences of this grammar.
class ExpressionParser
{
public:
    ExpressionParser(std::string_view text, const WeylAlgebra &algebra) : text_(text), algebra_(algebra) {}

    WeylElement parse()
    {
        auto r = expr();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input");
        }
        return r;
    }

private:
    [[noreturn]] void fail(const std::string &what) const
    {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) {
            ++pos_;
        }
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char ch)
    {
        if (peek() == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char ch)
    {
        if (!accept(ch)) {
            fail(std::string("expected '") + ch + "'");
        }
    }

    bool starts_atom()
    {
        char ch = peek();
        return std::isdigit(static_cast<unsigned char>(ch)) != 0 || ch == 'i' || ch == 'c' || ch == 'p' || ch == 'q'
               || ch == '(' || ch == '[' || ch == '{';
    }

    WeylElement expr()
    {
        WeylElement r;
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        r = term();
        if (negate) {
            r = -r;
        }
        while (true) {
            if (accept('+')) {
                r += term();
            } else if (accept('-')) {
                r -= term();
            } else {
                return r;
            }
        }
    }

    WeylElement term()
    {
        WeylElement r = power();
        while (true) {
            if (accept('*')) {
                r = algebra_.mul(r, power());
            } else if (accept('/')) {
                r *= CPoly(scalar_of(power()).inverse());
            } else if (starts_atom()) {
                r = algebra_.mul(r, power());
            } else {
                return r;
            }
        }
    }

    GaussianRational scalar_of(const WeylElement &w)
    {
        if (!w.is_scalar() || !w.coefficient(0, 0).is_constant()) {
            fail("divisor must be a numeric constant");
        }
        auto g = w.coefficient(0, 0).constant_term();
        if (g.is_zero()) {
            throw DivisionByZero();
        }
        return g;
    }

    WeylElement power()
    {
        WeylElement base = atom();
        if (accept('^')) {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
                ++pos_;
            }
            if (start == pos_) {
                fail("expected a non-negative integer exponent");
            }
            unsigned e = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
            return algebra_.power(base, e);
        }
        return base;
    }

    WeylElement atom()
    {
        char ch = peek();
        if (std::isdigit(static_cast<unsigned char>(ch)) != 0) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
                ++pos_;
            }
            return WeylElement(CPoly(Rational(mpz_class(std::string(text_.substr(start, pos_ - start))))));
        }
        ++pos_;
        switch (ch) {
            case 'i':
                return WeylElement(GaussianRational::i());
            case 'c':
                return WeylElement(algebra_.central());
            case 'p':
                return WeylElement::p();
            case 'q':
                return WeylElement::q();
            case '(': {
                auto r = expr();
                expect(')');
                return r;
            }
            case '[': {
                auto a = expr();
                expect(',');
                auto b = expr();
                expect(']');
                return algebra_.commutator(a, b);
            }
            case '{': {
                auto a = expr();
                expect(',');
                auto b = expr();
                expect('}');
                return algebra_.anticommutator(a, b);
            }
            default:
                --pos_;
                fail("unexpected character");
        }
    }

    std::string_view text_;
    const WeylAlgebra &algebra_;
    std::size_t pos_ = 0;
};

} // namespace detail

// Evaluates an expression such as "[p^2, q^2] - 4*c*q*p" in normal order.
inline WeylElement parse_element(std::string_view text, const WeylAlgebra &algebra = WeylAlgebra::formal())
{
    return detail::ExpressionParser(text, algebra).parse();
}

inline CPoly parse_cpoly(std::string_view text)
{
    auto w = parse_element(text);
    if (!w.is_scalar()) {
        throw ParseError("'" + std::string(text) + "' is not a polynomial in c");
    }
    return w.coefficient(0, 0);
}

inline GaussianRational parse_gaussian(std::string_view text)
{
    auto cp = parse_cpoly(text);
    if (!cp.is_constant()) {
        throw ParseError("'" + std::string(text) + "' is not a Gaussian rational");
    }
    return cp.constant_term();
}

inline Rational parse_rational(std::string_view text)
{
    auto g = parse_gaussian(text);
    if (!g.is_real()) {
        throw ParseError("'" + std::string(text) + "' is not real");
    }
    return g.re();
}

} // namespace weyl

#endif
