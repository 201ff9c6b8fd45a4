#ifndef WEYL_HERMITE_ORACLE_HPP
#define WEYL_HERMITE_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include <weyl/report.hpp>
#include <weyl/weyl_algebra.hpp>

namespace weyl::hermite
{

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Truncated matrices of q = i d/dx, p = x and H = (p^2 + q^2)/2 in the
// Hermite-function basis psi_0 .. psi_{dim-1}. Column l is the image of
// psi_l. Operators shift the index by at most one, so only the last
// column is affected by truncation.
struct OscillatorMatrices {
    int dim = 0;
    Matrix q_mat;
    Matrix p_mat;
    Matrix h_mat;
};

inline OscillatorMatrices build_operators(int dim)
{
    if (dim < 4) {
        throw PreconditionViolation("oscillator truncation needs dim >= 4");
    }
    const std::complex<double> i(0.0, 1.0);
    OscillatorMatrices m;
    m.dim = dim;
    m.q_mat = Matrix::Zero(dim, dim);
    m.p_mat = Matrix::Zero(dim, dim);
    m.h_mat = Matrix::Zero(dim, dim);
    for (int l = 0; l < dim; ++l) {
        m.h_mat(l, l) = l + 0.5;
        const double down = std::sqrt(l / 2.0);
        const double up = std::sqrt((l + 1) / 2.0);
        if (l > 0) {
            m.q_mat(l - 1, l) = i * down;
            m.p_mat(l - 1, l) = down;
        }
        if (l + 1 < dim) {
            m.q_mat(l + 1, l) = -i * up;
            m.p_mat(l + 1, l) = up;
        }
    }
    return m;
}

// Largest column index whose image is exact for an operator that moves the
// index by at most `reach`.
inline int safe_limit(int dim, unsigned reach) { return dim - 1 - static_cast<int>(reach); }

// max |a - b| / max |expected| over one column.
inline double column_relative_error(const Vector &computed, const Vector &expected)
{
    const double scale = expected.cwiseAbs().maxCoeff();
    const double diff = (computed - expected).cwiseAbs().maxCoeff();
    if (scale == 0.0) {
        return diff;
    }
    return diff / scale;
}

// {q, H}_k for k = 0..n by repeated matrix anti-commutation.
inline std::vector<Matrix> nested_anticommutators(const OscillatorMatrices &m, unsigned n)
{
    std::vector<Matrix> out;
    out.push_back(m.q_mat);
    for (unsigned k = 1; k <= n; ++k) {
        const Matrix &prev = out.back();
        out.push_back(prev * m.h_mat + m.h_mat * prev);
    }
    return out;
}

// Closed form of {q,H}_n psi_l = i 2^{n-1/2} (l^{n+1/2} psi_{l-1} - (l+1)^{n+1/2} psi_{l+1}).
inline Vector closed_form_column(unsigned n, int l, int dim)
{
    const std::complex<double> i(0.0, 1.0);
    Vector v = Vector::Zero(dim);
    const double front = std::pow(2.0, n - 0.5);
    if (l > 0) {
        v(l - 1) = i * front * std::pow(static_cast<double>(l), n + 0.5);
    }
    if (l + 1 < dim) {
        v(l + 1) = -i * front * std::pow(static_cast<double>(l + 1), n + 0.5);
    }
    return v;
}

// ({q,H} + s)_n psi_l with s = +1 or -1:
// i sqrt(l/2) (2l + s)^n psi_{l-1} - i sqrt((l+1)/2) (2l + 2 + s)^n psi_{l+1}.
inline Vector shifted_column(unsigned n, int s, int l, int dim)
{
    const std::complex<double> i(0.0, 1.0);
    Vector v = Vector::Zero(dim);
    if (l > 0) {
        v(l - 1) = i * std::sqrt(l / 2.0) * std::pow(2.0 * l + s, static_cast<double>(n));
    }
    if (l + 1 < dim) {
        v(l + 1) = -i * std::sqrt((l + 1) / 2.0) * std::pow(2.0 * l + 2 + s, static_cast<double>(n));
    }
    return v;
}

namespace detail
{

struct Worst {
    double error = 0.0;
    int column = -1;

    void update(double e, int l)
    {
        if (e > error || column < 0) {
            error = e;
            column = l;
        }
    }
};

inline void finish(VerificationReport &r, const Worst &worst, unsigned n, double tol, const std::string &what)
{
    r.data["max_rel_error"] = worst.error;
    if (!(worst.error <= tol)) {
        std::ostringstream os;
        os << what << ": ToleranceExceeded at n=" << n << ", l=" << worst.column << ", error=" << worst.error;
        r.fail(os.str());
    }
}

inline nlohmann::ordered_json params(unsigned n, int dim, double tol)
{
    return {{"n", n}, {"dim", dim}, {"tol", tol}};
}

} // namespace detail

// Matrix {q,H}_n against its closed form on columns 0 .. dim-2.
inline VerificationReport check_nested_anticomm_closed_form(unsigned n, int dim, double tol)
{
    return run_instance("hermite", detail::params(n, dim, tol), [&](VerificationReport &r) {
        if (dim < static_cast<int>(n) + 4) {
            throw PreconditionViolation("need dim >= n + 4");
        }
        auto m = build_operators(dim);
        auto a = nested_anticommutators(m, n).back();
        detail::Worst worst;
        for (int l = 0; l <= safe_limit(dim, 1); ++l) {
            worst.update(column_relative_error(a.col(l), closed_form_column(n, l, dim)), l);
        }
        detail::finish(r, worst, n, tol, "closed form of {q,H}_n");
    });
}

// (1/2^n)[({q,H}-1)_n + ({q,H}+1)_n] = {q, H^n} and both shifted
// expansions, all on columns 0 .. dim-2.
inline VerificationReport check_main_identity(unsigned n, int dim, double tol)
{
    return run_instance("hermite", detail::params(n, dim, tol), [&](VerificationReport &r) {
        if (dim < static_cast<int>(n) + 4) {
            throw PreconditionViolation("need dim >= n + 4");
        }
        auto m = build_operators(dim);
        auto anti = nested_anticommutators(m, n);
        Matrix plus = Matrix::Zero(dim, dim);
        Matrix minus = Matrix::Zero(dim, dim);
        for (unsigned k = 0; k <= n; ++k) {
            const double b = std::tgamma(n + 1.0) / (std::tgamma(k + 1.0) * std::tgamma(n - k + 1.0));
            const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
            plus += b * anti[k];
            minus += (b * sign) * anti[k];
        }
        Matrix hn = Matrix::Identity(dim, dim);
        for (unsigned k = 0; k < n; ++k) {
            hn = hn * m.h_mat;
        }
        Matrix lhs = (plus + minus) / std::pow(2.0, n);
        Matrix rhs = m.q_mat * hn + hn * m.q_mat;

        detail::Worst main, shifted;
        for (int l = 0; l <= safe_limit(dim, 1); ++l) {
            main.update(column_relative_error(lhs.col(l), rhs.col(l)), l);
            shifted.update(std::max(column_relative_error(plus.col(l), shifted_column(n, +1, l, dim)),
                                    column_relative_error(minus.col(l), shifted_column(n, -1, l, dim))),
                           l);
        }
        r.data["shifted_max_rel_error"] = shifted.error;
        detail::finish(r, main, n, tol, "main identity");
        if (!(shifted.error <= tol)) {
            std::ostringstream os;
            os << "shifted expansions: ToleranceExceeded at n=" << n << ", l=" << shifted.column
               << ", error=" << shifted.error;
            r.fail(os.str());
        }
    });
}

// Exact image of psi_l. Every ladder path from psi_l to psi_r carries the
// same irrational factor s(l, r) = sqrt(max!/min!/2^|r-l|), so a column is
// stored as rational coefficients Q_r with entry(r) = Q_r s(l, r).
using ReducedColumn = std::map<int, GaussianRational>;

inline double ladder_scale(int l, int r)
{
    double s = 1.0;
    for (int k = std::min(l, r) + 1; k <= std::max(l, r); ++k) {
        s *= std::sqrt(k / 2.0);
    }
    return s;
}

namespace detail
{

// p = x acts as sqrt(r/2) psi_{r-1} + sqrt((r+1)/2) psi_{r+1}; q = i d/dx as
// i sqrt(r/2) psi_{r-1} - i sqrt((r+1)/2) psi_{r+1}. In reduced form the
// step factors become rational.
inline ReducedColumn ladder_step(const ReducedColumn &v, int l, bool is_q)
{
    const GaussianRational down_phase = is_q ? GaussianRational::i() : GaussianRational(1);
    const GaussianRational up_phase = is_q ? -GaussianRational::i() : GaussianRational(1);
    ReducedColumn out;
    auto add = [&](int r, const GaussianRational &g) {
        auto &slot = out[r];
        slot += g;
        if (slot.is_zero()) {
            out.erase(r);
        }
    };
    for (const auto &[r, cf] : v) {
        if (r > 0) {
            add(r - 1, cf * down_phase * (r > l ? GaussianRational(Rational(r, 2)) : GaussianRational(1)));
        }
        add(r + 1, cf * up_phase * (r < l ? GaussianRational(Rational(r + 1, 2)) : GaussianRational(1)));
    }
    return out;
}

} // namespace detail

inline ReducedColumn realize_column_exact(const WeylElement &w, int l)
{
    ReducedColumn out;
    for (const auto &[mono, cf] : w.terms()) {
        if (!cf.is_constant()) {
            throw PreconditionViolation("realize_column needs c specialized to a number");
        }
        ReducedColumn v{{l, GaussianRational(1)}};
        for (unsigned k = 0; k < mono.p; ++k) {
            v = detail::ladder_step(v, l, false);
        }
        for (unsigned k = 0; k < mono.q; ++k) {
            v = detail::ladder_step(v, l, true);
        }
        for (const auto &[r, g] : v) {
            auto &slot = out[r];
            slot += g * cf.constant_term();
            if (slot.is_zero()) {
                out.erase(r);
            }
        }
    }
    return out;
}

// Image of psi_l under an exact element of the c = -i algebra, rounded once.
// Rows >= dim are dropped; exact for l + degree(w) <= dim - 1.
inline Vector realize_column(const WeylElement &w, int l, const OscillatorMatrices &m)
{
    Vector out = Vector::Zero(m.dim);
    for (const auto &[r, g] : realize_column_exact(w, l)) {
        if (r < m.dim) {
            out(r) = g.to_complex() * ladder_scale(l, r);
        }
    }
    return out;
}

} // namespace weyl::hermite

#endif
