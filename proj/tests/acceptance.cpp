// Acceptance gate: one PASS/FAIL line per criterion; exit status 0 iff all pass.
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <weyl/weyl.hpp>

namespace
{

using Clock = std::chrono::steady_clock;
namespace suites = weyl::suites;

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }

    void require(const weyl::VerificationReport &r)
    {
        require(r.passed(), r.suite + " " + r.params.dump() + ": " + r.witness);
    }
};

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

Outcome bender_table()
{
    Outcome o;
    const std::vector<std::string> expected{
        "1",
        "H",
        "H^2 - 1/4",
        "H^3 - 3/4*H",
        "H^4 - 3/2*H^2 + 5/16",
        "H^5 - 5/2*H^3 + 25/16*H",
        "H^6 - 15/4*H^4 + 75/16*H^2 - 61/64",
    };
    auto start = Clock::now();
    weyl::RunConfig cfg;
    cfg.suite = "bender";
    cfg.max_n = 6;
    auto reports = weyl::run(cfg);
    double t = seconds_since(start);
    o.require(reports.size() == 7, "expected 7 records, got " + std::to_string(reports.size()));
    for (std::size_t n = 0; n < reports.size() && n < expected.size(); ++n) {
        o.require(reports[n]);
        auto got = reports[n].data.value("polynomial", std::string());
        o.require(got == expected[n], "n=" + std::to_string(n) + ": " + got + " != " + expected[n]);
    }
    o.require(t < 5.0, "runtime " + std::to_string(t) + " s");
    if (o.ok) {
        o.detail = std::to_string(t) + " s";
    }
    return o;
}

Outcome main_identity_sweep()
{
    Outcome o;
    auto start = Clock::now();
    for (unsigned n = 0; n <= 12; ++n) {
        o.require(suites::verify_bender(n));
    }
    double t = seconds_since(start);
    o.require(t < 60.0, "runtime " + std::to_string(t) + " s");
    if (o.ok) {
        o.detail = "n=0..12, " + std::to_string(t) + " s";
    }
    return o;
}

Outcome pain_range()
{
    Outcome o;
    for (unsigned n = 0; n <= 10; ++n) {
        for (unsigned m = 0; m <= 10; ++m) {
            o.require(suites::verify_pain(n, m));
            o.require(suites::verify_reciprocal(n, m));
        }
    }
    return o;
}

Outcome sequence_tables()
{
    Outcome o;
    auto r = suites::sequence_tables(16);
    o.require(r);
    const auto &kappa = r.data["kappa"];
    const auto &lambda = r.data["lambda"];
    const std::vector<std::pair<unsigned, std::string>> odd{{1, "1/2"}, {3, "-1/4"}, {5, "1/2"}, {7, "-17/8"}, {9, "31/2"}};
    for (const auto &[n, v] : odd) {
        o.require(kappa[n] == v, "kappa_" + std::to_string(n) + " = " + kappa[n].dump());
    }
    for (unsigned n = 0; n <= 16; n += 2) {
        o.require(kappa[n] == "0", "kappa_" + std::to_string(n) + " nonzero");
    }
    const std::vector<std::string> even_lambda{"1", "-1", "5", "-61"};
    for (unsigned k = 0; k < even_lambda.size(); ++k) {
        o.require(lambda[2 * k] == even_lambda[k], "lambda_" + std::to_string(2 * k) + " = " + lambda[2 * k].dump());
    }
    for (unsigned n = 1; n <= 16; n += 2) {
        o.require(lambda[n] == "0", "lambda_" + std::to_string(n) + " nonzero");
    }
    return o;
}

Outcome figueira()
{
    Outcome o;
    for (const auto &alg : {weyl::WeylAlgebra::formal(), weyl::WeylAlgebra::oscillator()}) {
        for (const auto &[label, fx] : suites::figueira_fixtures(alg)) {
            o.require(suites::verify_figueira(fx.first, fx.second, label, alg));
        }
    }
    const auto &alg = weyl::WeylAlgebra::formal();
    auto h0 = weyl::parse_element("p^2");
    auto h1 = suites::figueira_h1(h0, weyl::WeylElement::q(), alg);
    o.require(h1 == weyl::parse_element("-i c p"), "h1 = " + h1.to_string());
    auto h = alg.hadamard_conjugate(weyl::WeylElement::q(), h0 + h1 * weyl::CPoly(weyl::GaussianRational::i()),
                                    weyl::Rational(1, 2));
    o.require(h == weyl::parse_element("p^2 - c^2/4"), "h = " + h.to_string());
    return o;
}

Outcome combinatorics()
{
    Outcome o;
    for (unsigned n = 1; n <= 8; ++n) {
        o.require(suites::combinatorial_sums(n));
    }
    return o;
}

Outcome binomial()
{
    Outcome o;
    for (bool euler : {false, true}) {
        for (unsigned m = 0; m <= 12; ++m) {
            for (unsigned n = 0; n <= 12; ++n) {
                for (unsigned l = 0; l <= 12; ++l) {
                    o.require(suites::verify_binomial(m, n, l, euler));
                }
            }
        }
    }
    return o;
}

Outcome oracles()
{
    Outcome o;
    o.require(suites::realization_agreement(20240229, 100, 4, 8));
    o.require(suites::pain_realization(6, 10));
    auto r = suites::bender_vs_hermite(8, 64, 1e-9);
    o.require(r);
    if (o.ok) {
        o.detail = "max relative error " + r.data["max_rel_error"].dump();
    }
    return o;
}

Outcome properties()
{
    Outcome o;
    o.require(suites::sequence_properties(20, 12));
    o.require(suites::verify_v_extraction(12));
    for (unsigned d = 0; d <= 12; ++d) {
        o.require(suites::verify_umbral(weyl::RatPoly::monomial(1, d)));
    }
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"AC1 Bender table reproduction (n <= 6, < 5 s)", bender_table},
        {"AC2 main identity sweep (n <= 12, < 60 s)", main_identity_sweep},
        {"AC3 commutator/anti-commutator convolution and reciprocal (n, m <= 10)", pain_range},
        {"AC4 kappa and lambda tables (N = 16)", sequence_tables},
        {"AC5 pseudo-Hermitian similarity fixtures", figueira},
        {"AC6 combinatorial sums (n <= 8)", combinatorics},
        {"AC7 binomial and Euler identities (m, n, l <= 12)", binomial},
        {"AC8 realization and Hermite oracle agreement", oracles},
        {"AC9 Euler/Bernoulli property suites (<= 20)", properties},
    };
    int failures = 0;
    for (const auto &[name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception &e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += o.ok ? 0 : 1;
        std::cout << (o.ok ? "PASS " : "FAIL ") << name;
        if (!o.detail.empty()) {
            std::cout << " -- " << o.detail;
        }
        std::cout << '\n';
    }
    std::cout << (criteria.size() - failures) << '/' << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
