#ifndef WEYL_RUNNER_HPP
#define WEYL_RUNNER_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include <weyl/hermite_oracle.hpp>
#include <weyl/suites/bender.hpp>
#include <weyl/suites/binomial.hpp>
#include <weyl/suites/combinatorics.hpp>
#include <weyl/suites/figueira.hpp>
#include <weyl/suites/functions.hpp>
#include <weyl/suites/oracle.hpp>
#include <weyl/suites/pain.hpp>
#include <weyl/suites/sequences.hpp>
#include <weyl/text.hpp>

namespace weyl
{

enum class OutputFormat { text, json };

struct RunConfig {
    std::string suite = "all";
    std::optional<unsigned> max_n;
    std::optional<unsigned> max_m;
    std::optional<unsigned> max_l;
    double tol = 1e-9;
    int dim = 64;
    std::uint64_t seed = 20240229;
    OutputFormat format = OutputFormat::text;
    std::string output;
    bool timing = false;
};

inline const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{
        "bender",     "pain",      "reciprocal",     "mccoy",         "functions",  "binomial", "figueira",
        "sequences",  "hermite",   "combinatorics",  "superoperators", "exp-series", "v-extraction", "oracle",
    };
    return names;
}

inline bool is_suite_name(const std::string &s)
{
    return s == "all" || std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end();
}

inline OutputFormat parse_format(const std::string &s)
{
    if (s == "text") {
        return OutputFormat::text;
    }
    if (s == "json") {
        return OutputFormat::json;
    }
    throw ConfigError("unknown format '" + s + "' (expected text or json)");
}

// Overlays a JSON defaults object (keys as the long flag names) onto cfg.
inline void apply_config_json(RunConfig &cfg, const nlohmann::json &j)
{
    if (!j.is_object()) {
        throw ConfigError("config file must hold a JSON object");
    }
    auto count = [&](const char *key) -> std::optional<unsigned> {
        const auto &v = j.at(key);
        if (!v.is_number_integer() || v.get<long long>() < 0) {
            throw ConfigError(std::string(key) + " must be a non-negative integer");
        }
        return static_cast<unsigned>(v.get<long long>());
    };
    for (const auto &[key, value] : j.items()) {
        if (key == "suite") {
            if (!value.is_string() || !is_suite_name(value.get<std::string>())) {
                throw ConfigError("unknown suite in config");
            }
            cfg.suite = value.get<std::string>();
        } else if (key == "max-n") {
            cfg.max_n = count("max-n");
        } else if (key == "max-m") {
            cfg.max_m = count("max-m");
        } else if (key == "max-l") {
            cfg.max_l = count("max-l");
        } else if (key == "tol") {
            if (!value.is_number() || value.get<double>() < 0) {
                throw ConfigError("tol must be a non-negative number");
            }
            cfg.tol = value.get<double>();
        } else if (key == "dim") {
            if (!value.is_number_integer() || value.get<long long>() < 4) {
                throw ConfigError("dim must be an integer >= 4");
            }
            cfg.dim = static_cast<int>(value.get<long long>());
        } else if (key == "seed") {
            if (!value.is_number_unsigned()) {
                throw ConfigError("seed must be a non-negative integer");
            }
            cfg.seed = value.get<std::uint64_t>();
        } else if (key == "format") {
            if (!value.is_string()) {
                throw ConfigError("format must be a string");
            }
            cfg.format = parse_format(value.get<std::string>());
        } else if (key == "output") {
            if (!value.is_string()) {
                throw ConfigError("output must be a string");
            }
            cfg.output = value.get<std::string>();
        } else if (key == "timing") {
            if (!value.is_boolean()) {
                throw ConfigError("timing must be a boolean");
            }
            cfg.timing = value.get<bool>();
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
}

namespace detail
{

inline std::vector<std::pair<RatPoly, RatPoly>> function_cases(std::uint64_t seed, unsigned random_cases)
{
    std::vector<std::pair<RatPoly, RatPoly>> cases{
        {RatPoly::x(), RatPoly::x()},
        {RatPoly::monomial(1, 2), RatPoly::monomial(1, 2)},
        {RatPoly::monomial(1, 0), RatPoly::from_coefficients({1, -2, 3})},
    };
    std::mt19937_64 rng(seed);
    for (unsigned k = 0; k < random_cases; ++k) {
        auto f = suites::random_polynomial(rng);
        auto g = suites::random_polynomial(rng);
        cases.emplace_back(std::move(f), std::move(g));
    }
    return cases;
}

inline void tag_seed(VerificationReport &r, std::uint64_t seed, unsigned index)
{
    r.params["seed"] = seed;
    r.params["case"] = index;
}

} // namespace detail

// Runs one suite (by name) with the config's overrides or the suite
// defaults, appending reports in instance-key order.
inline void run_suite(const std::string &name, const RunConfig &cfg, std::vector<VerificationReport> &out)
{
    auto n_or = [&](unsigned d) { return cfg.max_n.value_or(d); };
    auto m_or = [&](unsigned d) { return cfg.max_m.value_or(d); };
    auto l_or = [&](unsigned d) { return cfg.max_l.value_or(d); };

    if (name == "bender") {
        for (unsigned n = 0; n <= n_or(12); ++n) {
            out.push_back(suites::verify_bender(n));
        }
    } else if (name == "superoperators") {
        for (unsigned n = 0; n <= n_or(8); ++n) {
            out.push_back(suites::verify_superoperators(n));
        }
    } else if (name == "pain" || name == "reciprocal" || name == "exp-series") {
        const unsigned max_n = n_or(10);
        const unsigned max_m = m_or(max_n);
        std::optional<suites::SymmetricWords> words;
        if (name == "exp-series") {
            words.emplace(max_n, max_m, WeylAlgebra::formal());
        }
        for (unsigned n = 0; n <= max_n; ++n) {
            for (unsigned m = 0; m <= max_m; ++m) {
                if (name == "pain") {
                    out.push_back(suites::verify_pain(n, m));
                } else if (name == "reciprocal") {
                    out.push_back(suites::verify_reciprocal(n, m));
                } else {
                    out.push_back(suites::verify_exp_series(n, m, WeylAlgebra::formal(), &*words));
                }
            }
        }
    } else if (name == "mccoy" || name == "functions") {
        auto cases = detail::function_cases(cfg.seed, n_or(20));
        for (unsigned k = 0; k < cases.size(); ++k) {
            const auto &[f, g] = cases[k];
            auto r = name == "mccoy" ? suites::verify_mccoy(f, g) : suites::verify_function_identities(f, g);
            detail::tag_seed(r, cfg.seed, k);
            out.push_back(std::move(r));
        }
    } else if (name == "binomial") {
        const unsigned max_n = n_or(12);
        const unsigned max_m = m_or(max_n);
        const unsigned max_l = l_or(max_n);
        for (bool euler : {false, true}) {
            for (unsigned m = 0; m <= max_m; ++m) {
                for (unsigned n = 0; n <= max_n; ++n) {
                    for (unsigned l = 0; l <= max_l; ++l) {
                        out.push_back(suites::verify_binomial(m, n, l, euler));
                    }
                }
            }
        }
    } else if (name == "figueira") {
        for (const auto &alg : {WeylAlgebra::formal(), WeylAlgebra::oscillator()}) {
            for (const auto &[label, fixture] : suites::figueira_fixtures(alg)) {
                auto r = suites::verify_figueira(fixture.first, fixture.second, label, alg);
                r.params["c"] = alg.central().to_string();
                out.push_back(std::move(r));
            }
        }
        for (unsigned d = 0; d <= n_or(8); ++d) {
            out.push_back(suites::verify_umbral(RatPoly::monomial(1, d)));
        }
    } else if (name == "sequences") {
        const unsigned big_n = n_or(16);
        out.push_back(suites::sequence_tables(big_n));
        out.push_back(suites::sequence_properties(std::max(big_n, 20U), m_or(12)));
    } else if (name == "hermite") {
        for (unsigned n = 0; n <= n_or(8); ++n) {
            out.push_back(hermite::check_nested_anticomm_closed_form(n, cfg.dim, cfg.tol));
            out.push_back(hermite::check_main_identity(n, cfg.dim, cfg.tol));
        }
    } else if (name == "combinatorics") {
        for (unsigned n = 1; n <= std::max(1U, n_or(8)); ++n) {
            out.push_back(suites::combinatorial_sums(n));
        }
    } else if (name == "v-extraction") {
        out.push_back(suites::verify_v_extraction(n_or(12)));
    } else if (name == "oracle") {
        out.push_back(suites::realization_agreement(cfg.seed, 100, 4, l_or(8)));
        out.push_back(suites::pain_realization(m_or(6), l_or(10)));
        out.push_back(suites::bender_vs_hermite(n_or(8), cfg.dim, cfg.tol));
    } else {
        throw ConfigError("unknown suite '" + name + "'");
    }
}

inline std::vector<VerificationReport> run(const RunConfig &cfg)
{
    if (!is_suite_name(cfg.suite)) {
        throw ConfigError("unknown suite '" + cfg.suite + "'");
    }
    if (cfg.dim < 4) {
        throw ConfigError("dim must be >= 4");
    }
    if (!(cfg.tol >= 0)) {
        throw ConfigError("tol must be non-negative");
    }
    if (!validate_reordering_kernel()) {
        throw InvariantViolation("product kernel disagrees with the polynomial realization");
    }
    std::vector<VerificationReport> out;
    if (cfg.suite == "all") {
        for (const auto &name : suite_names()) {
            run_suite(name, cfg, out);
        }
    } else {
        run_suite(cfg.suite, cfg, out);
    }
    return out;
}

inline bool all_passed(const std::vector<VerificationReport> &reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.passed(); });
}

inline nlohmann::ordered_json reports_to_json(const std::vector<VerificationReport> &reports, bool timing)
{
    auto a = nlohmann::ordered_json::array();
    for (const auto &r : reports) {
        a.push_back(r.to_json(timing));
    }
    return a;
}

inline void write_text(std::ostream &os, const std::vector<VerificationReport> &reports, bool timing)
{
    std::size_t passed = 0;
    for (const auto &r : reports) {
        os << to_string(r.status) << ' ' << r.suite << ' ' << r.params.dump();
        if (timing) {
            os << ' ' << r.elapsed_ms << "ms";
        }
        if (r.data.contains("polynomial")) {
            os << "  " << r.data["polynomial"].get<std::string>();
        }
        if (!r.witness.empty()) {
            os << "\n    " << r.witness;
        }
        os << '\n';
        passed += r.passed() ? 1 : 0;
    }
    os << passed << '/' << reports.size() << " passed\n";
}

// A fixture file is a JSON array of {"name", "lhs", "rhs"} with an
// optional "c" ("formal" or a constant such as "-i").
inline std::vector<VerificationReport> check_fixtures(const nlohmann::json &fixtures)
{
    if (!fixtures.is_array()) {
        throw ConfigError("fixture file must hold a JSON array");
    }
    std::vector<VerificationReport> out;
    for (const auto &f : fixtures) {
        if (!f.is_object() || !f.contains("lhs") || !f.contains("rhs") || !f["lhs"].is_string() || !f["rhs"].is_string()) {
            throw ConfigError("each fixture needs string fields lhs and rhs");
        }
        nlohmann::ordered_json params{{"name", f.value("name", "")}};
        WeylAlgebra alg = WeylAlgebra::formal();
        if (f.contains("c") && f["c"].get<std::string>() != "formal") {
            alg = WeylAlgebra::specialized(parse_gaussian(f["c"].get<std::string>()));
            params["c"] = f["c"];
        }
        WeylElement lhs, rhs;
        try {
            lhs = parse_element(f["lhs"].get<std::string>(), alg);
            rhs = parse_element(f["rhs"].get<std::string>(), alg);
        } catch (const ParseError &e) {
            throw ConfigError("fixture '" + f.value("name", "") + "': " + e.what());
        }
        out.push_back(run_instance("check", std::move(params),
                                   [&](VerificationReport &r) { suites::expect_equal(r, "fixture", lhs, rhs); }));
    }
    return out;
}

} // namespace weyl

#endif
