#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <weyl/weyl.hpp>

namespace
{

constexpr int exit_config = 2;

nlohmann::json read_json_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw weyl::ConfigError("cannot open " + path);
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw weyl::ConfigError(path + ": " + e.what());
    }
}

void emit(const std::string &output, const std::string &text)
{
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) {
        throw weyl::ConfigError("cannot write " + output);
    }
    out << text;
}

std::string render(const std::vector<weyl::VerificationReport> &reports, const weyl::RunConfig &cfg)
{
    std::ostringstream os;
    if (cfg.format == weyl::OutputFormat::json) {
        os << weyl::reports_to_json(reports, cfg.timing).dump(2) << '\n';
    } else {
        weyl::write_text(os, reports, cfg.timing);
    }
    return os.str();
}

std::string tables(unsigned n, weyl::OutputFormat format)
{
    auto e0 = weyl::euler_values_at_zero(n);
    auto bern = weyl::bernoulli_numbers(n);
    if (format == weyl::OutputFormat::json) {
        nlohmann::ordered_json j;
        j["euler_polynomials"] = nlohmann::ordered_json::array();
        j["euler_at_zero"] = nlohmann::ordered_json::array();
        j["bernoulli"] = nlohmann::ordered_json::array();
        j["euler_numbers"] = nlohmann::ordered_json::array();
        for (unsigned k = 0; k <= n; ++k) {
            j["euler_polynomials"].push_back(weyl::euler_polynomial(k).to_string());
            j["euler_at_zero"].push_back(e0[k].to_string());
            j["bernoulli"].push_back(bern[k].to_string());
            j["euler_numbers"].push_back(weyl::euler_number(k).to_string());
        }
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    for (unsigned k = 0; k <= n; ++k) {
        os << "n=" << k << "\n  E_n(x) = " << weyl::euler_polynomial(k).to_string() << "\n  E_n(0) = " << e0[k].to_string()
           << "\n  B_n    = " << bern[k].to_string() << "\n  Euler  = " << weyl::euler_number(k).to_string() << '\n';
    }
    return os.str();
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact verification of Weyl-algebra identities"};
    app.require_subcommand(1);

    weyl::RunConfig cfg;
    std::string suite;
    std::string format;
    long long max_n = -1, max_m = -1, max_l = -1;
    std::string config_path;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("-o,--output", cfg.output, "write the report to a file");
    };

    auto *verify = app.add_subcommand("verify", "run identity suites");
    verify->add_option("suite", suite, "suite name or 'all'")->required();
    verify->add_option("--max-n", max_n, "upper bound of the first index");
    verify->add_option("--max-m", max_m, "upper bound of the second index");
    verify->add_option("--max-l", max_l, "upper bound of the third index / polynomial degree");
    verify->add_option("--tol", cfg.tol, "numeric tolerance for the matrix oracle");
    verify->add_option("--dim", cfg.dim, "Hermite truncation size");
    verify->add_option("--seed", cfg.seed, "seed for random cases");
    verify->add_flag("--timing", cfg.timing, "record elapsed_ms in reports");
    verify->add_option("--config", config_path, "JSON defaults file (overrides $WEYL_CONFIG)");
    add_common(verify);

    unsigned table_n = 12;
    auto *tab = app.add_subcommand("tables", "print Euler and Bernoulli tables");
    tab->add_option("--max-n", table_n, "largest index");
    add_common(tab);

    std::string fixture_path;
    auto *check = app.add_subcommand("check", "compare lhs/rhs pairs from a JSON fixture file");
    check->add_option("file", fixture_path, "fixture file")->required();
    add_common(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_config;
    }

    try {
        if (*verify) {
            // Precedence: built-in defaults, then the config file, then flags.
            if (config_path.empty()) {
                if (const char *env = std::getenv("WEYL_CONFIG"); env != nullptr && *env != '\0') {
                    config_path = env;
                }
            }
            weyl::RunConfig base;
            if (!config_path.empty()) {
                weyl::apply_config_json(base, read_json_file(config_path));
            }
            auto overridden = [&](const char *flag) { return verify->count(flag) > 0; };
            base.suite = suite;
            if ((overridden("--max-n") && max_n < 0) || (overridden("--max-m") && max_m < 0)
                || (overridden("--max-l") && max_l < 0)) {
                throw weyl::ConfigError("ranges must be >= 0");
            }
            if (overridden("--max-n")) base.max_n = static_cast<unsigned>(max_n);
            if (overridden("--max-m")) base.max_m = static_cast<unsigned>(max_m);
            if (overridden("--max-l")) base.max_l = static_cast<unsigned>(max_l);
            if (overridden("--tol")) base.tol = cfg.tol;
            if (overridden("--dim")) base.dim = cfg.dim;
            if (overridden("--seed")) base.seed = cfg.seed;
            if (overridden("--timing")) base.timing = cfg.timing;
            if (overridden("--format")) base.format = weyl::parse_format(format);
            if (overridden("--output")) base.output = cfg.output;
            auto reports = weyl::run(base);
            emit(base.output, render(reports, base));
            return weyl::all_passed(reports) ? 0 : 1;
        }
        weyl::OutputFormat fmt = format.empty() ? weyl::OutputFormat::text : weyl::parse_format(format);
        if (*tab) {
            emit(cfg.output, tables(table_n, fmt));
            return 0;
        }
        auto reports = weyl::check_fixtures(read_json_file(fixture_path));
        cfg.format = fmt;
        emit(cfg.output, render(reports, cfg));
        return weyl::all_passed(reports) ? 0 : 1;
    } catch (const weyl::ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const weyl::ParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
