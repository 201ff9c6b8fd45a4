#include <sstream>

#include <gtest/gtest.h>

#include <weyl/runner.hpp>

using weyl::RunConfig;

TEST(Runner, BenderRangeCount)
{
    RunConfig cfg;
    cfg.suite = "bender";
    cfg.max_n = 6;
    auto reports = weyl::run(cfg);
    ASSERT_EQ(reports.size(), 7U);
    EXPECT_TRUE(weyl::all_passed(reports));
    EXPECT_EQ(reports[6].data["polynomial"], "H^6 - 15/4*H^4 + 75/16*H^2 - 61/64");
}

TEST(Runner, DegeneratePainRange)
{
    RunConfig cfg;
    cfg.suite = "pain";
    cfg.max_n = 0;
    cfg.max_m = 0;
    auto reports = weyl::run(cfg);
    ASSERT_EQ(reports.size(), 1U);
    EXPECT_TRUE(reports[0].passed());
}

TEST(Runner, JsonIsDeterministic)
{
    RunConfig cfg;
    cfg.suite = "functions";
    cfg.max_n = 5;
    auto a = weyl::reports_to_json(weyl::run(cfg), false).dump();
    auto b = weyl::reports_to_json(weyl::run(cfg), false).dump();
    EXPECT_EQ(a, b);
    EXPECT_NE(a.find("\"seed\":20240229"), std::string::npos);
    cfg.seed = 5;
    EXPECT_NE(weyl::reports_to_json(weyl::run(cfg), false).dump(), a);
}

TEST(Runner, ReportFieldNames)
{
    RunConfig cfg;
    cfg.suite = "sequences";
    auto j = weyl::reports_to_json(weyl::run(cfg), false);
    ASSERT_TRUE(j.is_array());
    std::vector<std::string> keys;
    for (const auto &[k, v] : j[0].items()) {
        keys.push_back(k);
    }
    EXPECT_EQ(keys, (std::vector<std::string>{"suite", "params", "status", "witness", "elapsed_ms", "data"}));
}

TEST(Runner, ConfigErrors)
{
    RunConfig cfg;
    cfg.suite = "nonsense";
    EXPECT_THROW(weyl::run(cfg), weyl::ConfigError);
    cfg.suite = "hermite";
    cfg.dim = 2;
    EXPECT_THROW(weyl::run(cfg), weyl::ConfigError);

    RunConfig base;
    EXPECT_THROW(weyl::apply_config_json(base, nlohmann::json::parse(R"({"max-n": -1})")), weyl::ConfigError);
    EXPECT_THROW(weyl::apply_config_json(base, nlohmann::json::parse(R"({"bogus": 1})")), weyl::ConfigError);
    EXPECT_THROW(weyl::apply_config_json(base, nlohmann::json::parse(R"({"format": "xml"})")), weyl::ConfigError);
    weyl::apply_config_json(base, nlohmann::json::parse(R"({"suite": "pain", "max-n": 3, "format": "json"})"));
    EXPECT_EQ(base.suite, "pain");
    EXPECT_EQ(base.max_n, 3U);
    EXPECT_EQ(base.format, weyl::OutputFormat::json);
}

TEST(Runner, CheckFixtures)
{
    auto good = nlohmann::json::parse(R"([{"name": "ccr", "lhs": "[p,q]", "rhs": "c"},
                                          {"name": "osc", "lhs": "[p,q]", "rhs": "-i", "c": "-i"}])");
    EXPECT_TRUE(weyl::all_passed(weyl::check_fixtures(good)));
    auto broken = nlohmann::json::parse(R"([{"name": "wrong", "lhs": "p q", "rhs": "q p"}])");
    auto reports = weyl::check_fixtures(broken);
    EXPECT_FALSE(weyl::all_passed(reports));
    EXPECT_NE(reports[0].witness.find("(c)"), std::string::npos) << reports[0].witness;
    EXPECT_THROW(weyl::check_fixtures(nlohmann::json::parse(R"({"lhs": "p"})")), weyl::ConfigError);
}

TEST(Runner, TextOutput)
{
    RunConfig cfg;
    cfg.suite = "bender";
    cfg.max_n = 2;
    std::ostringstream os;
    weyl::write_text(os, weyl::run(cfg), false);
    EXPECT_EQ(os.str(), "pass bender {\"n\":0}  1\npass bender {\"n\":1}  H\npass bender {\"n\":2}  H^2 - 1/4\n3/3 passed\n");
}
