#include <svq/verification.hpp>

#include <gtest/gtest.h>

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

using svq::CheckRecord;
using svq::Report;
using svq::SuiteConfig;

namespace
{

SuiteConfig config(std::vector<std::string> suites, int order = 4)
{
    SuiteConfig cfg;
    cfg.suites = std::move(suites);
    cfg.order = order;
    return cfg;
}

Report without_runtime(Report r)
{
    r.runtime_seconds = 0.0;
    return r;
}

std::set<std::string> check_keys(const Report &r, bool passed)
{
    std::set<std::string> out;
    for (const auto &c : r.checks) {
        if (c.passed != passed) {
            continue;
        }
        std::string key = c.suite + ' ' + c.name;
        for (const auto &[k, v] : c.params) {
            key += ' ' + k + '=' + v;
        }
        out.insert(key);
    }
    return out;
}

} // namespace

TEST(Verification, SuiteNames)
{
    EXPECT_EQ(svq::suite_names(),
              (std::vector<std::string>{"bialgebra", "pbw-hopf", "lemmas", "twist", "theorem1", "theorem2", "case3-hopf"}));
    EXPECT_EQ(SuiteConfig::defaults().suites, svq::suite_names());
}

TEST(Verification, EmptyConfigPasses)
{
    const Report r = svq::run_suite(config({}));
    EXPECT_TRUE(r.checks.empty());
    EXPECT_TRUE(r.ok());
}

TEST(Verification, ConfigErrors)
{
    EXPECT_TRUE(svq::config_errors(SuiteConfig::defaults()).empty());
    EXPECT_FALSE(svq::config_errors(config({"nonsense"})).empty());
    EXPECT_FALSE(svq::config_errors(config({"theorem1"}, 1)).empty());
    EXPECT_TRUE(svq::config_errors(config({"twist"}, 1)).empty());
    EXPECT_FALSE(svq::config_errors(config({"twist"}, -1)).empty());

    SuiteConfig even = config({"theorem2"});
    even.n0_values = {2};
    EXPECT_FALSE(svq::config_errors(even).empty());
    even.suites = {"theorem1"};
    EXPECT_TRUE(svq::config_errors(even).empty());

    SuiteConfig zero = config({"twist"});
    zero.n0_values = {1, 0};
    EXPECT_FALSE(svq::config_errors(zero).empty());

    SuiteConfig range = config({"bialgebra"});
    range.index_range = 0;
    EXPECT_FALSE(svq::config_errors(range).empty());
}

TEST(Verification, InvalidConfigBecomesFailingRecord)
{
    const Report r = svq::run_suite(config({"nonsense"}));
    ASSERT_FALSE(r.checks.empty());
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.checks.front().suite, "config");
    EXPECT_FALSE(r.checks.front().passed);
}

TEST(Verification, TwistSuitePasses)
{
    const Report r = svq::run_suite(config({"twist"}, 3));
    EXPECT_GT(r.passed(), 0U);
    EXPECT_TRUE(r.ok()) << svq::to_text(r);
}

TEST(Verification, DeterministicModuloRuntime)
{
    SuiteConfig cfg = config({"pbw-hopf", "twist"}, 2);
    cfg.seed = 42;
    EXPECT_EQ(without_runtime(svq::run_suite(cfg)), without_runtime(svq::run_suite(cfg)));
}

TEST(Verification, RecordsAreCanonicallyOrdered)
{
    SuiteConfig cfg = config({"twist", "bialgebra"}, 2);
    const Report r = svq::run_suite(cfg);
    const auto &names = svq::suite_names();
    auto rank = [&](const CheckRecord &c) { return std::find(names.begin(), names.end(), c.suite) - names.begin(); };
    EXPECT_TRUE(std::is_sorted(r.checks.begin(), r.checks.end(),
                               [&](const CheckRecord &a, const CheckRecord &b) { return rank(a) < rank(b); }));
    EXPECT_EQ(r.checks.front().suite, "bialgebra");
    std::reverse(cfg.suites.begin(), cfg.suites.end());
    EXPECT_EQ(without_runtime(svq::run_suite(cfg)).checks, without_runtime(r).checks);
}

TEST(Verification, JsonRoundTrip)
{
    SuiteConfig cfg = config({"twist"}, 2);
    cfg.corrupt_bracket = true;
    cfg.suites = {"theorem1"};
    const Report r = svq::run_suite(cfg);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(svq::report_from_json(svq::to_json(r)), r);
    EXPECT_EQ(svq::report_from_json(svq::to_json(r, -1)), r);
}

TEST(Verification, JsonSchema)
{
    SuiteConfig cfg = config({"theorem1"}, 2);
    cfg.n0_values = {1};
    cfg.index_range = 1;
    cfg.corrupt_bracket = true;
    const auto j = nlohmann::json::parse(svq::to_json(svq::run_suite(cfg)));
    for (const char *key : {"config", "checks", "summary"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_TRUE(j["summary"]["passed"].is_number_unsigned());
    EXPECT_GT(j["summary"]["failed"].get<int>(), 0);
    bool saw_defect = false;
    for (const auto &c : j["checks"]) {
        EXPECT_TRUE(c["suite"].is_string());
        EXPECT_TRUE(c["name"].is_string());
        EXPECT_TRUE(c["params"].is_object());
        const auto status = c["status"].get<std::string>();
        EXPECT_TRUE(status == "pass" || status == "fail");
        EXPECT_EQ(c.contains("defect"), status == "fail");
        if (status == "fail") {
            saw_defect = true;
            EXPECT_FALSE(c["defect"]["text"].get<std::string>().empty());
            ASSERT_FALSE(c["defect"]["terms"].empty());
            for (const auto &term : c["defect"]["terms"]) {
                EXPECT_TRUE(term["t"].is_number_integer());
                EXPECT_TRUE(term["legs"].is_array());
                EXPECT_TRUE(term["coeff"].is_string());
            }
        }
    }
    EXPECT_TRUE(saw_defect);
}

TEST(Verification, CorruptedBracketFails)
{
    SuiteConfig cfg = config({"bialgebra"}, 2);
    cfg.corrupt_bracket = true;
    const Report r = svq::run_suite(cfg);
    EXPECT_FALSE(r.ok());
    const auto failed = check_keys(r, false);
    EXPECT_TRUE(std::any_of(failed.begin(), failed.end(),
                            [](const std::string &k) { return k.find("jacobi") != std::string::npos; }));
    cfg.corrupt_bracket = false;
    EXPECT_TRUE(svq::run_suite(cfg).ok());
}

TEST(Verification, PassSetGrowsOnlyWithOrder)
{
    SuiteConfig cfg = config({"theorem1"}, 2);
    cfg.n0_values = {1};
    cfg.index_range = 1;
    const Report low = svq::run_suite(cfg);
    cfg.order = 3;
    const Report high = svq::run_suite(cfg);
    EXPECT_TRUE(low.ok());
    EXPECT_TRUE(high.ok());
    EXPECT_EQ(check_keys(low, true), check_keys(high, true));
}

TEST(Verification, TextAndJsonAgree)
{
    SuiteConfig cfg = config({"theorem1"}, 2);
    cfg.n0_values = {1};
    cfg.index_range = 1;
    cfg.corrupt_bracket = true;
    const Report r = svq::run_suite(cfg);
    const Report from_json = svq::report_from_json(svq::to_json(r));

    std::size_t pass_lines = 0;
    std::size_t fail_lines = 0;
    std::istringstream text(svq::to_text(r));
    std::string line;
    while (std::getline(text, line)) {
        pass_lines += line.rfind("PASS", 0) == 0 ? 1 : 0;
        fail_lines += line.rfind("FAIL", 0) == 0 ? 1 : 0;
    }
    EXPECT_EQ(pass_lines, from_json.passed());
    EXPECT_EQ(fail_lines, from_json.failed());
    EXPECT_NE(svq::to_text(r).find("summary: " + std::to_string(r.passed()) + " passed, " +
                                   std::to_string(r.failed()) + " failed"),
              std::string::npos);
}
