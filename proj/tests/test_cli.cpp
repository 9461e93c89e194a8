#include <svq_cli/commands.hpp>
#include <svq_cli/expression.hpp>

#include <svq/verification.hpp>

#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

using svq::Generator;
using svq::Rational;
using svq::UEAElement;
using svq::uea;

namespace
{

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation run(std::vector<std::string> args)
{
    args.insert(args.begin(), "svq");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = svq::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Parser, Generators)
{
    EXPECT_EQ(svq::cli::parse_generator("L(-2)"), Generator::L(-2));
    EXPECT_EQ(svq::cli::parse_generator(" M( 3 ) "), Generator::M(3));
    EXPECT_EQ(svq::cli::parse_generator("Y(-3/2)"), Generator::Y(Rational(-3, 2)));
    EXPECT_THROW(svq::cli::parse_generator("L(1)*L(2)"), svq::cli::ParseError);
    EXPECT_THROW(svq::cli::parse_generator("X(1)"), svq::cli::ParseError);
}

TEST(Parser, Elements)
{
    const UEAElement l0 = uea(Generator::L(0));
    const UEAElement l1 = uea(Generator::L(1));
    EXPECT_EQ(svq::cli::parse_element("L(1)*L(0)"), l1 * l0);
    EXPECT_EQ(svq::cli::parse_element("-1/2 * L(0) + 3"), svq::uea_scalar(3) - uea(Generator::L(0), Rational(1, 2)));
    EXPECT_EQ(svq::cli::parse_element("2 L(1)^2 - L(0)"), Rational(2) * l1 * l1 - l0);
    EXPECT_EQ(svq::cli::parse_element("Y(1/2)*Y(1/2)"), svq::cli::parse_element("Y(1/2)^2"));
}

TEST(Parser, ErrorsCarryPosition)
{
    try {
        (void)svq::cli::parse_element("L(0) + Y(1)");
        FAIL();
    } catch (const svq::cli::ParseError &e) {
        EXPECT_EQ(e.position(), 9U);
        EXPECT_NE(std::string(e.what()).find("Z + 1/2"), std::string::npos);
        EXPECT_EQ(svq::cli::caret_diagnostic("L(0) + Y(1)", e), "L(0) + Y(1)\n         ^");
    }
    for (const char *bad : {"", "L(", "L(1/2)", "M(1)*", "1/0*L(1)", "Y(1/3)", "L(1) L(2)", "L(1)^x", "L(1)+"}) {
        EXPECT_THROW((void)svq::cli::parse_element(bad), svq::cli::ParseError) << bad;
    }
}

TEST(Parser, RoundTripsCanonicalRendering)
{
    const auto grid = svq::generator_grid(2);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
    std::uniform_int_distribution<int> len(0, 3);
    std::uniform_int_distribution<int> num(-5, 5);
    for (int i = 0; i < 200; ++i) {
        UEAElement x;
        for (int term = 0; term < 3; ++term) {
            std::vector<Generator> w;
            for (int j = len(rng); j > 0; --j) {
                w.push_back(grid[pick(rng)]);
            }
            x = x + Rational(num(rng), 3) * svq::normalize(w);
        }
        ASSERT_EQ(svq::cli::parse_element(svq::to_string(x)), x) << svq::to_string(x);
    }
}

TEST(Cli, NormalizeExamples)
{
    Invocation r = run({"normalize", "--expr", "L(1)*L(0)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "L(0)*L(1) - L(1)\n");
    r = run({"normalize", "--expr", "Y(1/2)*Y(1/2)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "Y(1/2)*Y(1/2)\n");
    r = run({"normalize", "--expr", "Y(1)"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("column 3"), std::string::npos);
    EXPECT_NE(r.err.find("Y(1)\n  ^"), std::string::npos);
}

TEST(Cli, ExpandExamples)
{
    Invocation r = run({"expand", "--case", "1", "--n0", "1", "--order", "1", "--op", "delta", "--gen", "M(1)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1⊗M(1) + M(1)⊗1 + (-1)·M(1)⊗M(1)·t\n");
    r = run({"expand", "--case", "2", "--n0", "1", "--order", "0", "--op", "antipode", "--gen", "Y(1/2)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "(-1)·Y(1/2)\n");
    r = run({"expand", "--case", "1", "--n0", "1", "--order", "3", "--op", "delta-closed", "--gen", "L(2)"});
    const Invocation conj = run({"expand", "--case", "1", "--n0", "1", "--order", "3", "--op", "delta", "--gen", "L(2)"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, conj.out);
}

TEST(Cli, ExpandErrors)
{
    Invocation r = run({"expand", "--case", "3", "--n0", "1", "--op", "delta-closed", "--gen", "L(1)"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("case 3"), std::string::npos);
    EXPECT_EQ(run({"expand", "--case", "2", "--n0", "2", "--gen", "L(1)"}).code, 2);
    EXPECT_EQ(run({"expand", "--case", "4", "--gen", "L(1)"}).code, 2);
    EXPECT_EQ(run({"expand", "--gen", "L(1/2)"}).code, 2);
    EXPECT_EQ(run({"expand", "--op", "cube", "--gen", "L(1)"}).code, 2);
    EXPECT_EQ(run({"expand", "--case", "1"}).code, 2);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"verify", "--suite", "theorem2", "--n0", "2"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "nonsense"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "theorem1", "--order", "1"}).code, 2);
    EXPECT_EQ(run({"verify", "--format", "xml"}).code, 2);
}

TEST(Cli, VerifyJson)
{
    const Invocation r = run({"verify", "--suite", "theorem1", "--n0", "1", "--order", "4", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["summary"]["failed"].get<int>(), 0);
    EXPECT_GT(j["summary"]["passed"].get<int>(), 0);
    EXPECT_EQ(j["config"]["suites"], nlohmann::json::array({"theorem1"}));
    EXPECT_EQ(j["config"]["order"].get<int>(), 4);
}

TEST(Cli, VerifyTextAndCorruptedBracket)
{
    Invocation r = run({"verify", "--suite", "twist", "--order", "2", "--format", "text"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("PASS  twist", 0), 0U);
    EXPECT_NE(r.out.find("summary: "), std::string::npos);

    r = run({"verify", "--suite", "theorem1", "--n0", "1", "--range", "1", "--order", "2", "--corrupt-bracket"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL  theorem1"), std::string::npos);
}

TEST(Cli, VerifyWritesJsonFile)
{
    const std::string path = ::testing::TempDir() + "svq_report.json";
    const Invocation r = run({"verify", "--suite", "bialgebra", "--range", "1", "--format", "text", "--output", path});
    EXPECT_EQ(r.code, 0);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    const svq::Report rep = svq::report_from_json(buf.str());
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.config.suites, std::vector<std::string>{"bialgebra"});
    std::remove(path.c_str());
}
