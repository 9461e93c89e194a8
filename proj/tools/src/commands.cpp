#include <svq_cli/commands.hpp>
#include <svq_cli/expression.hpp>

#include <svq/series.hpp>
#include <svq/twist.hpp>
#include <svq/verification.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

namespace svq::cli
{

namespace
{

std::vector<std::string> expand_suites(const std::vector<std::string> &requested)
{
    if (std::find(requested.begin(), requested.end(), "all") != requested.end()) {
        return suite_names();
    }
    return requested;
}

} // namespace

int cmd_verify(const VerifyOptions &opts, std::ostream &out, std::ostream &err)
{
    if (opts.format != "json" && opts.format != "text") {
        err << "error: unknown format '" << opts.format << "'\n";
        return kUsage;
    }
    SuiteConfig cfg;
    cfg.suites = expand_suites(opts.suites);
    cfg.n0_values = opts.n0_values;
    cfg.order = opts.order;
    cfg.index_range = opts.range;
    cfg.seed = opts.seed;
    cfg.corrupt_bracket = opts.corrupt_bracket;

    const auto errors = config_errors(cfg);
    if (!errors.empty()) {
        for (const auto &e : errors) {
            err << "error: " << e << '\n';
        }
        return kUsage;
    }

    const Report report = run_suite(cfg);
    const std::string json = to_json(report);
    if (opts.format == "json") {
        out << json << '\n';
    } else {
        out << to_text(report);
    }
    if (!opts.output.empty()) {
        std::ofstream file(opts.output);
        if (!file) {
            err << "error: cannot write '" << opts.output << "'\n";
            return kUsage;
        }
        file << json << '\n';
    }
    return report.ok() ? kOk : kChecksFailed;
}

int cmd_expand(const ExpandOptions &opts, std::ostream &out, std::ostream &err)
{
    static const std::vector<std::string> ops{"delta", "antipode", "delta-closed", "antipode-closed"};
    if (std::find(ops.begin(), ops.end(), opts.op) == ops.end()) {
        err << "error: unknown op '" << opts.op << "'\n";
        return kUsage;
    }
    if (opts.order < 0) {
        err << "error: order must be nonnegative\n";
        return kUsage;
    }
    Generator g = Generator::L(0);
    try {
        g = parse_generator(opts.gen);
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n' << caret_diagnostic(opts.gen, e) << '\n';
        return kUsage;
    }
    try {
        const TwistData d = build_twist(TwistCase(opts.case_id, opts.n0), opts.order);
        const UEAElement x = uea(g);
        Series s(1, 0);
        if (opts.op == "delta") {
            s = delta_twisted(x, d);
        } else if (opts.op == "antipode") {
            s = antipode_twisted(x, d);
        } else if (opts.op == "delta-closed") {
            s = closed_form_delta(g, d);
        } else {
            s = closed_form_antipode(g, d);
        }
        out << s.to_string() << '\n';
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kOk;
}

int cmd_normalize(const std::string &expr, std::ostream &out, std::ostream &err)
{
    try {
        out << to_string(parse_element(expr)) << '\n';
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n' << caret_diagnostic(expr, e) << '\n';
        return kUsage;
    }
    return kOk;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact twisted Hopf structures on the Schroedinger-Virasoro algebra", "svq"};
    app.require_subcommand(1);

    VerifyOptions verify;
    auto *v = app.add_subcommand("verify", "Run identity suites and report defects");
    v->add_option("--suite", verify.suites, "Suite names or 'all'")->delimiter(',');
    v->add_option("--n0", verify.n0_values, "Comma-separated n0 values")->delimiter(',');
    v->add_option("--order", verify.order, "Truncation order N");
    v->add_option("--range", verify.range, "Index range of the generator grid");
    v->add_option("--format", verify.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    v->add_option("--seed", verify.seed, "Seed for sampled checks");
    v->add_option("--output", verify.output, "Also write the JSON report here");
    v->add_flag("--corrupt-bracket", verify.corrupt_bracket)->group("");

    ExpandOptions expand;
    auto *e = app.add_subcommand("expand", "Print a twisted coproduct or antipode");
    e->add_option("--case", expand.case_id, "Twist case 1, 2 or 3")->check(CLI::Range(1, 3));
    e->add_option("--n0", expand.n0, "n0");
    e->add_option("--order", expand.order, "Truncation order N");
    e->add_option("--op", expand.op, "delta, antipode, delta-closed or antipode-closed")
        ->check(CLI::IsMember({"delta", "antipode", "delta-closed", "antipode-closed"}));
    e->add_option("--gen", expand.gen, "Generator such as L(2), M(-1), Y(3/2)")->required();

    std::string expr;
    auto *n = app.add_subcommand("normalize", "Print the PBW normal form of an expression");
    n->add_option("--expr", expr, "Expression, e.g. \"L(1)*L(0) - 1/2*Y(1/2)\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kOk : kUsage;
    }

    if (v->parsed()) {
        return cmd_verify(verify, out, err);
    }
    if (e->parsed()) {
        return cmd_expand(expand, out, err);
    }
    return cmd_normalize(expr, out, err);
}

} // namespace svq::cli
