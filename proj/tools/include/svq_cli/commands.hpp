#ifndef SVQ_CLI_COMMANDS_HPP
#define SVQ_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace svq::cli
{

enum ExitCode : int { kOk = 0, kChecksFailed = 1, kUsage = 2 };

struct VerifyOptions {
    std::vector<std::string> suites{"all"};
    std::vector<long> n0_values{1, 2, 3};
    int order = 4;
    long range = 3;
    std::string format = "text";
    std::uint64_t seed = 0;
    std::string output;
    bool corrupt_bracket = false;
};

struct ExpandOptions {
    int case_id = 1;
    long n0 = 1;
    int order = 4;
    std::string op = "delta";
    std::string gen;
};

int cmd_verify(const VerifyOptions &opts, std::ostream &out, std::ostream &err);
int cmd_expand(const ExpandOptions &opts, std::ostream &out, std::ostream &err);
int cmd_normalize(const std::string &expr, std::ostream &out, std::ostream &err);

// Full command-line entry point; argv[0] is the program name.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace svq::cli

#endif
