#ifndef SVQ_VERIFICATION_HPP
#define SVQ_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <svq/rational.hpp>

namespace svq
{

// Canonical suite order.
const std::vector<std::string> &suite_names();

struct SuiteConfig {
    std::vector<std::string> suites;
    std::vector<long> n0_values{1, 2, 3};
    int order = 4;
    long index_range = 3;
    std::vector<Rational> a_samples{Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(1, 3)};
    std::uint64_t seed = 0;
    // Swaps in a wrong [L_m, M_n] structure constant for the duration of the run.
    bool corrupt_bracket = false;

    static SuiteConfig defaults();  // every suite enabled

    friend bool operator==(const SuiteConfig &, const SuiteConfig &) = default;
};

// Empty when the configuration is usable. Case-2 checks run on the odd members
// of n0_values; theorem2 with no odd member is an error.
std::vector<std::string> config_errors(const SuiteConfig &cfg);

struct WitnessTerm {
    int t_power = 0;
    std::vector<std::string> legs;
    std::string coeff;

    friend bool operator==(const WitnessTerm &, const WitnessTerm &) = default;
};

struct Defect {
    std::string text;
    std::vector<WitnessTerm> terms;

    friend bool operator==(const Defect &, const Defect &) = default;
};

struct CheckRecord {
    std::string suite;
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    bool passed = true;
    Defect defect;  // empty when passed

    friend bool operator==(const CheckRecord &, const CheckRecord &) = default;
};

struct Report {
    SuiteConfig config;
    std::vector<CheckRecord> checks;
    double runtime_seconds = 0.0;

    [[nodiscard]] std::size_t passed() const;
    [[nodiscard]] std::size_t failed() const;
    [[nodiscard]] bool ok() const { return failed() == 0; }

    friend bool operator==(const Report &, const Report &) = default;
};

// Runs every enabled suite. Invalid configurations yield a failing "config"
// record instead of an exception.
Report run_suite(const SuiteConfig &cfg);

std::string to_json(const Report &r, int indent = 2);
Report report_from_json(const std::string &text);
std::string to_text(const Report &r);

} // namespace svq

#endif
