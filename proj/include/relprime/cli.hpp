// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relprime/oracle.hpp"

namespace relprime::cli {

// Process exit codes. Stable; scripts depend on them.
enum ExitCode : int {
    kOk = 0,
    kParseError = 2,
    kValidationError = 3,
    kBudgetExceeded = 4,
    kCheckFailed = 5,
    kVerifyMismatch = 6,
};

// One line of output. Numeric fields are decimal strings so arbitrarily large
// values survive consumers with 64-bit number parsers.
struct OutputRecord {
    std::string function;
    std::optional<std::string> set;
    std::optional<std::string> n;
    std::optional<std::string> k;
    std::optional<std::string> m;
    std::string result;
    std::optional<bool> verified;
    double elapsed_ms = 0.0;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

// Single-line JSON object, keys in the order function, set, n, k, m, result,
// verified, elapsed_ms. Absent optionals render as null.
std::string to_json(const OutputRecord& record);
OutputRecord record_from_json(std::string_view line);

// Tab-separated: function, set, n, k, m, result. Absent fields are empty.
std::string to_tsv(const OutputRecord& record);

enum class OutputFormat { json, tsv };

// Settings that may come from a config file, the environment or flags.
// Precedence, lowest first: defaults, config file, environment, flags.
struct Settings {
    oracle::OracleBudget budget;
    OutputFormat format = OutputFormat::json;
};

// key=value lines; '#' starts a comment. Keys: budget_subsets, budget_tuples,
// format (json|tsv). Throws std::invalid_argument on unknown keys or bad values.
void apply_config(Settings& settings, std::string_view text);

// RELPRIME_BUDGET_SUBSETS, when set, replaces budget.max_set_size.
void apply_environment(Settings& settings);

struct SequenceChecks {
    bool mod3 = false;      // phi(n) = 0 (mod 3) for n >= 3
    bool nonsquare = false; // f(n) is not a perfect square for n >= 2
};

// Describes the violated check for the n-th sequence value, if any.
std::optional<std::string> sequence_check_failure(const SequenceChecks& checks, std::uint64_t n, const Count& value);

// Full command-line entry point. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace relprime::cli
