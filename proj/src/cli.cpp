// SPDX-License-Identifier: Apache-2.0
#include "relprime/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "relprime/counting.hpp"
#include "relprime/errors.hpp"
#include "relprime/setspec.hpp"
#include "relprime/shonhiwa.hpp"

namespace relprime::cli {

namespace {

using json = nlohmann::ordered_json;

// Bad command-line usage; maps to kParseError.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Function { f, fk, phi, phik, S, G, L, H, T };

struct FunctionInfo {
    Function id;
    std::string_view name;
    bool needs_set;
    bool needs_n;
    bool needs_k;
    bool needs_m;
};

constexpr std::array<FunctionInfo, 9> kFunctions{{
    {Function::f, "f", true, false, false, false},
    {Function::fk, "fk", true, false, true, false},
    {Function::phi, "phi", true, true, false, false},
    {Function::phik, "phik", true, true, true, false},
    {Function::S, "S", false, true, true, true},
    {Function::G, "G", false, true, true, false},
    {Function::L, "L", false, true, true, true},
    {Function::H, "H", false, true, true, false},
    {Function::T, "T", false, true, true, true},
}};

const FunctionInfo& lookup(std::string_view name) {
    const auto it = std::ranges::find(kFunctions, name, &FunctionInfo::name);
    if (it == kFunctions.end()) {
        throw UsageError("unknown function '" + std::string(name) + "' (expected f, fk, phi, phik, S, G, L, H or T)");
    }
    return *it;
}

Count parse_count(const std::string& text, std::string_view flag) {
    if (text.empty() || !std::ranges::all_of(text, [](unsigned char c) { return std::isdigit(c) != 0; })) {
        throw UsageError("--" + std::string(flag) + " expects an unsigned decimal integer, got '" + text + "'");
    }
    Count value(text, 10);
    if (sgn(value) <= 0) {
        throw UsageError("--" + std::string(flag) + " must be positive");
    }
    return value;
}

std::uint64_t parse_u64(const std::string& text, std::string_view flag) {
    const auto value = parse_count(text, flag);
    if (mpz_sizeinbase(value.get_mpz_t(), 2) > 64) {
        throw UsageError("--" + std::string(flag) + " does not fit in 64 bits");
    }
    return mpz_get_ui(value.get_mpz_t());
}

std::uint64_t parse_budget(std::string_view text, std::string_view what) {
    return parse_u64(std::string(text), what);
}

// Fully resolved arguments for one evaluation.
struct Query {
    const FunctionInfo* info = nullptr;
    std::optional<std::string> set_text;
    std::optional<ProgressionUnion> set;
    std::optional<std::string> n_text;
    std::optional<Count> n;
    std::optional<std::uint64_t> k;
    std::optional<std::string> m_text;
    std::optional<Count> m;
};

Query resolve(const FunctionInfo& info, const std::optional<std::string>& set_text,
              const std::optional<std::string>& n_text, const std::optional<std::string>& k_text,
              const std::optional<std::string>& m_text) {
    const auto check = [&](bool needed, bool given, std::string_view flag) {
        if (needed && !given) {
            throw UsageError("function " + std::string(info.name) + " requires --" + std::string(flag));
        }
        if (!needed && given) {
            throw UsageError("function " + std::string(info.name) + " does not take --" + std::string(flag));
        }
    };
    check(info.needs_set, set_text.has_value(), "set");
    check(info.needs_n, n_text.has_value(), "n");
    check(info.needs_k, k_text.has_value(), "k");
    check(info.needs_m, m_text.has_value(), "m");

    Query q;
    q.info = &info;
    q.set_text = set_text;
    q.n_text = n_text;
    q.m_text = m_text;
    if (set_text) {
        q.set = parse_set_spec(*set_text);
    }
    if (n_text) {
        q.n = parse_count(*n_text, "n");
    }
    if (k_text) {
        q.k = parse_u64(*k_text, "k");
    }
    if (m_text) {
        q.m = parse_count(*m_text, "m");
    }
    return q;
}

std::uint64_t tuple_n(const Query& q) {
    if (mpz_sizeinbase(q.n->get_mpz_t(), 2) > 64) {
        throw UsageError("--n does not fit in 64 bits");
    }
    return mpz_get_ui(q.n->get_mpz_t());
}

Count evaluate_formula(const Query& q, EvalOptions options) {
    switch (q.info->id) {
    case Function::f:
        return f(*q.set, options);
    case Function::fk:
        return f_k(*q.set, *q.k, options);
    case Function::phi:
        return phi(*q.set, *q.n, options);
    case Function::phik:
        return phi_k(*q.set, *q.n, *q.k, options);
    case Function::S:
        return s_count(tuple_n(q), *q.k, *q.m);
    case Function::G:
        return g_count(tuple_n(q), *q.k);
    case Function::L:
        return l_count(tuple_n(q), *q.k, *q.m);
    case Function::H:
        return h_count(tuple_n(q), *q.k);
    case Function::T:
        return t_count(tuple_n(q), *q.k, *q.m);
    }
    throw std::logic_error("unhandled function");
}

Count evaluate_oracle(const Query& q, const oracle::OracleBudget& budget) {
    using oracle::TupleOrdering;
    const auto tuples = [&](TupleOrdering ordering) {
        return oracle::brute_tuples(TupleQuery{tuple_n(q), *q.k, q.m}, ordering, budget);
    };
    switch (q.info->id) {
    case Function::f:
        return oracle::brute_f(*q.set, budget);
    case Function::fk:
        return oracle::brute_f_k(*q.set, *q.k, budget);
    case Function::phi:
        return oracle::brute_phi(*q.set, *q.n, budget);
    case Function::phik:
        return oracle::brute_phi_k(*q.set, *q.n, *q.k, budget);
    case Function::S:
    case Function::G:
        return tuples(TupleOrdering::ordered);
    case Function::L:
    case Function::H:
        return tuples(TupleOrdering::nondecreasing);
    case Function::T:
        return tuples(TupleOrdering::strict);
    }
    throw std::logic_error("unhandled function");
}

struct Evaluation {
    OutputRecord record;
    Count value;
    std::optional<Count> oracle_value;
};

Evaluation evaluate(const Query& q, bool verify, const Settings& settings, EvalOptions options) {
    const auto start = std::chrono::steady_clock::now();
    Evaluation ev;
    ev.value = evaluate_formula(q, options);
    if (verify) {
        ev.oracle_value = evaluate_oracle(q, settings.budget);
    }
    const auto stop = std::chrono::steady_clock::now();

    auto& r = ev.record;
    r.function = std::string(q.info->name);
    r.set = q.set_text;
    r.n = q.n_text;
    r.k = q.k ? std::optional<std::string>(std::to_string(*q.k)) : std::nullopt;
    r.m = q.m_text;
    r.result = ev.value.get_str();
    if (ev.oracle_value) {
        r.verified = *ev.oracle_value == ev.value;
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return ev;
}

void emit(const OutputRecord& record, const Settings& settings, std::ostream& out) {
    out << (settings.format == OutputFormat::json ? to_json(record) : to_tsv(record)) << '\n';
}

// Reports a verification mismatch; returns the exit code to use.
int report(const Evaluation& ev, std::ostream& err) {
    if (ev.record.verified == false) {
        err << "verification mismatch for " << ev.record.function << ": formula=" << ev.value.get_str()
            << " oracle=" << ev.oracle_value->get_str() << '\n';
        return kVerifyMismatch;
    }
    return kOk;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw UsageError("range must look like l..r, got '" + text + "'");
    }
    const auto lo = parse_u64(text.substr(0, dots), "range start");
    const auto hi = parse_u64(text.substr(dots + 2), "range end");
    if (lo > hi) {
        throw UsageError("range " + text + " is empty");
    }
    return {lo, hi};
}

struct CommonFlags {
    std::optional<std::string> set;
    std::optional<std::string> n;
    std::optional<std::string> k;
    std::optional<std::string> m;
    bool json = false;
    bool tsv = false;
    std::optional<std::uint64_t> budget_subsets;
    std::optional<std::uint64_t> budget_tuples;
    std::optional<std::string> config;
    unsigned threads = 1;
};

void add_common(CLI::App& cmd, CommonFlags& flags) {
    cmd.add_option("--set", flags.set, "Ground set, e.g. \"1..4 + ap(7,3,5)\"");
    cmd.add_option("--n", flags.n, "Modulus (f-family: none) or range bound (tuple functions)");
    cmd.add_option("--k", flags.k, "Subset size or tuple length");
    cmd.add_option("--m", flags.m, "Coprimality modulus for S, L and T");
    auto* json_flag = cmd.add_flag("--json", flags.json, "JSON-lines output (default)");
    auto* tsv_flag = cmd.add_flag("--tsv", flags.tsv, "Tab-separated output");
    json_flag->excludes(tsv_flag);
    cmd.add_option("--budget-subsets", flags.budget_subsets, "Oracle limit on |X|");
    cmd.add_option("--budget-tuples", flags.budget_tuples, "Oracle limit on enumerated tuples");
    cmd.add_option("--config", flags.config, "key=value config file");
    cmd.add_option("--threads", flags.threads, "Threads for the divisor sums")->check(CLI::Range(1u, 1024u));
}

Settings settings_from(const CommonFlags& flags) {
    Settings settings;
    if (flags.config) {
        std::ifstream in(*flags.config);
        if (!in) {
            throw UsageError("cannot read config file '" + *flags.config + "'");
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        apply_config(settings, buffer.str());
    }
    apply_environment(settings);
    if (flags.budget_subsets) {
        settings.budget.max_set_size = *flags.budget_subsets;
    }
    if (flags.budget_tuples) {
        settings.budget.max_tuple_space = *flags.budget_tuples;
    }
    if (flags.json) {
        settings.format = OutputFormat::json;
    }
    if (flags.tsv) {
        settings.format = OutputFormat::tsv;
    }
    return settings;
}

int run_count(const std::string& function, const CommonFlags& flags, bool verify, std::ostream& out,
              std::ostream& err) {
    const auto settings = settings_from(flags);
    const auto q = resolve(lookup(function), flags.set, flags.n, flags.k, flags.m);
    const auto ev = evaluate(q, verify, settings, EvalOptions{flags.threads});
    emit(ev.record, settings, out);
    return report(ev, err);
}

int run_sequence(const std::string& function, const std::string& range, const CommonFlags& flags, bool verify,
                 bool check_mod3, bool check_nonsquare, std::ostream& out, std::ostream& err) {
    const auto settings = settings_from(flags);
    const auto& info = lookup(function);
    if (flags.set || flags.n) {
        throw UsageError("seq varies n itself; --set and --n are not accepted");
    }
    if (check_mod3 && info.id != Function::phi) {
        throw UsageError("--check-mod3 applies to phi only");
    }
    if (check_nonsquare && info.id != Function::f) {
        throw UsageError("--check-nonsquare applies to f only");
    }
    const auto [lo, hi] = parse_range(range);

    int status = kOk;
    for (auto n = lo; n <= hi; ++n) {
        const auto n_text = std::to_string(n);
        const auto interval = "1.." + n_text;
        // Subset functions run over [1, n]; the phi family also uses n as modulus.
        const auto q = resolve(info, info.needs_set ? std::optional(interval) : std::nullopt,
                               info.needs_n ? std::optional(n_text) : std::nullopt, flags.k, flags.m);
        const auto ev = evaluate(q, verify, settings, EvalOptions{flags.threads});
        emit(ev.record, settings, out);
        out.flush();
        if (const auto code = report(ev, err); code != kOk) {
            status = code;
        }
        if (const auto failure = sequence_check_failure({check_mod3, check_nonsquare}, n, ev.value)) {
            err << *failure << '\n';
            return kCheckFailed;
        }
    }
    return status;
}

} // namespace

std::optional<std::string> sequence_check_failure(const SequenceChecks& checks, std::uint64_t n, const Count& value) {
    if (checks.mod3 && n >= 3 && mpz_divisible_ui_p(value.get_mpz_t(), 3) == 0) {
        return "check-mod3 failed at n = " + std::to_string(n) + ": " + value.get_str() + " is not divisible by 3";
    }
    if (checks.nonsquare && n >= 2 && mpz_perfect_square_p(value.get_mpz_t()) != 0) {
        return "check-nonsquare failed at n = " + std::to_string(n) + ": " + value.get_str()
               + " is a perfect square";
    }
    return std::nullopt;
}

std::string to_json(const OutputRecord& record) {
    const auto opt = [](const std::optional<std::string>& v) { return v ? json(*v) : json(nullptr); };
    json j;
    j["function"] = record.function;
    j["set"] = opt(record.set);
    j["n"] = opt(record.n);
    j["k"] = opt(record.k);
    j["m"] = opt(record.m);
    j["result"] = record.result;
    j["verified"] = record.verified ? json(*record.verified) : json(nullptr);
    j["elapsed_ms"] = record.elapsed_ms;
    return j.dump();
}

OutputRecord record_from_json(std::string_view line) {
    const auto j = json::parse(line);
    const auto opt = [&](const char* key) -> std::optional<std::string> {
        const auto& v = j.at(key);
        return v.is_null() ? std::nullopt : std::optional(v.get<std::string>());
    };
    OutputRecord r;
    r.function = j.at("function").get<std::string>();
    r.set = opt("set");
    r.n = opt("n");
    r.k = opt("k");
    r.m = opt("m");
    r.result = j.at("result").get<std::string>();
    if (const auto& v = j.at("verified"); !v.is_null()) {
        r.verified = v.get<bool>();
    }
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

std::string to_tsv(const OutputRecord& record) {
    const auto field = [](const std::optional<std::string>& v) { return v.value_or(""); };
    return record.function + '\t' + field(record.set) + '\t' + field(record.n) + '\t' + field(record.k) + '\t'
           + field(record.m) + '\t' + record.result;
}

void apply_config(Settings& settings, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    const auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        const auto e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": expected key=value");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key == "budget_subsets") {
            settings.budget.max_set_size = parse_budget(value, "budget_subsets");
        } else if (key == "budget_tuples") {
            settings.budget.max_tuple_space = parse_budget(value, "budget_tuples");
        } else if (key == "format") {
            if (value == "json") {
                settings.format = OutputFormat::json;
            } else if (value == "tsv") {
                settings.format = OutputFormat::tsv;
            } else {
                throw std::invalid_argument("config line " + std::to_string(line_no) + ": format must be json or tsv");
            }
        } else {
            throw std::invalid_argument("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
}

void apply_environment(Settings& settings) {
    if (const char* value = std::getenv("RELPRIME_BUDGET_SUBSETS"); value != nullptr && *value != '\0') {
        settings.budget.max_set_size = parse_budget(value, "RELPRIME_BUDGET_SUBSETS");
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts of relatively prime subsets and constrained tuples", "relprime"};
    app.require_subcommand(1);

    std::string function;
    std::string range;
    CommonFlags flags;
    bool verify = false;
    bool check_mod3 = false;
    bool check_nonsquare = false;

    auto* count = app.add_subcommand("count", "Evaluate one function");
    count->add_option("function", function, "f, fk, phi, phik, S, G, L, H or T")->required();
    add_common(*count, flags);
    count->add_flag("--verify", verify, "Also run the brute-force oracle and compare");

    auto* seq = app.add_subcommand("seq", "Evaluate a function for each n in a range");
    seq->add_option("function", function, "f, fk, phi, phik, S, G, L, H or T")->required();
    seq->add_option("range", range, "l..r")->required();
    add_common(*seq, flags);
    seq->add_flag("--verify", verify, "Also run the brute-force oracle and compare");
    seq->add_flag("--check-mod3", check_mod3, "Fail unless phi(n) = 0 (mod 3) for n >= 3");
    seq->add_flag("--check-nonsquare", check_nonsquare, "Fail if f(n) is a perfect square for some n >= 2");

    auto* verify_cmd = app.add_subcommand("verify", "Evaluate one function and check it against the oracle");
    verify_cmd->add_option("function", function, "f, fk, phi, phik, S, G, L, H or T")->required();
    add_common(*verify_cmd, flags);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }

    try {
        if (count->parsed()) {
            return run_count(function, flags, verify, out, err);
        }
        if (verify_cmd->parsed()) {
            return run_count(function, flags, true, out, err);
        }
        return run_sequence(function, range, flags, verify, check_mod3, check_nonsquare, out, err);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationError;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetExceeded;
    } catch (const std::invalid_argument& e) {
        // ParseError, UsageError and config errors.
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }
}

} // namespace relprime::cli
