// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "relprime/cli.hpp"

using namespace relprime::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "relprime");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<OutputRecord> records(const std::string& text) {
    std::vector<OutputRecord> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(record_from_json(line));
    }
    return out;
}

} // namespace

TEST_CASE("count examples") {
    auto r = invoke({"count", "f", "--set", "1..4"});
    REQUIRE(r.code == kOk);
    CHECK(records(r.out).at(0).result == "11");

    r = invoke({"count", "phi", "--set", "1..2 + 5..6", "--n", "6"});
    REQUIRE(r.code == kOk);
    const auto rec = records(r.out).at(0);
    CHECK(rec.result == "12");
    CHECK(rec.set == "1..2 + 5..6");
    CHECK(rec.n == "6");
    CHECK(!rec.k);
    CHECK(!rec.verified);

    r = invoke({"count", "T", "--n", "4", "--k", "2", "--m", "6"});
    REQUIRE(r.code == kOk);
    CHECK(records(r.out).at(0).result == "5");

    r = invoke({"count", "phik", "--set", "1..6", "--n", "6", "--k", "1", "--verify"});
    REQUIRE(r.code == kOk);
    CHECK(records(r.out).at(0).verified == true);
}

TEST_CASE("big results are exact decimal strings") {
    const auto r = invoke({"count", "f", "--set", "1..300"});
    REQUIRE(r.code == kOk);
    const auto result = records(r.out).at(0).result;
    CHECK(result.size() > 80);
    CHECK(r.out.find("\"result\":\"" + result + "\"") != std::string::npos);
}

TEST_CASE("tsv output") {
    auto r = invoke({"count", "L", "--n", "3", "--k", "2", "--m", "6", "--tsv"});
    REQUIRE(r.code == kOk);
    CHECK(r.out == "L\t\t3\t2\t6\t4\n");
    r = invoke({"count", "f", "--set", "1..4", "--tsv", "--json"});
    CHECK(r.code == kParseError);
}

TEST_CASE("JSON records round-trip byte-identically") {
    const auto r = invoke({"seq", "phik", "1..12", "--k", "2", "--verify"});
    REQUIRE(r.code == kOk);
    std::istringstream in(r.out);
    int lines = 0;
    for (std::string line; std::getline(in, line); ++lines) {
        REQUIRE(to_json(record_from_json(line)) == line);
    }
    CHECK(lines == 12);

    OutputRecord odd{"S", std::nullopt, "7", "3", "123456789012345678901234567890", "42", false, 0.1 + 0.2};
    CHECK(to_json(record_from_json(to_json(odd))) == to_json(odd));
    CHECK(record_from_json(to_json(odd)) == odd);
}

TEST_CASE("exit codes") {
    CHECK(invoke({"count", "f", "--set", "1..4 +"}).code == kParseError);
    CHECK(invoke({"count", "f"}).code == kParseError);
    CHECK(invoke({"count", "f", "--set", "1..4", "--n", "3"}).code == kParseError);
    CHECK(invoke({"count", "nope", "--set", "1..4"}).code == kParseError);
    CHECK(invoke({"count", "phi", "--set", "1..4", "--n", "-3"}).code == kParseError);
    CHECK(invoke({"count", "fk", "--set", "1..4", "--k", "0"}).code == kParseError);
    CHECK(invoke({"bogus"}).code == kParseError);
    CHECK(invoke({}).code == kParseError);

    const auto overlap = invoke({"count", "f", "--set", "1..5 + 3..4"});
    CHECK(overlap.code == kValidationError);
    CHECK(overlap.err.find("overlap") != std::string::npos);

    CHECK(invoke({"count", "f", "--set", "1..30", "--verify"}).code == kBudgetExceeded);
    CHECK(invoke({"verify", "S", "--n", "30", "--k", "6", "--m", "6"}).code == kBudgetExceeded);
    CHECK(invoke({"count", "f", "--set", "1..30"}).code == kOk);
    CHECK(invoke({"--help"}).code == kOk);
}

TEST_CASE("seq") {
    auto r = invoke({"seq", "f", "1..10"});
    REQUIRE(r.code == kOk);
    std::vector<std::string> got;
    for (const auto& rec : records(r.out)) {
        got.push_back(rec.result);
    }
    CHECK(got == std::vector<std::string>{"1", "2", "5", "11", "26", "53", "116", "236", "488", "983"});

    CHECK(invoke({"seq", "phi", "3..20", "--check-mod3"}).code == kOk);
    CHECK(invoke({"seq", "f", "2..25", "--check-nonsquare"}).code == kOk);

    // f(1) = 1 is a square and phi(1), phi(2) are not multiples of 3; the checks start above them.
    CHECK(invoke({"seq", "f", "1..3", "--check-nonsquare"}).code == kOk);
    CHECK(invoke({"seq", "phi", "1..4", "--check-mod3"}).code == kOk);

    CHECK(invoke({"seq", "f", "1..3", "--check-mod3"}).code == kParseError);
    CHECK(invoke({"seq", "phi", "1..3", "--check-nonsquare"}).code == kParseError);
    CHECK(invoke({"seq", "f", "5..3"}).code == kParseError);
    CHECK(invoke({"seq", "f", "1..5", "--set", "1..3"}).code == kParseError);

    r = invoke({"seq", "G", "1..4", "--k", "2", "--tsv"});
    REQUIRE(r.code == kOk);
    CHECK(r.out == "G\t\t1\t2\t\t1\nG\t\t2\t2\t\t3\nG\t\t3\t2\t\t7\nG\t\t4\t2\t\t11\n");
}

TEST_CASE("sequence checks flag violations") {
    CHECK(!sequence_check_failure(SequenceChecks{true, false}, 3, relprime::Count(6)));
    CHECK(sequence_check_failure(SequenceChecks{true, false}, 3, relprime::Count(7)));
    CHECK(!sequence_check_failure(SequenceChecks{true, false}, 2, relprime::Count(7)));
    CHECK(sequence_check_failure(SequenceChecks{false, true}, 4, relprime::Count(49)));
    CHECK(!sequence_check_failure(SequenceChecks{false, true}, 1, relprime::Count(1)));
    CHECK(!sequence_check_failure(SequenceChecks{false, true}, 4, relprime::Count(11)));
    const auto message = sequence_check_failure(SequenceChecks{false, true}, 9, relprime::Count(49));
    REQUIRE(message);
    CHECK(message->find("n = 9") != std::string::npos);
}

TEST_CASE("verify examples") {
    auto r = invoke({"verify", "f", "--set", "ap(3,4,5)"});
    REQUIRE(r.code == kOk);
    CHECK(records(r.out).at(0).verified == true);

    r = invoke({"verify", "phi", "--set", "1..18", "--n", "30"});
    REQUIRE(r.code == kOk);
    CHECK(records(r.out).at(0).verified == true);

    r = invoke({"verify", "G", "--n", "8", "--k", "3"});
    REQUIRE(r.code == kOk);
    CHECK(records(r.out).at(0).verified == true);

    for (const char* fn : {"S", "L", "T"}) {
        r = invoke({"verify", fn, "--n", "9", "--k", "3", "--m", "60"});
        REQUIRE(r.code == kOk);
        CHECK(records(r.out).at(0).verified == true);
    }
    r = invoke({"verify", "H", "--n", "9", "--k", "4"});
    CHECK(r.code == kOk);
}

TEST_CASE("config file, environment and flag precedence") {
    Settings s;
    apply_config(s, "# oracle limits\nbudget_subsets = 5\nbudget_tuples=77\nformat=tsv\n\n");
    CHECK(s.budget.max_set_size == 5);
    CHECK(s.budget.max_tuple_space == 77);
    CHECK(s.format == OutputFormat::tsv);
    CHECK_THROWS_AS(apply_config(s, "colour=blue"), std::invalid_argument);
    CHECK_THROWS_AS(apply_config(s, "format=xml"), std::invalid_argument);
    CHECK_THROWS_AS(apply_config(s, "budget_subsets"), std::invalid_argument);

    const auto path = std::filesystem::temp_directory_path() / "relprime_test.conf";
    std::ofstream(path) << "budget_subsets=3\nformat=tsv\n";

    auto r = invoke({"count", "f", "--set", "1..4", "--verify", "--config", path.string()});
    CHECK(r.code == kBudgetExceeded);

    r = invoke({"count", "f", "--set", "1..4", "--verify", "--config", path.string(), "--budget-subsets", "4"});
    CHECK(r.code == kOk);
    CHECK(r.out == "f\t1..4\t\t\t\t11\n");

    r = invoke({"count", "f", "--set", "1..4", "--config", path.string(), "--json"});
    CHECK(records(r.out).at(0).result == "11");

    ::setenv("RELPRIME_BUDGET_SUBSETS", "25", 1);
    r = invoke({"count", "f", "--set", "1..24", "--verify", "--config", path.string()});
    CHECK(r.code == kOk);
    r = invoke({"count", "f", "--set", "1..24", "--verify", "--budget-subsets", "10"});
    CHECK(r.code == kBudgetExceeded);
    ::unsetenv("RELPRIME_BUDGET_SUBSETS");

    CHECK(invoke({"count", "f", "--set", "1..4", "--config", "/nonexistent/relprime.conf"}).code == kParseError);
    std::filesystem::remove(path);
}
