#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <utility>

#include "doctest.h"

namespace {

// Runs the built binary, returning exit code and combined output.
std::pair<int, std::string> run_cli(const std::string& args) {
    const std::string command = std::string(CELECT_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (std::size_t n = std::fread(buffer, 1, sizeof(buffer), pipe)) output.append(buffer, n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

const std::string kData = CELECT_DATA_DIR;

}  // namespace

TEST_CASE("evaluate prints the per-voter table and the total") {
    const auto [code, out] = run_cli("evaluate --profile " + kData +
                                     "/table1a.csv --committee 1,2,3 --decision majority "
                                     "--model det");
    CHECK(code == 0);
    CHECK(out.find("voter,satisfaction\n") == 0);
    CHECK(out.find("5,0.000000\n") != std::string::npos);
    CHECK(out.find("total,5.000000\n") != std::string::npos);
}

TEST_CASE("comb reports committee, decision and total") {
    const auto [code, out] = run_cli("comb --profile " + kData + "/table1b.csv --k 3");
    CHECK(code == 0);
    CHECK(out == "committee: 1,2,8\ndecision: random-dictatorship\ntotal: 2.666667\n");
}

TEST_CASE("winners on the illustrative table") {
    const auto [code, out] = run_cli("winners --rule 'kmedian(2)' --k 3 --exact --profile " +
                                     kData + "/table1a.csv");
    CHECK(code == 0);
    CHECK(out == "committee: 1,2,3\ntotal: 5.000000\n");

    const auto [seq_code, seq_out] =
        run_cli("winners --rule pav --k 3 --sequential --profile " + kData + "/table1a.csv");
    CHECK(seq_code == 0);
    CHECK(seq_out.find("committee: ") == 0);
}

TEST_CASE("optimal-full matches the fixed-committee optimum on table 1b") {
    const auto [code, out] = run_cli("optimal-full --profile " + kData + "/table1b.csv --k 3");
    CHECK(code == 0);
    CHECK(out.find("total: 3.000000\n") != std::string::npos);
}

TEST_CASE("domain errors exit 1 with a one-line diagnostic") {
    const auto [code, out] = run_cli("winners --rule pav --k 3 --sequential --profile " +
                                     kData + "/does_not_exist.csv");
    CHECK(code == 1);
    CHECK(out.find("error: ") == 0);

    const auto [empty_code, empty_out] =
        run_cli("evaluate --profile /dev/null --committee 1 --decision majority");
    CHECK(empty_code == 1);
    CHECK(empty_out.find("error: ") == 0);
}

TEST_CASE("usage errors exit 2") {
    const auto [code, out] = run_cli("no-such-subcommand");
    CHECK(code == 2);
    CHECK(!out.empty());

    const auto [missing_code, missing_out] = run_cli("winners --rule pav");
    CHECK(missing_code == 2);
    CHECK(!missing_out.empty());
}

TEST_CASE("version flag") {
    const auto [code, out] = run_cli("--version");
    CHECK(code == 0);
    CHECK(out.find("celect") != std::string::npos);
}

TEST_CASE("parse-preflib emits a borda profile") {
    const auto [code, out] =
        run_cli("parse-preflib --in " + kData + "/preflib/synthetic_20x25.soc");
    CHECK(code == 0);
    CHECK(out.rfind("20 25 borda\n", 0) == 0);
}

TEST_CASE("repeated identical invocations produce identical bytes") {
    const std::string args = "simulate-line --voters 12 --candidates 12 --k 3 --trials 4 "
                             "--seed 9 --out -";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    CHECK(first.first == 0);
    CHECK(first.second == second.second);
    CHECK(first.second.find("x,rule,decision,satisfaction\n") == 0);
}
