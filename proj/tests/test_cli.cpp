#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>

#include <sys/wait.h>

#include "halltab/io.hpp"

namespace {

struct cli_result {
    int code;
    std::string out;
};

cli_result run_cli(const std::string& args) {
    const std::string cmd = std::string(HALLTAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    const int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

halltab::json report_of(const cli_result& r) { return halltab::parse_json(r.out); }

} // namespace

TEST_CASE("cli reports predicates with exit code 0/1") {
    auto yes = run_cli(R"(marriage --family '{"n":2,"members":[[1,2],[1,2]]}')");
    CHECK(yes.code == 0);
    auto yes_report = report_of(yes);
    CHECK(yes_report["command"] == "marriage");
    CHECK(yes_report["result"] == true);
    CHECK(yes_report["inputs"]["family"]["n"] == 2);
    CHECK(yes_report.contains("version"));

    auto no = run_cli(R"(shellable --family '{"n":2,"members":[[1,2],[1,2]]}')");
    CHECK(no.code == 1);
    CHECK(report_of(no)["result"] == false);

    auto ok = run_cli(R"(shellable --family '{"n":3,"members":[[1],[1,2],[1,2,3]]}')");
    CHECK(ok.code == 0);
    CHECK(report_of(ok)["result"] == true);
}

TEST_CASE("cli finds and enumerates transversals") {
    auto none = run_cli(R"(transversal --family '{"n":3,"members":[[1],[1],[1,2]]}')");
    CHECK(none.code == 1);
    CHECK(report_of(none)["result"].is_null());

    auto both = run_cli(R"(transversals --family '{"n":3,"members":[[2],[1,2,3]]}')");
    CHECK(both.code == 0);
    CHECK(report_of(both)["result"] == halltab::parse_json("[[2,1],[2,3]]"));

    auto order = run_cli(R"(shelling-order --family '{"n":3,"members":[[1],[1,2],[1,2,3]]}')");
    CHECK(order.code == 0);
    CHECK(report_of(order)["result"] == halltab::parse_json("[1,2,3]"));

    auto unique = run_cli(R"(unique-set --family '{"n":3,"members":[[1],[1,2],[1,2,3]]}')");
    CHECK(unique.code == 0);
    CHECK(report_of(unique)["result"] == halltab::parse_json("[3]"));
}

TEST_CASE("cli accepts a shape wherever a family is expected") {
    auto range = run_cli(R"(m-range --shape '{"lambda":[3,2,1]}')");
    CHECK(range.code == 0);
    auto range_report = report_of(range);
    CHECK(range_report["result"]["min"] == 6);
    CHECK(range_report["result"]["max"] == 6);
    CHECK(range_report["inputs"]["family"]["n"] == 6);
    CHECK(range_report["inputs"]["shape"]["lambda"] == halltab::parse_json("[3,2,1]"));

    auto corners = run_cli(R"(shape corners --shape '{"lambda":[4,2,2]}')");
    CHECK(corners.code == 0);
    CHECK(report_of(corners)["result"]["inner"] == halltab::parse_json("[[1,4],[3,2]]"));

    auto fam = run_cli(R"(shape family --shape '{"lambda":[2,1]}')");
    CHECK(fam.code == 0);
    CHECK(report_of(fam)["result"]["family"]["members"] ==
          halltab::parse_json("[[1,2,3],[2],[3]]"));
    CHECK(report_of(fam)["result"]["transversal"] == halltab::parse_json("[1,2,3]"));

    auto hooks = run_cli(R"(shape hooks --shape '{"lambda":[2,2]}')");
    CHECK(hooks.code == 0);
    auto hooks_report = report_of(hooks);
    REQUIRE(hooks_report["result"].size() == 4);
    CHECK(hooks_report["result"][0]["length"] == 3);
    CHECK(hooks_report["result"][0]["cells"] == halltab::parse_json("[[1,1],[1,2],[2,1]]"));
}

TEST_CASE("cli counts satisfying words and solves configurations") {
    auto zero = run_cli(
        R"(configs count --family '{"n":2,"members":[[1,2],[1,2]]}' --config '{"demands":[2,2]}' --m 2)");
    CHECK(zero.code == 0);
    CHECK(report_of(zero)["result"] == "0");

    auto solved = run_cli(
        R"(configs solve --family '{"n":3,"members":[[1],[1,2],[1,2,3]]}' --config '{"demands":[1,1,1]}' --m 3)");
    CHECK(solved.code == 0);
    CHECK(report_of(solved)["result"] == halltab::parse_json(R"({"m":3,"values":[3,2,1]})"));

    auto unsolved = run_cli(
        R"(configs solve --family '{"n":2,"members":[[1,2],[1,2]]}' --config '{"demands":[2,2]}' --m 2)");
    CHECK(unsolved.code == 1);
    CHECK(report_of(unsolved)["result"].is_null());

    auto classified = run_cli(
        R"(configs classify --family '{"n":2,"members":[[1,2],[1,2]]}' --transversal '[1,2]' --word '{"m":2,"values":[2,1]}')");
    CHECK(classified.code == 0);
    CHECK(report_of(classified)["result"] == halltab::parse_json(R"({"demands":[2,1]})"));
    CHECK(report_of(classified)["inputs"]["transversal"] == halltab::parse_json("[1,2]"));

    auto listed = run_cli(R"(configs enumerate --family '{"n":2,"members":[[1,2],[1,2]]}')");
    CHECK(listed.code == 0);
    CHECK(report_of(listed)["result"].size() == 4);
}

TEST_CASE("cli tableau and counting commands reproduce pinned values") {
    auto syt = run_cli(R"(shape syt-count --shape '{"lambda":[3,2,1]}')");
    CHECK(syt.code == 0);
    CHECK(report_of(syt)["result"] == "16");

    auto balanced = run_cli(R"(shape balanced-check --tableau '[[4,5,8,3],[6,7,9],[1,2]]')");
    CHECK(balanced.code == 0);
    CHECK(report_of(balanced)["result"] == true);

    auto stirling = run_cli("count stirling --n 18 --m 16");
    CHECK(stirling.code == 0);
    CHECK(report_of(stirling)["result"] == "9996");

    auto surj = run_cli("count surjections --n 4 --m 2");
    CHECK(surj.code == 0);
    CHECK(report_of(surj)["result"] == "14");

    auto avg = run_cli(
        R"(count average --shape '{"lambda":[6,5,4,3,2,1],"mu":[2,1]}' --m 16)");
    CHECK(avg.code == 0);
    CHECK(report_of(avg)["result"] ==
          halltab::parse_json(R"({"num":"20074070016","den":"5"})"));

    auto closed = run_cli(
        R"(count average-closed --shape '{"lambda":[6,5,4,3,2,1],"mu":[2,1]}' --m 16)");
    CHECK(closed.code == 0);
    CHECK(report_of(closed)["result"] == report_of(avg)["result"]);

    auto brute = run_cli(
        R"(count average-brute --family '{"n":2,"members":[[1,2],[1,2]]}' --m 2)");
    CHECK(brute.code == 0);
    CHECK(report_of(brute)["result"] == halltab::parse_json(R"({"num":"1","den":"1"})"));
}

TEST_CASE("cli verify runs property suites") {
    auto one = run_cli("verify stirling-consistency --bound 10");
    CHECK(one.code == 0);
    auto report = report_of(one);
    CHECK(report["result"]["pass"] == true);
    CHECK(report["result"]["id"] == "stirling-consistency");
    CHECK(report["inputs"]["bound"] == 10);
    CHECK(report["result"]["cases"].is_number());
}

TEST_CASE("cli maps error families onto exit codes") {
    auto bad_json = run_cli("shellable --family 'not-json'");
    CHECK(bad_json.code == 2);
    CHECK(report_of(bad_json)["error"]["type"] == "invalid-input");
    CHECK_FALSE(report_of(bad_json).contains("result"));

    auto hypothesis = run_cli(R"(count average --shape '{"lambda":[2,1]}' --m 2)");
    CHECK(hypothesis.code == 2);
    CHECK(report_of(hypothesis)["error"]["type"] == "hypothesis-violation");

    auto limit = run_cli(R"(shape syt-count --shape '{"lambda":[4,3,2,1]}')");
    CHECK(limit.code == 3);
    CHECK(report_of(limit)["error"]["type"] == "oracle-limit");

    auto lifted = run_cli(R"(shape syt-count --shape '{"lambda":[4,3,2,1]}' --bound 10)");
    CHECK(lifted.code == 0);
    CHECK(report_of(lifted)["result"] == "768");

    auto missing = run_cli("marriage");
    CHECK(missing.code == 2);
    CHECK(report_of(missing)["error"]["type"] == "invalid-input");

    auto conflict = run_cli(
        R"(marriage --family '{"n":1,"members":[[1]]}' --shape '{"lambda":[1]}')");
    CHECK(conflict.code == 2);

    auto unknown_suite = run_cli("verify no-such-suite");
    CHECK(unknown_suite.code == 2);
    CHECK(report_of(unknown_suite)["error"]["type"] == "invalid-input");

    auto usage = run_cli("frobnicate");
    CHECK(usage.code == 2);
    CHECK(report_of(usage)["error"]["type"] == "usage");
}

TEST_CASE("cli output is canonical json or csv on request") {
    auto j = run_cli("count stirling --n 3 --m 2");
    std::string text = j.out;
    if (!text.empty() && text.back() == '\n') text.pop_back();
    CHECK(halltab::parse_json(text).dump(2) == text);

    auto csv = run_cli("count stirling --n 3 --m 2 --format csv");
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("key,value\n", 0) == 0);
    CHECK(csv.out.find("command,count stirling\n") != std::string::npos);
    CHECK(csv.out.find("result,3\n") != std::string::npos);
    CHECK(csv.out.find("inputs.n,3\n") != std::string::npos);
}
