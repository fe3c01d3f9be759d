#include "commands.hpp"

#include <json.hpp>

#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;

    nlohmann::ordered_json json() const { return nlohmann::ordered_json::parse(out); }
};

Outcome run_cli(std::vector<std::string> args, const std::string &input = "")
{
    args.insert(args.begin(), "pendant_tc");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    Outcome o;
    o.code = pendant_tc::cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

const std::string kData = PENDANT_TC_TEST_DATA;

} // namespace

TEST_CASE("compute on a family")
{
    const auto o = run_cli({"compute", "--family", "K_6", "--k", "3"});
    REQUIRE(o.code == 0);
    const auto j = o.json();
    CHECK(j.begin().key() == "schema");
    CHECK(j.at("schema") == 1);
    CHECK(j.at("tool") == "pendant_tc");
    CHECK(j.at("version") == "0.1.0");
    CHECK(std::prev(j.end()).key() == "timing");
    CHECK(j.at("command").at(0) == "compute");
    CHECK(j.at("records").at(0).at("tau") == 3);
}

TEST_CASE("compute with a terminal set and a witness")
{
    const auto o = run_cli({"compute", "--family", "W_6", "--set", "0,2,4", "--witness"});
    REQUIRE(o.code == 0);
    const auto rec = o.json().at("records").at(0);
    CHECK(rec.at("tau") == 1);
    CHECK(rec.at("witness_check").at("accepted") == true);
}

TEST_CASE("compute reads graph6 from stdin")
{
    const auto o = run_cli({"compute", "--graph", "-", "--k", "3"}, "# comment\nE???\nE~~w\n");
    REQUIRE(o.code == 0);
    const auto recs = o.json().at("records");
    REQUIRE(recs.size() == 2);
    CHECK(recs.at(1).at("tau") == 3);
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"bogus"}).code == 2);
    CHECK(run_cli({"compute", "--family", "K_6", "--k", "2", "--set", "0,1,2"}).code == 2);
    CHECK(run_cli({"compute", "--family", "K_6", "--graph", "-", "--k", "3"}).code == 2);
    CHECK(run_cli({"compute", "--family", "K_6"}).code == 2);
    CHECK(run_cli({"compute", "--family", "X_6", "--k", "3"}).code == 2);
    CHECK(run_cli({"compute", "--family", "K_6", "--k", "3", "--format", "xml"}).code == 2);
    CHECK(run_cli({"compute", "--graph", kData + "/missing.g6", "--k", "3"}).code == 2);
    CHECK(run_cli({"compute", "--family", "K_30", "--k", "3"}).code == 2);
    CHECK(run_cli({"--version"}).code == 0);
}

TEST_CASE("budget exhaustion exits with 3")
{
    const auto o = run_cli({"compute", "--family", "K_9", "--k", "3", "--budget", "5"});
    CHECK(o.code == 3);
    CHECK(o.err.find("budget") != std::string::npos);
}

TEST_CASE("the budget environment variable is validated")
{
    ::setenv("PENDANT_TC_BUDGET", "abc", 1);
    CHECK(run_cli({"compute", "--family", "K_5", "--k", "3"}).code == 2);
    ::setenv("PENDANT_TC_BUDGET", "5", 1);
    CHECK(run_cli({"compute", "--family", "K_9", "--k", "3"}).code == 3);
    ::unsetenv("PENDANT_TC_BUDGET");
    CHECK(pendant_tc::cli::default_budget() > 0);
}

TEST_CASE("family comparison")
{
    auto o = run_cli({"family", "--family", "K_{3,3}", "--k", "3", "--compare-formula"});
    REQUIRE(o.code == 0);
    CHECK(o.json().at("records").at(0).at("formula").at("status") == "match");
    o = run_cli({"family", "--family", "K_{3,3,3}", "--k", "3", "--compare-formula"});
    REQUIRE(o.code == 0);
    CHECK(o.json().at("records").at(0).at("tau") == 3);
    CHECK(o.json().at("records").at(0).at("formula").at("status") == "tight");
    o = run_cli({"family", "--family", "threshold:iidd", "--k", "3", "--compare-formula"});
    REQUIRE(o.code == 0);
    CHECK(o.json().at("records").at(0).at("formula").at("status") == "match");
    o = run_cli({"family", "--family", "C_6", "--k", "3", "--compare-formula"});
    CHECK(o.code == 0);
}

TEST_CASE("scan is deterministic across worker counts")
{
    const std::string file = kData + "/connected_n6.g6";
    const auto one = run_cli({"scan", "--graphs", file, "--k", "3", "--check", "thm4,thm7,ng", "--jobs", "1"});
    const auto two = run_cli({"scan", "--graphs", file, "--k", "3", "--check", "thm4,thm7,ng", "--jobs", "2"});
    REQUIRE(one.code == 0);
    REQUIRE(two.code == 0);
    CHECK(one.json().at("records") == two.json().at("records"));
    CHECK(one.json().at("summary") == two.json().at("summary"));
    CHECK(one.json().at("summary").at("graphs") == 112);
}

TEST_CASE("scan skips malformed lines and reports them")
{
    const auto o = run_cli({"scan", "--graphs", "-", "--k", "3", "--check", "thm4"}, "E???\nnot graph6\n\nE~~w\n");
    CHECK(o.code == 0);
    const auto s = o.json().at("summary");
    CHECK(s.at("graphs") == 2);
    CHECK(s.at("malformed") == 1);
    CHECK(s.at("malformed_lines").at(0).at("line") == 2);
    CHECK(o.err.find("line 2") != std::string::npos);
}

TEST_CASE("scan flags failing predictions with exit 1")
{
    // K_6 minus an edge: the near-n sum statement fails at k = n - 2.
    const auto o = run_cli({"scan", "--graphs", "-", "--k", "3", "--check", "corollaries"}, "E^~w\n");
    CHECK(o.code == 1);
    CHECK(o.json().at("summary").at("failing_lines").at(0) == 1);
}

TEST_CASE("scan writes CSV")
{
    const auto o = run_cli({"scan", "--graphs", "-", "--k", "3", "--check", "thm4", "--format", "csv"}, "E~~w\n");
    REQUIRE(o.code == 0);
    CHECK(o.out.rfind("line,graph6,n,k,check,applicable,predicted,solver,agree,advisory,evidence\n", 0) == 0);
    CHECK(o.out.find("\n1,E~~w,6,3,thm4,1,3,3,1,0,") != std::string::npos);
}

TEST_CASE("scan rejects unknown options")
{
    CHECK(run_cli({"scan", "--graphs", "-", "--k", "3", "--check", "thm9"}).code == 2);
    CHECK(run_cli({"scan", "--graphs", "-", "--k", "3", "--host-reading", "other"}).code == 2);
    CHECK(run_cli({"scan", "--graphs", "-", "--k", "3", "--jobs", "0"}).code == 2);
}

TEST_CASE("scan of all connected seven-vertex graphs")
{
    const auto o = run_cli({"scan", "--graphs", kData + "/connected_n7.g6", "--k", "3", "--check", "thm4,thm5,ng"});
    REQUIRE(o.code == 0);
    const auto checks = o.json().at("summary").at("checks");
    CHECK(checks.at("thm4").at("in_class") == 1);
    CHECK(checks.at("thm4").at("disagree") == 0);
    CHECK(checks.at("thm5").at("in_class") == 2);
    CHECK(checks.at("thm5").at("disagree") == 0);
    CHECK(checks.at("ng-sum").at("disagree") == 0);
    for (const auto &rec : o.json().at("records"))
        CHECK(rec.at("ng").at("sum") <= 4);
}
