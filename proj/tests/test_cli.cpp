#include <sbcoinv/cli.hpp>

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sbcoinv;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "verify");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, IdentityPasses) {
    CliRun r = cli({"--suite", "identity", "--n", "8"});
    EXPECT_EQ(r.code, kExitPass) << r.out << r.err;
    EXPECT_NE(r.out.find("ok"), std::string::npos);
}

TEST(Cli, HilbertShowsSeries) {
    CliRun r = cli({"--suite", "hilbert", "--n", "1"});
    EXPECT_EQ(r.code, kExitPass) << r.out;
    EXPECT_NE(r.out.find("1 + q + z"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(cli({"--suite", "nonsense", "--n", "2"}).code, kExitUsage);
    EXPECT_EQ(cli({"--n", "2"}).code, kExitUsage);
    EXPECT_EQ(cli({"--suite", "identity", "--n", "0"}).code, kExitUsage);
    EXPECT_EQ(cli({"--suite", "identity", "--n", "x"}).code, kExitUsage);
    EXPECT_EQ(cli({"--suite", "identity", "--n", "2", "--format", "xml"}).code, kExitUsage);
    EXPECT_EQ(cli({"--help"}).code, kExitPass);
}

TEST(Cli, OverBoundRefused) {
    CliRun r = cli({"--suite", "hilbert", "--n", "4"});
    EXPECT_EQ(r.code, kExitOverBound);
    EXPECT_NE(r.err.find("refusing n=4"), std::string::npos);
    EXPECT_NE(r.err.find("--long"), std::string::npos);
    EXPECT_EQ(cli({"--suite", "identity", "--n", "9"}).code, kExitOverBound);
    EXPECT_EQ(cli({"--suite", "saito", "--n", "5"}).code, kExitOverBound);
    EXPECT_EQ(cli({"--suite", "mbasis", "--n", "5", "--long"}).code, kExitOverBound);
    EXPECT_EQ(cli({"series", "--n", "5"}).code, kExitOverBound);
}

TEST(Cli, Bounds) {
    EXPECT_EQ(suite_bound("identity", false), 8);
    for (const char* s : {"saito", "regular", "leading"}) EXPECT_EQ(suite_bound(s, false), 4);
    for (const char* s : {"hilbert", "operator", "colon", "mbasis", "stbasis", "all"}) {
        EXPECT_EQ(suite_bound(s, false), 3);
        EXPECT_EQ(suite_bound(s, true), 4);
    }
}

TEST(Cli, FailingReportExitsOne) {
    Report r{"hilbert", 2, {{"a", Status::pass, "", 0}, {"b", Status::note, "seen", 0}}};
    EXPECT_EQ(exit_code_for(r), kExitPass);
    r.checks.push_back({"c", Status::fail, "J={1} i=2: x1^2", 0});
    EXPECT_EQ(exit_code_for(r), kExitCheckFailed);
    std::string text = render(r, Format::text);
    EXPECT_NE(text.find("[fail] c (0 ms): J={1} i=2: x1^2"), std::string::npos) << text;
    EXPECT_NE(text.find("FAILED"), std::string::npos);
}

TEST(Cli, JsonSchema) {
    CliRun r = cli({"--suite", "saito", "--n", "2", "--format", "json"});
    ASSERT_EQ(r.code, kExitPass) << r.out;
    auto j = nlohmann::ordered_json::parse(r.out);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"suite", "n", "checks", "ok"}));
    EXPECT_EQ(j["suite"], "saito");
    EXPECT_EQ(j["n"], 2);
    EXPECT_EQ(j["ok"], true);
    ASSERT_FALSE(j["checks"].empty());
    for (const auto& c : j["checks"]) {
        std::vector<std::string> ck;
        for (auto it = c.begin(); it != c.end(); ++it) ck.push_back(it.key());
        EXPECT_EQ(ck, (std::vector<std::string>{"name", "status", "witness", "ms"}));
    }
}

TEST(Cli, DeterministicWithoutTiming) {
    CliRun a = cli({"--suite", "all", "--n", "2", "--no-timing", "--seed", "7"});
    CliRun b = cli({"--suite", "all", "--n", "2", "--no-timing", "--seed", "7", "--jobs", "4"});
    ASSERT_EQ(a.code, kExitPass) << a.out;
    EXPECT_EQ(a.out, b.out);
    CliRun c = cli({"--suite", "operator", "--n", "2", "--no-timing", "--format", "json", "--jobs", "0"});
    CliRun d = cli({"--suite", "operator", "--n", "2", "--no-timing", "--format", "json"});
    EXPECT_EQ(c.out, d.out);
}

TEST(Cli, WritesOutFile) {
    auto path = std::filesystem::temp_directory_path() / "sbcoinv_cli_report.json";
    std::filesystem::remove(path);
    CliRun r = cli({"--suite", "identity", "--n", "3", "--format", "json", "--out", path.string()});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    EXPECT_EQ(nlohmann::json::parse(buf.str())["ok"], true);
    std::filesystem::remove(path);
    EXPECT_EQ(cli({"--suite", "identity", "--n", "3", "--out", "/nonexistent-dir/x.txt"}).code, kExitUsage);
}

TEST(Series, TextAndJson) {
    CliRun t = cli({"series", "--n", "1"});
    EXPECT_EQ(t.code, kExitPass);
    EXPECT_EQ(t.out, "closed: 1 + q + z\n");
    CliRun j = cli({"series", "--n", "2", "--format", "json", "--brute"});
    EXPECT_EQ(j.code, kExitPass) << j.out;
    auto doc = nlohmann::json::parse(j.out);
    EXPECT_EQ(doc["closed"]["0,0"], 1);
    EXPECT_EQ(doc["closed"]["0,2"], 1);
    EXPECT_EQ(doc["match"], true);
    EXPECT_EQ(doc["closed"], doc["brute"]);
}

TEST(Series, InjectedFaultListsFirstDifference) {
    BiSeries closed = closed_hilbert(2);
    BiSeries broken = closed;
    broken.add(2, 1, 1);
    std::string text = emit_hilbert(2, closed, broken, Format::text);
    EXPECT_NE(text.find("differ at (d,k)=(2,1)"), std::string::npos) << text;
    auto doc = nlohmann::json::parse(emit_hilbert(2, closed, broken, Format::json));
    EXPECT_EQ(doc["match"], false);
    EXPECT_EQ(doc["first_difference"], "2,1");
}

TEST(Binary, ExitCodes) {
    const std::string bin = VERIFY_BINARY;
    auto status = [&](const std::string& args) {
        int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(raw);
    };
    EXPECT_EQ(status("--suite identity --n 4"), 0);
    EXPECT_EQ(status("--suite bogus --n 2"), 2);
    EXPECT_EQ(status("--suite colon --n 4"), 3);
}
