#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <json.hpp>

#include "support.hpp"

using namespace testing_support;

namespace {

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(const std::string& args) {
    std::string cmd = std::string(DELTALF_CLI) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) throw std::runtime_error("popen failed");
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string q(const std::string& path) { return "'" + path + "'"; }

TEST(Cli, FixtureExitCodes) {
    struct Case {
        const char* file;
        int code;
    } cases[] = {
        {"valid_basic.dlf", 0},
        {"valid_load.dlf", 0},
        {"ill_typed_pair.dlf", 1},
        {"ill_typed_conv.dlf", 1},
        {"ill_typed_is0_branch_order.dlf", 1},
        {"ill_typed_relevant.dlf", 1},
        {"ill_typed_then_unparsable.dlf", 1},
        {"unparsable_missing_dot.dlf", 2},
        {"unparsable_comment.dlf", 2},
        {"unparsable_binder.dlf", 2},
        {"fuel_eval.dlf", 3},
        {"fuel_essence.dlf", 3},
        {"does_not_exist.dlf", 2},
    };
    for (auto& c : cases) {
        CliRun r = cli("check " + q(fixture(c.file)));
        EXPECT_EQ(r.code, c.code) << c.file << "\n" << r.out;
    }
}

TEST(Cli, CorpusChecks) {
    for (auto& f : corpus_files()) {
        CliRun r = cli("check " + q(corpus(f)));
        EXPECT_EQ(r.code, 0) << f << "\n" << r.out;
    }
}

TEST(Cli, FirstFailureDecidesExitCode) {
    CliRun r = cli("check " + q(fixture("valid_basic.dlf")) + " " + q(fixture("ill_typed_pair.dlf")) + " " +
                   q(fixture("unparsable_binder.dlf")));
    EXPECT_EQ(r.code, 1);
}

TEST(Cli, Eval) {
    CliRun r = cli("eval -e '(fun x : s => x) c'");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "c\n");
    EXPECT_EQ(cli("eval -e '(fun x : s => x'").code, 2);
}

TEST(Cli, JsonErrors) {
    CliRun r = cli("--json check " + q(fixture("ill_typed_pair.dlf")));
    EXPECT_EQ(r.code, 1);
    std::string last;
    std::stringstream ss(r.out);
    for (std::string line; std::getline(ss, line);)
        if (!line.empty() && line[0] == '{') last = line;
    ASSERT_FALSE(last.empty()) << r.out;
    auto j = nlohmann::json::parse(last);
    EXPECT_EQ(j["rule"], "InterI");
    EXPECT_TRUE(j.contains("span") && j.contains("message") && j.contains("expected") && j.contains("actual"));
}

TEST(Cli, TraceAndCoercion) {
    CliRun r = cli("--trace check " + q(corpus("pierce.dlf")));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("beta"), std::string::npos) << r.out;
    r = cli("--emit-coercion check " + q(corpus("union_commutativity.dlf")));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("sfun"), std::string::npos) << r.out;
}

TEST(Cli, Repl) {
    CliRun r = cli("repl < " + q(fixture("valid_basic.dlf")));
    EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, Metacheck) {
    CliRun r = cli("metacheck --seeds 20 --size 20");
    EXPECT_NE(r.out.find("subject reduction"), std::string::npos) << r.out;
    EXPECT_TRUE(r.code == 0 || r.code == 1);
}

TEST(Cli, BadArguments) {
    EXPECT_EQ(cli("--fuel notanumber check x.dlf").code, 2);
    EXPECT_EQ(cli("frobnicate").code, 2);
}

}  // namespace
