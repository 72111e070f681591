#include <json.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef JUMPSTAT_CLI_PATH
#error "JUMPSTAT_CLI_PATH must point at the jumpstat executable"
#endif

namespace {

struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun run(const std::string& args) {
    const std::string command = std::string(JUMPSTAT_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

nlohmann::json json_of(const CliRun& r) { return nlohmann::json::parse(r.out); }

TEST(Cli, Stats) {
    const CliRun leaf = run("stats .");
    ASSERT_EQ(leaf.exit_code, 0);
    EXPECT_EQ(json_of(leaf), nlohmann::json::parse(R"({"v":0,"j":0,"d":0,"jd":0})"));
    EXPECT_EQ(json_of(run("stats '[[.,.],[.,.]]'")),
              nlohmann::json::parse(R"({"v":3,"j":1,"d":2,"jd":1})"));
    EXPECT_EQ(json_of(run("stats '[.,[.,[.,.]]]'")),
              nlohmann::json::parse(R"({"v":3,"j":0,"d":3,"jd":0})"));
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("stats '[.,'").exit_code, 2);
    EXPECT_EQ(run("stats '[.,[.,.]]' --max-size 1").exit_code, 3);
    EXPECT_EQ(run("enumerate 40").exit_code, 3);
    EXPECT_EQ(run("verify 9").exit_code, 2);
    EXPECT_EQ(run("frobnicate").exit_code, 2);
    EXPECT_EQ(run("moments depth").exit_code, 2);
}

TEST(Cli, Enumerate) {
    const auto j = json_of(run("enumerate 3 --list"));
    EXPECT_EQ(j["count"], 5);
    EXPECT_EQ(j["catalan"], "5");
    EXPECT_EQ(j["trees"][2], "[[.,.],[.,.]]");
}

TEST(Cli, Verify) {
    for (const char* args : {"verify 0 --order 30", "verify 2 --order 20", "verify 6 --order 40"}) {
        const CliRun r = run(args);
        EXPECT_EQ(r.exit_code, 0) << args;
        EXPECT_TRUE(json_of(r)["pass"].get<bool>()) << args;
    }
}

TEST(Cli, MomentsJson) {
    const auto jumps = json_of(run("moments jumps -R 2 --nmax 3"));
    EXPECT_EQ(jumps["rows"][3]["raw"][0], "1");
    EXPECT_EQ(jumps["rows"][3]["central"][0], "2/5");
    EXPECT_EQ(jumps["rows"][1]["central"][0], "0");
    EXPECT_FALSE(jumps["rows"][1]["scaled_defined"].get<bool>());
    const auto jd = json_of(run("moments jumpdist -R 2 --nmax 2"));
    EXPECT_EQ(jd["rows"][2]["raw"][0], "1/2");
    EXPECT_EQ(jd["rows"][2]["central"][0], "1/4");
}

TEST(Cli, MomentsCheckAndCsv) {
    const CliRun r = run("moments jumps -R 4 --nmax 20 --check");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(json_of(r)["checks"].size(), 3u);
    const CliRun csv = run("moments jumpdist -R 2 --nmax 2 --format csv");
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "n,b_n,m_1,m_2,mu_2,s_2");
}

TEST(Cli, Guess) {
    const CliRun r = run("guess jumps --moment kurtosis --nmax 30 --max-degree 10");
    ASSERT_EQ(r.exit_code, 0);
    const auto j = json_of(r);
    EXPECT_TRUE(j["found"].get<bool>());
    EXPECT_EQ(j["formula"]["text"], "(6*n^3-11*n^2-2*n+3)/(2*n^3-3*n^2-2*n+3)");
    EXPECT_EQ(j["limit"]["value"], "3");
}

TEST(Cli, GuessFailureReportsAttempts) {
    const CliRun r = run("guess jumpdist --moment kurtosis --nmax 20 --max-degree 4");
    EXPECT_EQ(r.exit_code, 1);
    const auto j = json_of(r);
    EXPECT_FALSE(j["found"].get<bool>());
    EXPECT_EQ(j["attempted"]["max_total_degree"], 4);
}

TEST(Cli, IsDeterministic) {
    EXPECT_EQ(run("series K --order 8").out, run("series K --order 8").out);
}

}  // namespace
