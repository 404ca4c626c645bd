/*
   Copyright 2026 The fqt Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

namespace {

struct CliRun {
    int status;
    std::string out;
};

CliRun run(const std::string& args) {
    const std::string cmd = std::string(FQT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Cli, RamifyJson) {
    const CliRun r = run("ramify --field F3 --form \"<<T; 1]]\" --json");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["delta"], nlohmann::json::array({"(T)", "inf"}));
    EXPECT_EQ(j["form"]["a"], "T");
}

TEST(Cli, ReciprocityReportSchema) {
    const CliRun r = run("reciprocity-check --field F5 --form \"<<T; 1/(T+1)]]\" --json");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    for (const char* key : {"form", "delta", "residues", "sum"}) EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["sum"], 0);
    int ones = 0;
    for (const auto& row : j["residues"]) ones += row["bit"].get<int>();
    EXPECT_EQ(static_cast<std::size_t>(ones), j["delta"].size());
}

TEST(Cli, RealizeExitCodes) {
    const CliRun ok = run("realize --field F5 --places \"(T),(T+1)\" --json");
    ASSERT_EQ(ok.status, 0);
    const auto j = nlohmann::json::parse(ok.out);
    EXPECT_TRUE(j["verified"].get<bool>());
    EXPECT_EQ(j["delta"], nlohmann::json::array({"(T)", "(T+1)"}));
    EXPECT_EQ(run("realize --field F5 --places \"(T)\"").status, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("ramify --field F6 --form \"<<T; 1]]\"").status, 2);
    EXPECT_EQ(run("ramify --field F3 --form \"<<T, 1]]\"").status, 2);
    EXPECT_EQ(run("ramify --form \"<<T; 1]]\"").status, 2);
    EXPECT_EQ(run("stratum --field F3 --S \"(T),inf\" --w \"(T+1)\"").status, 2);
    EXPECT_EQ(run("residue --field F3 --form \"<<T; 1]]\" --place \"T^2+2\"").status, 2);
}

TEST(Cli, ReportsReplayByteForByte) {
    for (const std::string args : {"sintegers-check --field F5 --S inf --samples 60 --seed 7 --json",
                                   "jacoblem --field F5 --identity 2 --S \"(T)\" --c \"1/T^2\" --samples 40 --seed 3 --json",
                                   "stratum --field F3 --S \"(T),inf,(T+1)\" --w \"(T^2+1)\" --json"}) {
        const CliRun a = run(args), b = run(args);
        EXPECT_EQ(a.status, 0) << args;
        EXPECT_EQ(a.out, b.out) << args;
        EXPECT_FALSE(a.out.empty());
    }
}
