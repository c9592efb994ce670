// Copyright 2026 The rqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct Result {
    int status;
    std::string out;
};

Result rqc(const std::string &args) {
    std::string cmd = std::string(RQC_BINARY) + " " + args + " 2>/dev/null";
    FILE *p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("rqc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }
    std::string path(const char *name) const { return (dir_ / name).string(); }
    std::filesystem::path dir_;
};

}  // namespace

TEST_F(Cli, BuildWritesDeterministicFiles) {
    ASSERT_EQ(rqc("build --cipher saes --key ffff --plaintext ffff --out " + path("a.rqc")).status, 0);
    ASSERT_EQ(rqc("build --cipher saes --key ffff --plaintext ffff --out " + path("b.rqc")).status, 0);
    std::string a = slurp(path("a.rqc"));
    EXPECT_TRUE(a.starts_with("rqc 1\nwires 48\n"));
    EXPECT_EQ(a, slurp(path("b.rqc")));
    ASSERT_EQ(rqc("build --cipher aes128 --key 000102030405060708090a0b0c0d0e0f --plaintext "
                  "00112233445566778899aabbccddeeff --out " + path("c.rqc")).status, 0);
    EXPECT_TRUE(slurp(path("c.rqc")).starts_with("rqc 1\nwires 656\n"));
}

TEST_F(Cli, SimulateCipherAndFile) {
    auto r = rqc("simulate --cipher saes --key a73b --plaintext 6f6b");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "0738\n");
    r = rqc("simulate --cipher aes128 --key 000102030405060708090a0b0c0d0e0f --plaintext 00112233445566778899aabbccddeeff");
    EXPECT_EQ(r.out, "69c4e0d86a7b0430d8cdb78070b4c55a\n");
    r = rqc("simulate --cipher aes128 --key 00000000000000000000000000000000 --plaintext 00000000000000000000000000000000");
    EXPECT_EQ(r.out, "66e94bd4ef8a2c3b884cfa59ca342b2e\n");
    ASSERT_EQ(rqc("build --cipher saes --key a73b --plaintext 6f6b --out " + path("s.rqc")).status, 0);
    r = rqc("simulate " + path("s.rqc"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "0738\n");
}

TEST_F(Cli, StatsJson) {
    auto r = rqc("stats --cipher saes --format json");
    ASSERT_EQ(r.status, 0);
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["schema"], "rqc-stats/1");
    EXPECT_EQ(doc["report"]["toffoli"], 168);
    EXPECT_EQ(doc["report"]["not"], 75);

    doc = nlohmann::json::parse(rqc("stats --cipher aes128 --format json").out);
    EXPECT_EQ(doc["report"]["toffoli"], 18040);
    EXPECT_TRUE(doc["discrepancy"]["flag"].get<bool>());
    EXPECT_EQ(doc["discrepancy"]["derived_per_op"], 123964);
    EXPECT_EQ(doc["discrepancy"]["printed_total"], 101174);

    doc = nlohmann::json::parse(rqc("stats --cipher aes128 --schedule new-zigzag-estimate --format json").out);
    EXPECT_EQ(doc["report"]["toffoli"], 19064);
    EXPECT_EQ(doc["report"]["cnot"], 118980);
}

TEST_F(Cli, StatsOfFile) {
    ASSERT_EQ(rqc("build --cipher saes --key ffff --plaintext ffff --out " + path("s.rqc")).status, 0);
    auto doc = nlohmann::json::parse(rqc("stats " + path("s.rqc") + " --format json").out);
    EXPECT_EQ(doc["report"]["wires"], 48);
    EXPECT_EQ(doc["report"]["toffoli"], 168);
}

TEST_F(Cli, VerifyIsSeeded) {
    auto a = rqc("verify --cipher saes --trials 200 --seed 3");
    EXPECT_EQ(a.status, 0);
    EXPECT_NE(a.out.find("PASS"), std::string::npos);
    EXPECT_EQ(a.out, rqc("verify --cipher saes --trials 200 --seed 3 --threads 1").out);
    EXPECT_EQ(rqc("verify --cipher aes128 --trials 3 --seed 3").status, 0);
    EXPECT_EQ(rqc("verify --cipher saes --trials 0").status, 2);
}

TEST_F(Cli, ExportFormats) {
    ASSERT_EQ(rqc("build --cipher saes --key 1234 --plaintext abcd --out " + path("s.rqc")).status, 0);
    auto r = rqc("export " + path("s.rqc") + " --format rqc");
    EXPECT_EQ(r.out, slurp(path("s.rqc")));
    r = rqc("export " + path("s.rqc") + " --format qasm");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.starts_with("OPENQASM 2.0;\n"));
    EXPECT_NE(r.out.find("qreg q[48];"), std::string::npos);
    EXPECT_EQ(rqc("export " + path("s.rqc") + " --format svg").status, 2);
}

TEST_F(Cli, TruthTables) {
    auto r = rqc("truth-table aes-sbox");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("00 -> 63"), std::string::npos);
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    EXPECT_NE(rqc("truth-table gf16inv").out.find("x=0000 -> y=0000"), std::string::npos);
    EXPECT_NE(rqc("truth-table basis").out.find("0111\n0101\n1001\n0011\n"), std::string::npos);
    EXPECT_EQ(rqc("truth-table nope").status, 2);
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(rqc("").status, 2);
    EXPECT_EQ(rqc("frobnicate").status, 2);
    EXPECT_EQ(rqc("build --cipher saes --key fff --plaintext ffff").status, 2);
    EXPECT_EQ(rqc("build --cipher saes --key zzzz --plaintext ffff").status, 2);
    EXPECT_EQ(rqc("build --cipher des --key ffff --plaintext ffff").status, 2);
    EXPECT_EQ(rqc("build --cipher saes --key ffff --plaintext ffff --out /nonexistent-dir/x.rqc").status, 2);
    std::ofstream(path("bad.rqc")) << "rqc 1\nwires 2\ncx 0 0\n";
    EXPECT_EQ(rqc("simulate " + path("bad.rqc")).status, 2);
    EXPECT_EQ(rqc("stats --cipher aes128 --schedule fancy").status, 2);
}
