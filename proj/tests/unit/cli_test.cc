// Copyright 2026 The qtmlab Authors
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


#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.h"
#include "json.hpp"
#include "qtm/classical.h"

namespace {

using nlohmann::ordered_json;

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "qtmlab");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    int code = qtmlab::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string &name) {
    return qtm::testing::fixture_path(name);
}

std::filesystem::path temp_file(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("qtmlab_cli_test_" + name);
}

std::string slurp(const std::filesystem::path &path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

TEST(Cli, CheckViolationExitsWithFinding) {
    Invocation r = invoke({"check", fixture("coin_naive.qtm")});
    EXPECT_EQ(r.code, qtmlab::kExitFinding);
    ordered_json doc = ordered_json::parse(r.out);
    EXPECT_EQ(doc["result"]["verdict"], "violation");
    EXPECT_EQ(doc["result"]["witnesses"][0]["inner_product"]["text"], "1/sqrt(2)");
}

TEST(Cli, CheckWellFormedExitsOk) {
    Invocation r = invoke({"check", fixture("hadamard_walker.qtm")});
    EXPECT_EQ(r.code, qtmlab::kExitOk) << r.err;
    EXPECT_EQ(ordered_json::parse(r.out)["result"]["verdict"], "well_formed");
}

TEST(Cli, JsonToFile) {
    auto path = temp_file("check.json");
    std::filesystem::remove(path);
    Invocation r = invoke({"check", fixture("coin_naive.qtm"), "--json", path.string()});
    EXPECT_EQ(r.code, qtmlab::kExitFinding);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(ordered_json::parse(slurp(path))["tool"], "qtmlab");
    std::filesystem::remove(path);
}

TEST(Cli, ErrorsExitWithOne) {
    EXPECT_EQ(invoke({"run", fixture("coin_corrected.qtm"), "--input", "2:x", "--steps", "1"}).code,
              qtmlab::kExitError);
    EXPECT_EQ(invoke({"check", fixture("does_not_exist.qtm")}).code, qtmlab::kExitError);
    EXPECT_EQ(invoke({"frobnicate"}).code, qtmlab::kExitError);
    EXPECT_EQ(invoke({"run", fixture("coin_corrected.qtm"), "--input", "0"}).code, qtmlab::kExitError);
    Invocation bad = invoke({"check", fixture("incrementer.tm")});
    EXPECT_EQ(bad.code, qtmlab::kExitError);
    EXPECT_NE(bad.err.find("qtmlab: "), std::string::npos);
    EXPECT_NE(bad.err.find("incrementer.tm:2:1:"), std::string::npos) << bad.err;
}

TEST(Cli, HelpExitsOk) {
    EXPECT_EQ(invoke({"--help"}).code, qtmlab::kExitOk);
}

TEST(Cli, RunAndCompare) {
    Invocation run = invoke({"run", fixture("coin_corrected.qtm"), "--input", "0", "--steps", "6"});
    EXPECT_EQ(run.code, qtmlab::kExitOk) << run.err;
    Invocation cmp = invoke({"compare", fixture("incrementer.qtm"), "--input", "111", "--steps", "20", "--schedules",
                             "every,end"});
    EXPECT_EQ(cmp.code, qtmlab::kExitOk) << cmp.err;
    EXPECT_TRUE(ordered_json::parse(cmp.out)["result"]["equivalent"].get<bool>());
    Invocation differ = invoke({"compare", fixture("two_time_coin.qtm"), "--input", "01", "--steps", "6",
                                "--schedules", "at:2,end"});
    EXPECT_EQ(differ.code, qtmlab::kExitFinding) << differ.err;
}

TEST(Cli, NaiveCoinRunRaisesNormAudit) {
    Invocation r = invoke({"run", fixture("coin_naive.qtm"), "--input", "1/sqrt(2):0 + 1/sqrt(2):1", "--steps", "3"});
    EXPECT_EQ(r.code, qtmlab::kExitFinding) << r.err;
    EXPECT_TRUE(ordered_json::parse(r.out)["result"]["norm_audit_flag"].get<bool>());
}

TEST(Cli, SampleIsReproducible) {
    std::vector<std::string> args = {"sample", fixture("coin_corrected.qtm"), "--input", "0", "--steps", "8",
                                     "--schedule", "every", "--seed", "3", "--samples", "200"};
    Invocation a = invoke(args);
    Invocation b = invoke(args);
    EXPECT_EQ(a.code, qtmlab::kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, TraceCsv) {
    Invocation r = invoke({"trace", fixture("hadamard_walker.qtm"), "--input", "0", "--steps", "3"});
    EXPECT_EQ(r.code, qtmlab::kExitOk) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        ++count;
    }
    EXPECT_EQ(count, 5);  // header plus steps 0..3
}

TEST(Cli, LiftWritesTheCommittedFixture) {
    auto path = temp_file("parity.qtm");
    Invocation r = invoke({"lift", fixture("parity.tm"), "-o", path.string()});
    EXPECT_EQ(r.code, qtmlab::kExitOk) << r.err;
    EXPECT_EQ(slurp(path), qtm::testing::read_fixture("parity.qtm"));
    std::filesystem::remove(path);
}

TEST(Cli, LiftRejectsMergingMachine) {
    auto path = temp_file("merge.qtm");
    std::filesystem::remove(path);
    Invocation r = invoke({"lift", fixture("merge.tm"), "-o", path.string()});
    EXPECT_EQ(r.code, qtmlab::kExitFinding);
    EXPECT_NE(r.err.find("both step to"), std::string::npos) << r.err;
    EXPECT_FALSE(std::filesystem::exists(path));
}

TEST(Cli, MyersAndSubspaceFindings) {
    Invocation m = invoke({"myers", fixture("complement.qtm"), "--input-a", "0", "--input-b", "0000", "--steps", "8"});
    EXPECT_EQ(m.code, qtmlab::kExitFinding) << m.err;
    EXPECT_EQ(ordered_json::parse(m.out)["result"]["window"], ordered_json::array({2, 4}));
    Invocation same = invoke({"myers", fixture("complement.qtm"), "--input-a", "0", "--input-b", "0", "--steps", "8"});
    EXPECT_EQ(same.code, qtmlab::kExitOk) << same.err;
    Invocation s = invoke({"subspace", fixture("coin_corrected.qtm"), "--input", "0", "--steps", "3"});
    EXPECT_EQ(s.code, qtmlab::kExitFinding) << s.err;
    Invocation none = invoke({"subspace", fixture("right_shift.qtm"), "--input", "1", "--steps", "3"});
    EXPECT_EQ(none.code, qtmlab::kExitOk) << none.err;
}

}  // namespace
