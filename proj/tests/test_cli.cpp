// Copyright 2026 The sicfid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the sicfid binary end to end.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SICFID_BINARY
#error "SICFID_BINARY must point at the CLI"
#endif

namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("sicfid_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // Exit status of the command; stdout goes to out.txt.
  int run(const std::string& args) {
    std::string cmd = std::string(SICFID_BINARY) + " " + args + " > " + path("out.txt") + " 2> " + path("err.txt");
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  }

  std::string slurp(const std::string& name) const {
    std::ifstream in(path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

TEST_F(Cli, BuildThenVerify) {
  ASSERT_EQ(run("build --fiducial 5a --precision 60 --out " + path("v.txt")), 0);
  EXPECT_EQ(run("verify --in " + path("v.txt")), 0);
  std::string out = slurp("out.txt");
  EXPECT_NE(out.find("result: PASS"), std::string::npos);
  EXPECT_NE(out.find("checked: 24"), std::string::npos);
  EXPECT_EQ(run("verify --reduce --in " + path("v.txt")), 0);
  EXPECT_NE(slurp("out.txt").find("checked: 4"), std::string::npos);
}

TEST_F(Cli, VerifyFailsOnNonSic) {
  std::ofstream(path("e0.txt")) << "# dim=5 precision=30\n1 0\n0 0\n0 0\n0 0\n0 0\n";
  EXPECT_EQ(run("verify --in " + path("e0.txt")), 1);
  EXPECT_NE(slurp("out.txt").find("result: FAIL"), std::string::npos);
}

TEST_F(Cli, RecognizeRecoversSpec) {
  ASSERT_EQ(run("build --fiducial 15d --precision 80 --out " + path("v.txt")), 0);
  EXPECT_EQ(run("recognize --in " + path("v.txt") + " --basis dim15-zauner6 --out " + path("s.txt")), 0);
  std::string spec = slurp("s.txt");
  EXPECT_NE(spec.find("basis dim15-zauner6"), std::string::npos);
  // the written spec builds and verifies again
  ASSERT_EQ(run("build --spec " + path("s.txt") + " --precision 60 --out " + path("w.txt")), 0);
  EXPECT_EQ(run("verify --in " + path("w.txt")), 0);
}

TEST_F(Cli, RecognizeReportsFailure) {
  ASSERT_EQ(run("build --fiducial 15d --precision 80 --out " + path("v.txt")), 0);
  EXPECT_EQ(run("recognize --in " + path("v.txt") + " --basis dim15-zauner6 --dict P13"), 1);
  EXPECT_NE(slurp("out.txt").find("\"failed\""), std::string::npos);
}

TEST_F(Cli, AdaptPrintsEntries) {
  ASSERT_EQ(run("build --fiducial 5a --precision 40 --out " + path("v.txt")), 0);
  EXPECT_EQ(run("adapt --in " + path("v.txt") + " --basis dim5-zauner2"), 0);
  std::string out = slurp("out.txt");
  EXPECT_NE(out.find("0  p = 3.1698729810778"), std::string::npos) << out;
  EXPECT_NE(out.find("residual"), std::string::npos);
}

TEST_F(Cli, SolveWritesVerifiableVector) {
  ASSERT_EQ(run("solve --dim 5 --seed 3 --restarts 4 --out " + path("s.txt")), 0);
  EXPECT_NE(slurp("s.txt").find("seed="), std::string::npos);
  EXPECT_EQ(run("verify --in " + path("s.txt")), 0);
}

TEST_F(Cli, Sweep) {
  EXPECT_EQ(run("sweep --fiducial 5a --start 40"), 0);
  EXPECT_NE(slurp("out.txt").find("moduli: "), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("--help"), 0);
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("build --precision 5 --fiducial 5a"), 2);
  EXPECT_EQ(run("build"), 2);
  EXPECT_EQ(run("recognize --in x --basis dim5-zauner2 --field cbrt2"), 2);
  EXPECT_EQ(run("verify --in " + path("missing.txt")), 1);
  EXPECT_EQ(run("build --fiducial 7z"), 1);
}

}  // namespace
