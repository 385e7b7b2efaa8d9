// Copyright 2026 The segrover Authors.
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Result {
  int status;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(SEGROVER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string puzzle(const std::string& name) {
  return std::string(SEGROVER_PUZZLE_DIR) + "/" + name;
}

std::string temp(const std::string& name, const std::string& text = "") {
  const std::string path = testing::TempDir() + name;
  if (!text.empty()) std::ofstream(path) << text;
  return path;
}

TEST(Cli, ClassicalIdentity) {
  const Result r = run("solve " + puzzle("identity.puz") + " --engine classical");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\t1+1=2\t0\t0\n"), std::string::npos) << r.out;
}

TEST(Cli, ComponentTable) {
  const Result r = run("components --table");
  EXPECT_EQ(r.status, 0);
  for (const char* row : {"SC verifier\t", "SC verifier + SC-BCD\t", "4-bit adder\t",
                          "TDN generator\t", "Eq verifier\t", "SC-HDC\t"}) {
    EXPECT_NE(r.out.find(row), std::string::npos) << row;
  }
}

TEST(Cli, EnginesAgree) {
  const std::string file = puzzle("case_study.puz");
  const Result c = run("solve " + file + " --engine classical --fix-displays 2,3");
  const Result g = run("solve " + file + " --engine grover --fix-displays 2,3");
  EXPECT_EQ(c.status, 0);
  EXPECT_EQ(g.status, 0);
  EXPECT_EQ(c.out, g.out);
  EXPECT_NE(c.out.find("3+6=09"), std::string::npos);
}

TEST(Cli, EnginesAgreeOnSmallCorpus) {
  for (const char* name : {"six_plus_four.puz", "three_plus_three.puz",
                           "nine_minus_five.puz"}) {
    const std::string file = puzzle(name);
    const Result c = run("solve " + file + " --engine classical --fix-displays 2");
    const Result g = run("solve " + file + " --engine grover --fix-displays 2");
    EXPECT_EQ(c.out, g.out) << name;
    EXPECT_EQ(c.status, g.status) << name;
  }
}

TEST(Cli, ExitStatuses) {
  EXPECT_EQ(run("solve " + puzzle("six_plus_four.puz") + " --fix-displays 0").status, 1);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("solve").status, 2);
  EXPECT_EQ(run("solve " + puzzle("identity.puz") + " --engine quantum").status, 2);
  EXPECT_EQ(run("solve " + temp("bad.puz", "equation: 1+?=2\n")).status, 2);
  EXPECT_EQ(run("solve /nonexistent.puz").status, 2);
  const std::string times = temp("times.puz", "equation: 2x3=6\noperators: 00=+ 01=x 10==\n");
  EXPECT_EQ(run("compile " + times + " --cost-report").status, 2);
  EXPECT_EQ(run("solve " + puzzle("case_study.puz") + " --engine grover").status, 3);
  EXPECT_EQ(run("compile " + puzzle("case_study.puz") + " --ancilla-budget 10").status, 3);
}

TEST(Cli, CompileWritesArtifacts) {
  const std::string net = temp("case.net");
  const std::string side = temp("case.json");
  const Result r = run("compile " + puzzle("case_study.puz") + " --emit-netlist " + net +
                       " --sidecar " + side + " --cost-report");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("metric\tmeasured\treference\n", 0), 0u);
  EXPECT_NE(r.out.find("\nin\t30\t"), std::string::npos);
  std::ifstream n(net);
  std::string first;
  std::getline(n, first);
  EXPECT_EQ(first, "WIRE a0 input");
  std::stringstream js;
  js << std::ifstream(side).rdbuf();
  EXPECT_NE(js.str().find("\"wires\""), std::string::npos);
}

TEST(Cli, VerifyReportsNoMismatches) {
  const Result r = run("verify " + puzzle("case_study.puz") + " --fix-displays 2,3");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("mode\texhaustive\n"), std::string::npos);
  EXPECT_NE(r.out.find("mismatches\t0\n"), std::string::npos);
  const Result s = run("verify " + puzzle("five_plus_nine.puz") + " --samples 5000");
  EXPECT_EQ(s.status, 0);
  EXPECT_NE(s.out.find("checked\t5000\n"), std::string::npos);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const std::string args = "solve " + puzzle("case_study.puz") +
                           " --engine grover --fix-displays 2,3 --histogram " +
                           temp("h.tsv");
  const Result a = run(args);
  std::stringstream h1;
  h1 << std::ifstream(temp("h.tsv")).rdbuf();
  const Result b = run(args);
  std::stringstream h2;
  h2 << std::ifstream(temp("h.tsv")).rdbuf();
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(h1.str(), h2.str());
  EXPECT_EQ(h1.str().rfind("candidate\tequation\tprobability\n", 0), 0u);
}

}  // namespace
