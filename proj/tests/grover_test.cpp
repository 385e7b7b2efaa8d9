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

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "segrover/errors.hpp"
#include "segrover/grover.hpp"
#include "segrover/puzzle_file.hpp"

namespace segrover {
namespace {

kernels::MarkTable planted(int n, const std::vector<std::uint64_t>& marks) {
  kernels::MarkTable t(((std::size_t{1} << n) + 63) / 64, 0);
  for (std::uint64_t m : marks) t[m >> 6] |= std::uint64_t{1} << (m & 63);
  return t;
}

std::vector<std::uint64_t> distinct(int n, int m, std::mt19937_64& rng) {
  std::set<std::uint64_t> s;
  while (static_cast<int>(s.size()) < m) s.insert(rng() & ((std::uint64_t{1} << n) - 1));
  return {s.begin(), s.end()};
}

double closedForm(int n, int m, int r) {
  const double theta = std::asin(std::sqrt(m / std::ldexp(1.0, n)));
  return std::pow(std::sin((2 * r + 1) * theta), 2);
}

TEST(Grover, OptimalIterations) {
  EXPECT_EQ(optimalIterations(7, 10), 2);
  EXPECT_EQ(optimalIterations(16, 2), 142);
  EXPECT_EQ(optimalIterations(10, 1), 25);
  EXPECT_EQ(optimalIterations(5, 0), 0);
  EXPECT_EQ(optimalIterations(3, 8), 0);
}

TEST(Grover, ClosedFormOverIterations) {
  std::mt19937_64 rng(17);
  for (int n : {4, 7, 10, 14}) {
    for (int m : {1, 3, 10}) {
      if (m >= (1 << n)) continue;
      const auto marks = planted(n, distinct(n, m, rng));
      const int r = optimalIterations(n, m);
      const GroverRun run = runGrover(marks, n, r);
      ASSERT_EQ(run.history.size(), static_cast<std::size_t>(r + 1));
      for (int i = 0; i <= r; ++i) {
        EXPECT_NEAR(run.history[i], closedForm(n, m, i), 1e-6) << n << " " << m << " " << i;
      }
    }
  }
}

TEST(Grover, SevenQubitsTenSolutionsTwoIterations) {
  std::mt19937_64 rng(23);
  const GroverRun run = runGrover(planted(7, distinct(7, 10, rng)), 7, 2);
  EXPECT_NEAR(run.successProbability(), 0.976, 1e-3);
  EXPECT_NEAR(run.successProbability(), closedForm(7, 10, 2), 1e-9);
}

TEST(Grover, ComplexSerialAndParallelAgree) {
  std::mt19937_64 rng(29);
  const auto marks = planted(12, distinct(12, 5, rng));
  GroverOptions real;
  GroverOptions cplx;
  cplx.complexAmplitudes = true;
  GroverOptions serial;
  serial.parallel = false;
  const GroverRun a = runGrover(marks, 12, 20, real);
  const GroverRun b = runGrover(marks, 12, 20, cplx);
  const GroverRun c = runGrover(marks, 12, 20, serial);
  for (std::size_t i = 0; i < a.probabilities.size(); ++i) {
    EXPECT_NEAR(a.probabilities[i], b.probabilities[i], 1e-12);
    EXPECT_NEAR(a.probabilities[i], c.probabilities[i], 1e-12);
  }
  double total = 0;
  for (double p : a.probabilities) total += p;
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(Grover, CapacityIsEnforced) {
  GroverOptions small;
  small.capacity = 8;
  EXPECT_THROW(runGrover(planted(9, {1}), 9, 1, small), CapacityError);
  const Puzzle p = loadPuzzle(std::string(SEGROVER_PUZZLE_DIR) + "/case_study.puz");
  const OracleArtifact art = compileOracle(p.config, p.spec);
  EXPECT_THROW(solveQuantum(art), CapacityError);
}

TEST(Grover, SearchRegisterIndexing) {
  const Puzzle p = loadPuzzle(std::string(SEGROVER_PUZZLE_DIR) + "/case_study.puz");
  const OracleArtifact art = compileOracle(p.config, p.spec);
  const SearchRegister reg = makeSearchRegister(art, fixDisplays(p.config, {2, 3}));
  EXPECT_EQ(reg.width(), 16);
  for (std::uint64_t i : {0ull, 1ull, 777ull, 65535ull}) {
    EXPECT_EQ(reg.index(reg.candidate(i)), i);
  }
  EXPECT_EQ(reg.candidate(0).slice(14, 14).toString(), "11111101111011");
}

TEST(Grover, CaseStudyOnRestrictedRegister) {
  const Puzzle p = loadPuzzle(std::string(SEGROVER_PUZZLE_DIR) + "/case_study.puz");
  const OracleArtifact art = compileOracle(p.config, p.spec);
  const Restriction r = fixDisplays(p.config, {2, 3});
  const QuantumSolution q = solveQuantum(art, r);
  EXPECT_FALSE(q.noSolution);
  EXPECT_EQ(q.solutions.entries, solveClassical(p.config, p.spec, r).entries);
  EXPECT_GT(q.run.successProbability(), 0.8);
  EXPECT_EQ(q.run.markedCount, 2u);
}

TEST(Grover, NoSolutionIsReported) {
  Puzzle p = loadPuzzle(std::string(SEGROVER_PUZZLE_DIR) + "/six_plus_four.puz");
  const OracleArtifact art = compileOracle(p.config, p.spec);
  const QuantumSolution q = solveQuantum(art, fixDisplays(p.config, {0}));
  EXPECT_TRUE(q.noSolution);
  EXPECT_TRUE(q.solutions.empty());
}

TEST(Grover, HistogramIsSortedAndLimited) {
  const Puzzle p = loadPuzzle(std::string(SEGROVER_PUZZLE_DIR) + "/case_study.puz");
  const OracleArtifact art = compileOracle(p.config, p.spec);
  const Restriction r = fixDisplays(p.config, {2, 3});
  const SearchRegister reg = makeSearchRegister(art, r);
  const QuantumSolution q = solveQuantum(art, r);
  const std::string h = formatHistogram(art, reg, q.run, 3, ',');
  std::istringstream in(h);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "candidate,equation,probability");
  std::vector<std::string> rows;
  while (std::getline(in, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NE(rows[0].find("09,"), std::string::npos);
  EXPECT_NE(rows[1].find("09,"), std::string::npos);
}

}  // namespace
}  // namespace segrover
