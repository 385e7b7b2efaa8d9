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

#ifndef SEGROVER_GROVER_HPP_
#define SEGROVER_GROVER_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "segrover/kernels.hpp"
#include "segrover/oracle.hpp"
#include "segrover/refsolver.hpp"

namespace segrover {

struct GroverOptions {
  int capacity = 26;
  bool complexAmplitudes = false;
  bool parallel = true;
};

// Free register of an oracle under a restriction: candidate positions not
// pinned, in ascending order. Position 0 of the list is the most significant
// bit of a register index.
struct SearchRegister {
  std::vector<int> freePositions;
  BitVector base;  // candidate with pinned positions set, free ones 0

  int width() const { return static_cast<int>(freePositions.size()); }
  BitVector candidate(std::uint64_t index) const;
  std::uint64_t index(const BitVector& candidate) const;
};

SearchRegister makeSearchRegister(const OracleArtifact& art,
                                  const Restriction& restriction);

// Oracle output for every register index.
kernels::MarkTable markTable(const OracleArtifact& art,
                             const SearchRegister& reg, bool parallel = true);

struct GroverRun {
  int iterations = 0;
  int registerWidth = 0;
  std::uint64_t markedCount = 0;
  // history[i]: probability of measuring a marked index after i iterations.
  std::vector<double> history;
  // Final measurement distribution over register indices.
  std::vector<double> probabilities;

  double successProbability() const { return history.back(); }
};

int optimalIterations(int n, std::uint64_t solutionCount);

GroverRun runGrover(const kernels::MarkTable& marks, int n, int r,
                    const GroverOptions& options = {});
GroverRun runGrover(const OracleArtifact& art, int r,
                    const Restriction& restriction = {},
                    const GroverOptions& options = {});

struct QuantumSolution {
  SolutionSet solutions;
  GroverRun run;
  double threshold = 0.0;
  bool noSolution = false;
};

// Runs the optimal number of iterations for the marked count of the oracle
// and keeps every index whose probability exceeds the midpoint
// between the largest and smallest probabilities.
QuantumSolution solveQuantum(const OracleArtifact& art,
                             const Restriction& restriction = {},
                             const GroverOptions& options = {});

// One row per register index with its rendering, most probable first.
std::string formatHistogram(const OracleArtifact& art,
                            const SearchRegister& reg, const GroverRun& run,
                            std::size_t limit, char delimiter = '\t');

}  // namespace segrover

#endif  // SEGROVER_GROVER_HPP_
