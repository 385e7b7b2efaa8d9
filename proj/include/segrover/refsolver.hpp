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

#ifndef SEGROVER_REFSOLVER_HPP_
#define SEGROVER_REFSOLVER_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "segrover/bitvector.hpp"
#include "segrover/oracle.hpp"
#include "segrover/segcode.hpp"

namespace segrover {

struct SolutionEntry {
  BitVector candidate;
  PuzzleConfig config;
  std::string equation;
  int hd = 0;
  int k = 0;

  bool operator==(const SolutionEntry&) const = default;
};

struct SolutionSet {
  std::vector<SolutionEntry> entries;
  std::optional<int> minimalK;

  bool empty() const { return entries.empty(); }
  std::vector<std::string> equations() const;
};

// Candidate input positions pinned to constants (index into the candidate
// register, value).
using Restriction = std::vector<std::pair<int, bool>>;

// Pins every wire of the listed displays to the puzzle's initial code.
Restriction fixDisplays(const PuzzleConfig& puzzle,
                        const std::vector<int>& displays);

bool satisfies(const PuzzleConfig& puzzle, const BitVector& candidate,
               const ConstraintSpec& spec);

SolutionSet solveClassical(const PuzzleConfig& puzzle,
                           const ConstraintSpec& spec,
                           const Restriction& restriction = {});

// Plain loop over every assignment of the unrestricted positions.
SolutionSet solveNaive(const PuzzleConfig& puzzle, const ConstraintSpec& spec,
                       const Restriction& restriction = {});

// Decoded entry for a candidate.
SolutionEntry makeEntry(const PuzzleConfig& puzzle, const ConstraintSpec& spec,
                        const BitVector& candidate);

// Smallest fixed K in [0, 7] with a non-empty solution set, and that set.
std::pair<std::optional<int>, SolutionSet> minimalKSolutions(
    PuzzleConfig puzzle, ConstraintSpec spec);

// Scans initial states where the listed displays range over all 128 codes
// and the listed operator slot over the allowed operators, keeping the other
// displays from the template. Returns the first (lexicographic in the varied
// displays, then operator order) whose minimal-K solution equations equal
// the target.
std::optional<PuzzleConfig> inverseSearch(
    const PuzzleConfig& templ, const ConstraintSpec& spec,
    const std::vector<int>& variedDisplays,
    const std::vector<std::string>& targetEquations);

std::string formatSolutionSet(const SolutionSet& set);

}  // namespace segrover

#endif  // SEGROVER_REFSOLVER_HPP_
