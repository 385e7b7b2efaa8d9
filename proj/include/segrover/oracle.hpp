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

#ifndef SEGROVER_ORACLE_HPP_
#define SEGROVER_ORACLE_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "segrover/bitvector.hpp"
#include "segrover/circuit.hpp"
#include "segrover/segcode.hpp"

namespace segrover {

struct ConstraintSpec {
  // Display and operator validity.
  struct Gin {
    std::vector<int> displays;
    bool checkOperators = true;
  };
  // Changed-segment budget: HD(initial, candidate) against hdFactor * K.
  struct Gamid {
    bool enabled = true;
    KMode mode = KMode::Exact;
    int hdFactor = 1;
    int kBudget = 0;
    // K is read from three input wires instead of being fixed to kBudget;
    // the searched K must not exceed kBudget.
    bool searchK = false;
  };
  // Arithmetic: number(left) op number(right) == number(result). Each
  // operand lists display indices, most significant digit first.
  struct Art {
    std::vector<int> left;
    std::vector<int> right;
    std::vector<int> result;
    int operatorSlot = 0;
  };
  struct Extras {
    bool conserveMatchsticks = false;
  };

  Gin gin;
  Gamid gamid;
  std::optional<Art> art;
  Extras extras;
  OperatorEncoding encoding = OperatorEncoding::standard();
  std::vector<Op> allowedOps = {Op::Plus, Op::Minus};
};

// Standard constraints for "left op right = result", taking K settings and
// conservation from the puzzle.
ConstraintSpec equationConstraints(const PuzzleConfig& puzzle, int leftDigits,
                                   int rightDigits, int resultDigits,
                                   int hdFactor = 1, bool searchK = false);

// Candidate register: 7 wires per display (a..g), then encoding.width() wires
// per operator slot (most significant first), then k2 k1 k0 when K is searched.
int inputWidth(const PuzzleConfig& puzzle, const ConstraintSpec& spec);

struct DecodedCandidate {
  std::vector<SegmentCode> displays;
  std::vector<std::uint32_t> operatorCodes;
  std::vector<std::optional<Op>> operators;
  std::optional<int> k;
};

DecodedCandidate decodeCandidate(const PuzzleConfig& puzzle,
                                 const ConstraintSpec& spec,
                                 const BitVector& candidate);
BitVector encodeCandidate(const PuzzleConfig& puzzle,
                          const ConstraintSpec& spec,
                          std::span<const SegmentCode> displays,
                          std::span<const std::uint32_t> operatorCodes,
                          std::optional<int> k = std::nullopt);
// Rendering such as "3+6=09"; '?' marks an invalid display or operator code.
std::string renderCandidate(const PuzzleConfig& puzzle,
                            const ConstraintSpec& spec,
                            const BitVector& candidate);
std::string renderPuzzle(const PuzzleConfig& puzzle,
                         const ConstraintSpec& spec);

struct OracleArtifact {
  Circuit circuit;
  std::vector<WireId> inputWires;
  std::vector<WireId> ancillaWires;
  WireId outputWire = 0;
  QuantumCost cost;
  PuzzleConfig initialState;
  ConstraintSpec spec;

  int inputWidth() const { return static_cast<int>(inputWires.size()); }
};

struct CompileOptions {
  // Maximum ancilla wires; negative means unlimited.
  int ancillaBudget = -1;
};

OracleArtifact compileOracle(const PuzzleConfig& puzzle,
                             const ConstraintSpec& spec,
                             const CompileOptions& options = {});

// Wraps an arbitrary single-output circuit (Input wires form the register).
OracleArtifact oracleFromCircuit(Circuit circuit);

bool evaluateOracle(const OracleArtifact& art, const BitVector& candidate);

// Wire names and cost as a JSON document, with the puzzle echoed.
std::string oracleSidecarJson(const OracleArtifact& art);

}  // namespace segrover

#endif  // SEGROVER_ORACLE_HPP_
