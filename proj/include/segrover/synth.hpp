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

#ifndef SEGROVER_SYNTH_HPP_
#define SEGROVER_SYNTH_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "segrover/circuit.hpp"
#include "segrover/segcode.hpp"

namespace segrover {

// Wire list, element 0 least significant.
using Register = std::vector<WireId>;

struct Literal {
  int var;  // 0 = a ... 6 = g
  bool positive;
};

// Product of literals over a..g. Variable v occupies bit (6 - v) of mask/value.
struct Cube {
  std::uint8_t mask = 0;
  std::uint8_t value = 0;

  static Cube full(SegmentCode sc) { return {0x7F, sc.bits()}; }
  static Cube of(std::span<const Literal> literals);

  bool matches(SegmentCode sc) const { return (sc.bits() & mask) == value; }
  bool hasVar(int v) const { return (mask >> (6 - v)) & 1u; }
  bool polarity(int v) const { return (value >> (6 - v)) & 1u; }
  int size() const;
  std::vector<Literal> literals() const;
  // Every literal of this cube also appears in other.
  bool within(const Cube& other) const {
    return (mask & other.mask) == mask && (other.value & mask) == value;
  }
  // Literal notation, negation written as a trailing apostrophe: "ab'dg".
  std::string toString() const;

  bool operator==(const Cube&) const = default;
};

struct Minterm {
  SegmentCode code;
  int label = -1;
  bool operator==(const Minterm&) const = default;
};

struct OccurrenceTally {
  std::array<int, kSegments> positive{};
  std::array<int, kSegments> negative{};
};

// One factored product inside a CSES group. When xorFirst >= 0 the term also
// requires var(xorFirst) XOR var(xorSecond) == xorParity.
struct CsesTerm {
  Cube cube;
  int xorFirst = -1;
  int xorSecond = -1;
  bool xorParity = false;
  std::vector<int> labels;

  bool matches(SegmentCode sc) const;
  int controlCount() const { return cube.size() + (xorFirst >= 0 ? 1 : 0); }
};

struct Cses {
  std::vector<Minterm> sequence;
  std::vector<std::vector<Minterm>> groups;
  // Step-output cube held while each group is emitted (nullopt: none).
  std::vector<std::optional<Cube>> stepOutputs;

  std::vector<Cube> stepOutputSchedule() const;
  std::vector<CsesTerm> groupTerms(std::size_t group) const;
  bool evaluate(SegmentCode sc) const;
};

struct MergeOptions {
  // Label sets that must appear as whole groups.
  std::vector<std::vector<int>> preserveTaps;
  int stepOutputWidth = 4;
};

std::vector<Minterm> digitMinterms();

OccurrenceTally countOccurrences(std::span<const Minterm> minterms);
Minterm initialMinterm(const OccurrenceTally& tally);
std::vector<Minterm> sequenceMinterms(const Minterm& start,
                                      std::vector<Minterm> rest);
Cses mergeMinterms(std::span<const Minterm> seq,
                   const MergeOptions& options = {});

// Estimated Toffoli cost of a group under the ladder model.
int groupCost(std::span<const Minterm> group);
std::vector<CsesTerm> factorGroup(std::span<const Minterm> group);

// The CSES of the ten digits, keeping the decoder taps {9,8}, {3,2} and
// {6,5} as whole groups.
Cses digitCses();

// Output wire that should end as the XOR of the listed minterm labels, on
// the codes of the CSES set.
struct DecoderTap {
  WireId wire;
  std::vector<int> labels;
};

void appendCsesNetwork(Circuit& c, const Cses& cses,
                       std::span<const WireId> segments, WireId stepOutput,
                       WireId v1, std::span<const DecoderTap> taps);

void appendScVerifier(Circuit& c, std::span<const WireId> segments,
                      WireId stepOutput, WireId v1);
// x is x1..x4 (least significant first).
void appendScBcd(Circuit& c, std::span<const WireId> segments,
                 WireId stepOutput, WireId v1, const Register& x);

// z ^= 10*x + y for digit registers x, y (4 wires each), z 8 clean wires.
void appendTdn(Circuit& c, const Register& x, const Register& y,
               const Register& z, WireId anc);

// s ^= a + b, |a| >= |b|, |s| = |a| + 1, s initially clean.
void appendAdder(Circuit& c, const Register& a, const Register& b,
                 const Register& s);
// s = a - b in |a|+1 bits, top bit is the borrow. |a| == |b|.
void appendSubtractor(Circuit& c, const Register& a, const Register& b,
                      const Register& s);
// s = minus ? a - b : a + b. |a| == |b|.
void appendAddSub(Circuit& c, const Register& a, const Register& b,
                  const Register& s, Control minus);

// out ^= [a == b]; the shorter operand is zero-extended.
void appendEqVerifier(Circuit& c, const Register& a, const Register& b,
                      WireId out, std::span<const WireId> clean,
                      std::span<const WireId> dirty);
// out ^= [reg == value].
void appendEqualsConstant(Circuit& c, const Register& reg,
                          std::uint64_t value, WireId out,
                          std::span<const WireId> clean,
                          std::span<const WireId> dirty);
// out ^= [a < b] (unsigned). |a| == |b|, scratch has |a| + 1 clean wires.
void appendLessThan(Circuit& c, const Register& a, const Register& b,
                    WireId out, const Register& scratch);
// out (3 wires) ^= popcount(bits), anc 2 clean wires. bits are restored.
void appendPopcount7(Circuit& c, std::span<const WireId> bits,
                     std::span<const WireId> anc, const Register& out);

Circuit buildScVerifier();
Circuit buildScBcd();
Circuit buildTdnGenerator();
Circuit buildAdder(int width);
Circuit buildSubtractor(int width);
Circuit buildAddSub(int width);
Circuit buildEqVerifier(int width);
Circuit buildEqVerifier(int widthA, int widthB);
Circuit buildComparator(int width);
Circuit buildHdCounter();

struct ComponentReport {
  std::string name;
  QuantumCost measured;
  QuantumCost target;
  // Qubit count must match the target exactly.
  bool qubitsExact = false;
};

std::vector<ComponentReport> componentTable();
std::string formatComponentTable(const std::vector<ComponentReport>& rows,
                                 char delimiter = '\t');

}  // namespace segrover

#endif  // SEGROVER_SYNTH_HPP_
