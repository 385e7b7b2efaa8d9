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

#ifndef SEGROVER_SEGCODE_HPP_
#define SEGROVER_SEGCODE_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segrover/bitvector.hpp"

namespace segrover {

inline constexpr int kSegments = 7;

// Seven-segment state, segments a..g. Segment a is bit 6 of bits(), g is bit 0.
class SegmentCode {
 public:
  constexpr SegmentCode() = default;
  explicit constexpr SegmentCode(std::uint8_t bits) : bits_(bits & 0x7F) {}

  static SegmentCode fromString(std::string_view abcdefg);

  constexpr std::uint8_t bits() const { return bits_; }
  // segment: 0 = a ... 6 = g.
  constexpr bool lit(int segment) const {
    return (bits_ >> (kSegments - 1 - segment)) & 1u;
  }
  int litCount() const;
  std::string toString() const;
  BitVector toBitVector() const;

  constexpr bool operator==(const SegmentCode&) const = default;

 private:
  std::uint8_t bits_ = 0;
};

struct DigitCode {
  int value = 0;
  // x4x3x2x1, x1 is bit 0.
  std::uint8_t bits() const { return static_cast<std::uint8_t>(value); }
};

enum class Op { Plus, Minus, Times, Divide, Less, Equal, Greater };

char opSymbol(Op op);
std::optional<Op> opFromSymbol(char symbol);
bool isArithmetic(Op op);

// Operators are drawn from strokes; one stroke is one matchstick.
std::uint16_t opStrokes(Op op);
int opMatchsticks(Op op);
int opDistance(Op a, Op b);

// Abstract k-bit operator codes. Codes without an entry are reserved.
class OperatorEncoding {
 public:
  OperatorEncoding() = default;
  OperatorEncoding(int width, std::vector<std::optional<Op>> table);

  // 00 '+', 01 '-', 10 '=', 11 reserved.
  static OperatorEncoding standard();

  int width() const { return width_; }
  std::optional<Op> decode(std::uint32_t code) const;
  std::optional<std::uint32_t> encode(Op op) const;
  const std::vector<std::optional<Op>>& table() const { return table_; }

  bool operator==(const OperatorEncoding&) const = default;

 private:
  int width_ = 0;
  std::vector<std::optional<Op>> table_;
};

struct OperatorCode {
  Op op;
  std::uint32_t bits;
};

struct DigitTableRow {
  int digit;
  SegmentCode segments;
  DigitCode code;
};

// The ten correct SC-States.
const std::array<DigitTableRow, 10>& digitTable();

SegmentCode encodeDigit(int digit);
std::optional<int> decodeSegment(SegmentCode sc);
bool isValidSC(SegmentCode sc);

int hammingDistance(SegmentCode a, SegmentCode b);
int hammingDistance(const BitVector& a, const BitVector& b);

// Search-space size C(total - matchsticks + k, k) for a puzzle with the given
// number of segment positions, lit matchsticks and changed-segment budget.
std::uint64_t searchSpaceSize(int totalPositions, int matchsticks, int k);

enum class KMode { Exact, AtMost };

struct PuzzleConfig {
  std::vector<SegmentCode> displays;
  std::vector<Op> operators;
  int kBudget = 0;
  KMode kMode = KMode::Exact;
  bool conserveMatchsticks = false;

  int matchsticks() const;
  bool operator==(const PuzzleConfig&) const = default;
};

}  // namespace segrover

#endif  // SEGROVER_SEGCODE_HPP_
