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

#include "segrover/segcode.hpp"

#include <bit>

#include "segrover/errors.hpp"

namespace segrover {
namespace {

constexpr std::array<std::uint8_t, 10> kDigitBits = {
    0b1111110, 0b0110000, 0b1101101, 0b1111001, 0b0110011,
    0b1011011, 0b1011111, 0b1110000, 0b1111111, 0b1111011,
};

// Stroke positions used to draw operators.
enum Stroke : std::uint16_t {
  kMidHorizontal = 1u << 0,
  kMidVertical = 1u << 1,
  kTopHorizontal = 1u << 2,
  kBottomHorizontal = 1u << 3,
  kRisingDiagonal = 1u << 4,
  kFallingDiagonal = 1u << 5,
  kTopDot = 1u << 6,
  kBottomDot = 1u << 7,
  kUpperLeftArm = 1u << 8,
  kLowerLeftArm = 1u << 9,
  kUpperRightArm = 1u << 10,
  kLowerRightArm = 1u << 11,
};

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

}  // namespace

SegmentCode SegmentCode::fromString(std::string_view abcdefg) {
  if (abcdefg.size() != kSegments) {
    throw DomainError("segment code needs exactly 7 bits");
  }
  std::uint8_t bits = 0;
  for (char ch : abcdefg) {
    if (ch != '0' && ch != '1') throw DomainError("segment code bits are 0/1");
    bits = static_cast<std::uint8_t>((bits << 1) | (ch == '1'));
  }
  return SegmentCode(bits);
}

int SegmentCode::litCount() const { return std::popcount(bits_); }

std::string SegmentCode::toString() const {
  std::string s(kSegments, '0');
  for (int i = 0; i < kSegments; ++i) {
    if (lit(i)) s[i] = '1';
  }
  return s;
}

BitVector SegmentCode::toBitVector() const {
  return BitVector::fromInteger(bits_, kSegments);
}

char opSymbol(Op op) {
  switch (op) {
    case Op::Plus: return '+';
    case Op::Minus: return '-';
    case Op::Times: return '*';
    case Op::Divide: return '/';
    case Op::Less: return '<';
    case Op::Equal: return '=';
    case Op::Greater: return '>';
  }
  return '?';
}

std::optional<Op> opFromSymbol(char symbol) {
  switch (symbol) {
    case '+': return Op::Plus;
    case '-': return Op::Minus;
    case '*':
    case 'x': return Op::Times;
    case '/': return Op::Divide;
    case '<': return Op::Less;
    case '=': return Op::Equal;
    case '>': return Op::Greater;
    default: return std::nullopt;
  }
}

bool isArithmetic(Op op) {
  return op == Op::Plus || op == Op::Minus || op == Op::Times ||
         op == Op::Divide;
}

std::uint16_t opStrokes(Op op) {
  switch (op) {
    case Op::Plus: return kMidHorizontal | kMidVertical;
    case Op::Minus: return kMidHorizontal;
    case Op::Times: return kRisingDiagonal | kFallingDiagonal;
    case Op::Divide: return kMidHorizontal | kTopDot | kBottomDot;
    case Op::Less: return kUpperLeftArm | kLowerLeftArm;
    case Op::Equal: return kTopHorizontal | kBottomHorizontal;
    case Op::Greater: return kUpperRightArm | kLowerRightArm;
  }
  return 0;
}

int opMatchsticks(Op op) { return std::popcount(opStrokes(op)); }

int opDistance(Op a, Op b) {
  return std::popcount(static_cast<std::uint16_t>(opStrokes(a) ^ opStrokes(b)));
}

OperatorEncoding::OperatorEncoding(int width,
                                   std::vector<std::optional<Op>> table)
    : width_(width), table_(std::move(table)) {
  if (width < 1 || width > 8) throw DomainError("operator width must be 1..8");
  table_.resize(std::size_t{1} << width);
  for (std::size_t i = 0; i < table_.size(); ++i) {
    for (std::size_t j = i + 1; j < table_.size(); ++j) {
      if (table_[i] && table_[i] == table_[j]) {
        throw DomainError("operator encoded twice");
      }
    }
  }
}

OperatorEncoding OperatorEncoding::standard() {
  return OperatorEncoding(2, {Op::Plus, Op::Minus, Op::Equal, std::nullopt});
}

std::optional<Op> OperatorEncoding::decode(std::uint32_t code) const {
  if (code >= table_.size()) return std::nullopt;
  return table_[code];
}

std::optional<std::uint32_t> OperatorEncoding::encode(Op op) const {
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] == op) return static_cast<std::uint32_t>(i);
  }
  return std::nullopt;
}

const std::array<DigitTableRow, 10>& digitTable() {
  static const std::array<DigitTableRow, 10> table = [] {
    std::array<DigitTableRow, 10> t{};
    for (int d = 0; d < 10; ++d) {
      t[d] = {d, SegmentCode(kDigitBits[d]), DigitCode{d}};
    }
    return t;
  }();
  return table;
}

SegmentCode encodeDigit(int digit) {
  if (digit < 0 || digit > 9) throw DomainError("digit must be in [0, 9]");
  return SegmentCode(kDigitBits[digit]);
}

std::optional<int> decodeSegment(SegmentCode sc) {
  for (int d = 0; d < 10; ++d) {
    if (kDigitBits[d] == sc.bits()) return d;
  }
  return std::nullopt;
}

bool isValidSC(SegmentCode sc) { return decodeSegment(sc).has_value(); }

int hammingDistance(SegmentCode a, SegmentCode b) {
  return std::popcount(static_cast<std::uint8_t>(a.bits() ^ b.bits()));
}

int hammingDistance(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw DomainError("bit vector widths differ");
  int n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a.get(i) != b.get(i);
  return n;
}

std::uint64_t searchSpaceSize(int totalPositions, int matchsticks, int k) {
  if (k < 0 || k > 7 || k > matchsticks || matchsticks > totalPositions ||
      totalPositions < 0) {
    throw DomainError("search space needs 0 <= k <= matchsticks <= total, k < 8");
  }
  return binomial(totalPositions - matchsticks + k, k);
}

int PuzzleConfig::matchsticks() const {
  int n = 0;
  for (SegmentCode sc : displays) n += sc.litCount();
  for (Op op : operators) n += opMatchsticks(op);
  return n;
}

}  // namespace segrover
