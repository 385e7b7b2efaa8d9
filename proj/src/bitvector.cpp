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

#include "segrover/bitvector.hpp"

#include <algorithm>
#include <bit>

#include "segrover/errors.hpp"

namespace segrover {

BitVector::BitVector(std::size_t width)
    : words_((width + 63) / 64, 0), size_(width) {}

BitVector BitVector::fromString(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw DomainError("bit string may only contain 0 and 1");
    }
  }
  return v;
}

BitVector BitVector::fromInteger(std::uint64_t value, std::size_t width) {
  if (width > 64) throw DomainError("integer bit vectors are at most 64 wide");
  BitVector v(width);
  for (std::size_t i = 0; i < width; ++i) {
    v.set(i, (value >> (width - 1 - i)) & 1u);
  }
  return v;
}

void BitVector::set(std::size_t i, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (v) {
    words_[i >> 6] |= bit;
  } else {
    words_[i >> 6] &= ~bit;
  }
}

std::uint64_t BitVector::toInteger() const {
  if (size_ > 64) throw DomainError("bit vector wider than 64 bits");
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < size_; ++i) value = (value << 1) | get(i);
  return value;
}

std::string BitVector::toString() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::size_t BitVector::popcount() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += std::popcount(w);
  return n;
}

BitVector BitVector::slice(std::size_t offset, std::size_t width) const {
  if (offset + width > size_) throw DomainError("slice out of range");
  BitVector v(width);
  for (std::size_t i = 0; i < width; ++i) v.set(i, get(offset + i));
  return v;
}

void BitVector::append(const BitVector& other) {
  const std::size_t old = size_;
  size_ += other.size_;
  words_.resize((size_ + 63) / 64, 0);
  for (std::size_t i = 0; i < other.size_; ++i) set(old + i, other.get(i));
}

bool BitVector::operator<(const BitVector& other) const {
  const std::size_t n = std::min(size_, other.size_);
  for (std::size_t i = 0; i < n; ++i) {
    if (get(i) != other.get(i)) return other.get(i);
  }
  return size_ < other.size_;
}

}  // namespace segrover
