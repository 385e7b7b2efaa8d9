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

#ifndef SEGROVER_BITVECTOR_HPP_
#define SEGROVER_BITVECTOR_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace segrover {

// Fixed-width bit string. Index 0 is the leftmost (most significant) bit, so
// the integer order of fromInteger() values equals lexicographic order.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t width);

  static BitVector fromString(std::string_view bits);
  static BitVector fromInteger(std::uint64_t value, std::size_t width);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool v);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::uint64_t toInteger() const;
  std::string toString() const;
  std::size_t popcount() const;

  // Sub-range [offset, offset + width).
  BitVector slice(std::size_t offset, std::size_t width) const;
  void append(const BitVector& other);

  bool operator==(const BitVector& other) const = default;
  bool operator<(const BitVector& other) const;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

}  // namespace segrover

#endif  // SEGROVER_BITVECTOR_HPP_
