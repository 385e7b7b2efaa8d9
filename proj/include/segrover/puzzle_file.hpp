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

#ifndef SEGROVER_PUZZLE_FILE_HPP_
#define SEGROVER_PUZZLE_FILE_HPP_

#include <string>
#include <string_view>

#include "segrover/oracle.hpp"
#include "segrover/segcode.hpp"

namespace segrover {

// Text puzzle description, one "key: value" per line, '#' starts a comment.
//
//   equation: 5+9=06          (or)   segments: 1011011 + 1111011 = ...
//   k: 2
//   k_mode: exact | at_most
//   hd_factor: 1 | 2
//   conserve: true | false
//   k_search: true | false
//   operators: 00=+ 01=- 10==
struct Puzzle {
  PuzzleConfig config;
  ConstraintSpec spec;
  // Whether the source used the equation: form.
  bool digitForm = true;

  bool operator==(const Puzzle& other) const;
};

Puzzle parsePuzzle(std::string_view text);
Puzzle loadPuzzle(const std::string& path);
std::string renderPuzzleFile(const Puzzle& puzzle);

}  // namespace segrover

#endif  // SEGROVER_PUZZLE_FILE_HPP_
