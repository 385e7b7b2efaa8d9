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

#include <algorithm>

#include "segrover/segcode.hpp"
#include "segrover/synth.hpp"

namespace segrover {
namespace {

std::vector<int> labels(const std::vector<Minterm>& ms) {
  std::vector<int> out;
  for (const Minterm& m : ms) out.push_back(m.label);
  return out;
}

TEST(Cube, LiteralsAndText) {
  const Literal lits[] = {{0, true}, {1, false}, {3, true}, {6, true}};
  const Cube c = Cube::of(lits);
  EXPECT_EQ(c.size(), 4);
  EXPECT_EQ(c.toString(), "ab'dg");
  EXPECT_TRUE(c.matches(SegmentCode::fromString("1011011")));
  EXPECT_FALSE(c.matches(SegmentCode::fromString("1111011")));
  // within(): every literal of this cube appears in the other.
  EXPECT_TRUE(c.within(Cube::full(encodeDigit(5))));
  EXPECT_FALSE(Cube::full(encodeDigit(5)).within(c));
}

TEST(Cses, OccurrenceTallyOfDigits) {
  const auto ms = digitMinterms();
  const OccurrenceTally t = countOccurrences(ms);
  // Lit counts per segment over the ten digit patterns, counted by hand.
  const int lit[7] = {8, 8, 9, 7, 4, 6, 7};
  for (int v = 0; v < 7; ++v) {
    EXPECT_EQ(t.positive[v], lit[v]) << v;
    EXPECT_EQ(t.negative[v], 10 - lit[v]) << v;
  }
}

TEST(Cses, InitialMintermIsNine) {
  const auto ms = digitMinterms();
  const Minterm start = initialMinterm(countOccurrences(ms));
  // The majority pattern is abcd e' f g, the code of digit 9.
  EXPECT_EQ(start.code.toString(), "1111011");
  EXPECT_EQ(decodeSegment(start.code), 9);
}

TEST(Cses, GreedySequence) {
  const auto ms = digitMinterms();
  const SegmentCode init = initialMinterm(countOccurrences(ms)).code;
  Minterm start;
  std::vector<Minterm> rest;
  for (const Minterm& m : ms) {
    if (m.code == init) {
      start = m;
    } else {
      rest.push_back(m);
    }
  }
  const auto seq = sequenceMinterms(start, rest);
  EXPECT_EQ(labels(seq), (std::vector<int>{9, 8, 0, 3, 2, 6, 5, 7, 1, 4}));
}

TEST(Cses, MergedGroupsAndSchedule) {
  const Cses c = digitCses();
  EXPECT_EQ(labels(c.sequence), (std::vector<int>{9, 8, 0, 3, 2, 6, 5, 7, 1, 4}));
  std::vector<std::vector<int>> groups;
  for (const auto& g : c.groups) groups.push_back(labels(g));
  EXPECT_EQ(groups, (std::vector<std::vector<int>>{
                        {9, 8}, {0}, {3, 2}, {6, 5}, {7, 1, 4}}));
  std::vector<std::string> sched;
  for (const Cube& q : c.stepOutputSchedule()) sched.push_back(q.toString());
  EXPECT_EQ(sched, (std::vector<std::string>{"abcd", "abdg", "ab'dg", "bcd'e'"}));
}

TEST(Cses, EvaluatesToValidity) {
  const Cses c = digitCses();
  for (int i = 0; i < 128; ++i) {
    const SegmentCode sc(static_cast<std::uint8_t>(i));
    EXPECT_EQ(c.evaluate(sc), isValidSC(sc)) << sc.toString();
  }
}

// The XOR of a group's factored terms is the indicator of its minterms.
TEST(Cses, GroupTermsReproduceGroupIndicators) {
  const Cses c = digitCses();
  for (std::size_t g = 0; g < c.groups.size(); ++g) {
    const auto terms = c.groupTerms(g);
    for (int i = 0; i < 128; ++i) {
      const SegmentCode sc(static_cast<std::uint8_t>(i));
      bool x = false;
      for (const CsesTerm& t : terms) x ^= t.matches(sc);
      const bool inGroup = std::any_of(
          c.groups[g].begin(), c.groups[g].end(),
          [&](const Minterm& m) { return m.code == sc; });
      EXPECT_EQ(x, inGroup) << "group " << g << " code " << sc.toString();
    }
  }
}

TEST(Cses, MergingLowersEstimatedCost) {
  const Cses c = digitCses();
  int merged = 0;
  int separate = 0;
  for (const auto& g : c.groups) {
    merged += groupCost(g);
    for (const Minterm& m : g) separate += groupCost(std::vector<Minterm>{m});
  }
  EXPECT_LT(merged, separate);
}

TEST(Cses, PreservedTapsStayWhole) {
  const Cses c = digitCses();
  for (const auto& tap : std::vector<std::vector<int>>{{9, 8}, {3, 2}, {6, 5}}) {
    const bool found = std::any_of(c.groups.begin(), c.groups.end(),
                                   [&](const auto& g) { return labels(g) == tap; });
    EXPECT_TRUE(found);
  }
}

}  // namespace
}  // namespace segrover
