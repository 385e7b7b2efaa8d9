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

#include <random>
#include <string>

#include "json.hpp"
#include "segrover/errors.hpp"
#include "segrover/kernels.hpp"
#include "segrover/oracle.hpp"
#include "segrover/puzzle_file.hpp"
#include "segrover/refsolver.hpp"

namespace segrover {
namespace {

Puzzle corpus(const std::string& name) {
  return loadPuzzle(std::string(SEGROVER_PUZZLE_DIR) + "/" + name);
}

const char* const kCorpus[] = {"identity.puz",         "six_plus_four.puz",
                               "three_plus_three.puz", "nine_minus_five.puz",
                               "twelve_plus_three.puz", "five_plus_nine.puz",
                               "case_study.puz"};

// Random candidates whose displays are digits or one-segment neighbours of
// digits, with random operator codes and K values.
std::vector<BitVector> nearDigitCandidates(const Puzzle& p, std::mt19937& rng,
                                           std::size_t limit) {
  std::vector<SegmentCode> pool;
  for (const auto& row : digitTable()) {
    pool.push_back(row.segments);
    pool.push_back(SegmentCode(row.segments.bits() ^ (1u << (rng() % 7))));
  }
  const int w = p.spec.encoding.width();
  std::vector<BitVector> out;
  for (std::size_t i = 0; i < limit; ++i) {
    std::vector<SegmentCode> d;
    for (std::size_t j = 0; j < p.config.displays.size(); ++j) {
      d.push_back(pool[rng() % pool.size()]);
    }
    std::vector<std::uint32_t> ops;
    for (std::size_t s = 0; s < p.config.operators.size(); ++s) {
      ops.push_back(static_cast<std::uint32_t>(rng() % (1u << w)));
    }
    std::optional<int> k;
    if (p.spec.gamid.searchK) k = static_cast<int>(rng() % 8);
    out.push_back(encodeCandidate(p.config, p.spec, d, ops, k));
  }
  return out;
}

TEST(Oracle, InputRegisterLayout) {
  const Puzzle p = corpus("five_plus_nine.puz");
  const OracleArtifact art = compileOracle(p.config, p.spec);
  EXPECT_EQ(art.inputWidth(), 4 * 7 + 2 + 3);
  EXPECT_EQ(art.circuit.wires()[art.inputWires[0]].name, "a0");
  EXPECT_EQ(art.circuit.wires()[art.inputWires[28]].name, "op0_1");
  EXPECT_EQ(art.circuit.wires()[art.inputWires.back()].name, "k0");
  EXPECT_EQ(art.circuit.wires()[art.outputWire].role, WireRole::Output);
}

TEST(Oracle, InitialStateOfTrueEquationIsMarkedAtKZero) {
  const Puzzle p = corpus("identity.puz");
  const OracleArtifact art = compileOracle(p.config, p.spec);
  const std::vector<std::uint32_t> ops = {*p.spec.encoding.encode(Op::Plus)};
  const BitVector init = encodeCandidate(p.config, p.spec, p.config.displays, ops);
  EXPECT_TRUE(evaluateOracle(art, init));
  EXPECT_EQ(renderCandidate(p.config, p.spec, init), "1+1=2");
}

TEST(Oracle, MatchesReferenceOnCorpus) {
  std::mt19937 rng(2026);
  for (const char* name : kCorpus) {
    const Puzzle p = corpus(name);
    const OracleArtifact art = compileOracle(p.config, p.spec);
    std::vector<BitVector> probes = nearDigitCandidates(p, rng, 4000);
    for (const auto& e : solveClassical(p.config, p.spec).entries) {
      probes.push_back(e.candidate);
    }
    const int w = art.inputWidth();
    for (int i = 0; i < 2000; ++i) {
      BitVector b(w);
      for (int j = 0; j < w; ++j) b.set(j, rng() & 1u);
      probes.push_back(b);
    }
    int marked = 0;
    for (const BitVector& cand : probes) {
      const bool o = evaluateOracle(art, cand);
      ASSERT_EQ(o, satisfies(p.config, cand, p.spec))
          << name << " " << cand.toString();
      marked += o;
    }
    EXPECT_GT(marked, 0) << name;
  }
}

TEST(Oracle, ExhaustiveOnRestrictedRegister) {
  // Case study with the result displays fixed: 16 free bits.
  const Puzzle p = corpus("case_study.puz");
  const OracleArtifact art = compileOracle(p.config, p.spec);
  const Restriction r = fixDisplays(p.config, {2, 3});
  kernels::SweepSpec spec;
  std::vector<int> free;
  for (int i = 0; i < art.inputWidth(); ++i) {
    if (i >= 14 && i < 28) {
      spec.fixed.push_back({art.inputWires[i], p.config.displays[(i - 14) / 7 + 2].lit((i - 14) % 7)});
    } else {
      spec.freeWires.push_back(art.inputWires[i]);
      free.push_back(i);
    }
  }
  spec.mustRestore = art.ancillaWires;
  spec.output = art.outputWire;
  const kernels::MarkTable marks = kernels::sweepSliced(art.circuit, spec);
  BitVector base(art.inputWidth());
  for (const auto& [pos, bit] : r) base.set(pos, bit);
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << free.size()); ++i) {
    BitVector cand = base;
    for (std::size_t b = 0; b < free.size(); ++b) {
      cand.set(free[b], (i >> (free.size() - 1 - b)) & 1u);
    }
    ASSERT_EQ(kernels::marked(marks, i), satisfies(p.config, cand, p.spec)) << cand.toString();
    count += kernels::marked(marks, i);
  }
  EXPECT_EQ(count, 2u);
}

TEST(Oracle, AtMostAndSearchedKVariants) {
  std::mt19937 rng(9);
  for (KMode mode : {KMode::Exact, KMode::AtMost}) {
    for (bool search : {false, true}) {
      for (int factor : {1, 2}) {
        Puzzle p = corpus("six_plus_four.puz");
        p.config.kMode = mode;
        p.config.kBudget = 2;
        p.spec = equationConstraints(p.config, 1, 1, 1, factor, search);
        const OracleArtifact art = compileOracle(p.config, p.spec);
        std::vector<BitVector> probes = nearDigitCandidates(p, rng, 3000);
        for (const auto& e : solveClassical(p.config, p.spec).entries) {
          probes.push_back(e.candidate);
        }
        for (const BitVector& cand : probes) {
          ASSERT_EQ(evaluateOracle(art, cand), satisfies(p.config, cand, p.spec))
              << cand.toString();
        }
      }
    }
  }
}

TEST(Oracle, SingleOperatorAllowed) {
  std::mt19937 rng(4);
  for (Op only : {Op::Plus, Op::Minus}) {
    Puzzle p = corpus("nine_minus_five.puz");
    p.spec.allowedOps = {only};
    const OracleArtifact art = compileOracle(p.config, p.spec);
    for (const BitVector& cand : nearDigitCandidates(p, rng, 3000)) {
      ASSERT_EQ(evaluateOracle(art, cand), satisfies(p.config, cand, p.spec));
    }
  }
}

TEST(Oracle, UnsupportedOperatorsAndShapes) {
  Puzzle p = corpus("six_plus_four.puz");
  p.spec.allowedOps = {Op::Plus, Op::Times};
  EXPECT_THROW(compileOracle(p.config, p.spec), UnsupportedFeatureError);

  Puzzle q = parsePuzzle("equation: 123+4=127\n");
  EXPECT_THROW(compileOracle(q.config, q.spec), UnsupportedFeatureError);
}

TEST(Oracle, AncillaBudget) {
  const Puzzle p = corpus("case_study.puz");
  const OracleArtifact art = compileOracle(p.config, p.spec);
  const int need = static_cast<int>(art.ancillaWires.size());
  EXPECT_NO_THROW(compileOracle(p.config, p.spec, {need}));
  EXPECT_THROW(compileOracle(p.config, p.spec, {need - 1}), CapacityError);
}

TEST(Oracle, CostAndNetlistAreConsistent) {
  const Puzzle p = corpus("case_study.puz");
  const OracleArtifact art = compileOracle(p.config, p.spec);
  EXPECT_EQ(art.cost, cost(art.circuit));
  EXPECT_EQ(art.cost.nInput, 30);
  EXPECT_EQ(art.cost.nOutput, 1);
  const Circuit back = parseNetlist(writeNetlist(art.circuit));
  EXPECT_EQ(back, art.circuit);
  const OracleArtifact wrapped = oracleFromCircuit(back);
  EXPECT_EQ(wrapped.inputWidth(), art.inputWidth());
  std::mt19937 rng(12);
  for (const BitVector& cand : nearDigitCandidates(p, rng, 500)) {
    EXPECT_EQ(evaluateOracle(wrapped, cand), evaluateOracle(art, cand));
  }
}

TEST(Oracle, Deterministic) {
  const Puzzle p = corpus("five_plus_nine.puz");
  EXPECT_EQ(writeNetlist(compileOracle(p.config, p.spec).circuit),
            writeNetlist(compileOracle(p.config, p.spec).circuit));
}

TEST(Oracle, SidecarJson) {
  const Puzzle p = corpus("case_study.puz");
  const OracleArtifact art = compileOracle(p.config, p.spec);
  const auto j = nlohmann::json::parse(oracleSidecarJson(art));
  EXPECT_EQ(j["wires"]["inputs"].size(), 30u);
  EXPECT_EQ(j["wires"]["output"], "out");
  EXPECT_EQ(j["cost"]["gates"], art.cost.nTotalGates);
  EXPECT_EQ(j["puzzle"]["hd_factor"], 2);
  EXPECT_EQ(j["puzzle"]["displays"][2], "1111110");
}

TEST(Candidate, EncodeDecodeRoundTrip) {
  const Puzzle p = corpus("five_plus_nine.puz");
  const std::vector<SegmentCode> d = {encodeDigit(3), encodeDigit(6),
                                      encodeDigit(0), SegmentCode(0x55)};
  const std::vector<std::uint32_t> ops = {1};
  const BitVector v = encodeCandidate(p.config, p.spec, d, ops, 5);
  const DecodedCandidate back = decodeCandidate(p.config, p.spec, v);
  EXPECT_EQ(back.displays, d);
  EXPECT_EQ(back.operatorCodes, ops);
  EXPECT_EQ(back.operators[0], Op::Minus);
  EXPECT_EQ(back.k, 5);
  EXPECT_EQ(renderCandidate(p.config, p.spec, v), "3-6=0?");
  EXPECT_THROW(decodeCandidate(p.config, p.spec, BitVector(5)), DomainError);
}

}  // namespace
}  // namespace segrover
