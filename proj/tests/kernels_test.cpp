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

#include <complex>
#include <random>
#include <set>

#include "segrover/errors.hpp"
#include "segrover/kernels.hpp"

namespace segrover {
namespace {

using kernels::MarkTable;
using kernels::SweepSpec;

// Random reversible circuit on in + anc + 1 wires that computes into the
// output and uncomputes the ancillas.
Circuit randomOracle(std::mt19937& rng, int in, int anc) {
  Circuit c;
  c.addRegister("i", in, WireRole::Input);
  c.addRegister("a", anc, WireRole::Ancilla);
  const WireId out = c.addWire("o", WireRole::Output);
  std::uniform_int_distribution<int> pick(0, in + anc - 1);
  for (int g = 0; g < 25; ++g) {
    const WireId t = static_cast<WireId>(in + (rng() % anc));
    std::vector<Control> ctl;
    std::set<WireId> used = {t};
    for (int k = 0; k < 3; ++k) {
      const WireId w = static_cast<WireId>(pick(rng));
      if (used.insert(w).second) ctl.push_back({w, rng() % 2 == 0});
    }
    c.mcx(ctl, t);
  }
  const std::size_t n = c.gateCount();
  std::vector<Control> fin;
  for (int a = 0; a < anc; ++a) fin.push_back({static_cast<WireId>(in + a), a % 2 == 0});
  c.mcx(fin, out);
  c.appendReversed(0, n);
  return c;
}

SweepSpec specFor(const Circuit& c, int in, int fixedCount) {
  SweepSpec s;
  for (int i = 0; i < in; ++i) {
    if (i < fixedCount) {
      s.fixed.push_back({static_cast<WireId>(i), i % 2 == 1});
    } else {
      s.freeWires.push_back(static_cast<WireId>(i));
    }
  }
  s.mustRestore = c.wiresWithRole(WireRole::Ancilla);
  s.output = *c.findWire("o");
  return s;
}

TEST(Sweep, SlicedMatchesSerial) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const Circuit c = randomOracle(rng, 10, 4);
    for (int fixed : {0, 2, 5}) {
      const SweepSpec s = specFor(c, 10, fixed);
      EXPECT_EQ(kernels::sweepSliced(c, s), kernels::sweepSerial(c, s));
    }
  }
}

TEST(Sweep, SmallRegistersUseOnePartialWord) {
  std::mt19937 rng(37);
  const Circuit c = randomOracle(rng, 8, 3);
  const SweepSpec s = specFor(c, 8, 5);
  const MarkTable m = kernels::sweepSliced(c, s);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0] >> 8, 0u);
  EXPECT_EQ(m, kernels::sweepSerial(c, s));
}

TEST(Sweep, DirtyAncillaIsReported) {
  Circuit c;
  c.addRegister("i", 3, WireRole::Input);
  const WireId a = c.addWire("a", WireRole::Ancilla);
  const WireId o = c.addWire("o", WireRole::Output);
  c.cx({0}, a);
  c.cx({a}, o);
  SweepSpec s;
  s.freeWires = {0, 1, 2};
  s.mustRestore = {a};
  s.output = o;
  EXPECT_THROW(kernels::sweepSliced(c, s), InternalError);
  EXPECT_THROW(kernels::sweepSerial(c, s), InternalError);
}

TEST(Sweep, EvaluateIndicesMatchesFullSweep) {
  std::mt19937 rng(41);
  const Circuit c = randomOracle(rng, 12, 4);
  const SweepSpec s = specFor(c, 12, 0);
  const MarkTable full = kernels::sweepSliced(c, s);
  std::vector<std::uint64_t> idx;
  for (int i = 0; i < 300; ++i) idx.push_back(rng() % 4096);
  const kernels::SlicedProgram p(c);
  const MarkTable some = kernels::evaluateIndices(p, s, idx);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    EXPECT_EQ(kernels::marked(some, i), kernels::marked(full, idx[i]));
  }
}

TEST(Amplitudes, ParallelMatchesSerial) {
  std::mt19937 rng(43);
  const std::size_t n = 1 << 12;
  MarkTable marks(n / 64, 0);
  for (int i = 0; i < 7; ++i) {
    const auto m = rng() % n;
    marks[m / 64] |= 1ull << (m % 64);
  }
  std::vector<std::complex<double>> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = b[i] = {std::sin(0.1 * i), std::cos(0.3 * i)};
  }
  for (int r = 0; r < 5; ++r) {
    kernels::phaseFlipSerial<std::complex<double>>(a, marks);
    kernels::diffuseSerial<std::complex<double>>(a);
    kernels::phaseFlipParallel<std::complex<double>>(b, marks);
    kernels::diffuseParallel<std::complex<double>>(b);
  }
  double na = 0;
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_NEAR(std::abs(a[i] - b[i]), 0.0, 1e-9);
    na += kernels::norm2(a[i]);
  }
  double n0 = 0;
  for (std::size_t i = 0; i < n; ++i) n0 += std::norm(std::complex<double>{std::sin(0.1 * i), std::cos(0.3 * i)});
  EXPECT_NEAR(na, n0, 1e-6);
}

TEST(Amplitudes, MarkedProbabilityAndCount) {
  MarkTable marks = {0b1011};
  EXPECT_EQ(kernels::countMarks(marks), 3u);
  std::vector<double> amps(64, 0.125);
  EXPECT_NEAR(kernels::markedProbability<double>(amps, marks), 3.0 / 64, 1e-12);
}

}  // namespace
}  // namespace segrover
